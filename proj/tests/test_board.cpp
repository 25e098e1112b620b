#include <catch2/catch_amalgamated.hpp>

#include "data_path.hpp"
#include "hexcgt/board.hpp"
#include "hexcgt/form_io.hpp"
#include "hexcgt/region_game.hpp"

using namespace hexcgt;

namespace {

Region load_region(const std::string& file) {
  return region_of_position(parse_position(slurp(data_file(file))));
}

}  // namespace

TEST_CASE("position format round trip") {
  std::string text = slurp(data_file("value-example.pos"));
  Position p = parse_position(text);
  CHECK(print_position(p) == text);
  CHECK(p.board.cols() == 4);
  CHECK(p.board.at({2, 1}) == Cell::White);
  CHECK(p.board.at({1, 1}) == Cell::Out);
  CHECK(p.empty_count() == 2);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_position("hex 2\n"), PositionParseError);
  CHECK_THROWS_AS(parse_position("hex 2 1\n.X\n"), PositionParseError);
  CHECK_THROWS_AS(parse_position("hex 2 1\n..\nnope 1\n"), PositionParseError);
  try {
    parse_position("hex 2 1\n.X\n");
    FAIL("expected throw");
  } catch (const PositionParseError& e) {
    CHECK(e.line_number == 2);
  }
}

TEST_CASE("value example region expands to the exact printed form") {
  Universe u;
  Region r = load_region("value-example.pos");
  CHECK(region_is_surrounded(r));
  const GameNode* g = region_value(u, r);
  // same option sets as the printed form; the printer uses the canonical
  // structural order, so compare through the parser
  CHECK(g == parse_value(u, "{{top|top},{top|a}|{a|bot},{top|bot}}"));
  CHECK(print_value(u, g) == "{{top|a},{top|top}|{a|bot},{top|bot}}");
  CHECK(canonical(u, region_canonical_value(u, r)) ==
        canonical(u, g));
}

TEST_CASE("completion outcomes of the value example") {
  Universe u;
  Region r = load_region("value-example.pos");
  Region c = r;
  c.board.set({2, 2}, Cell::Black);
  c.board.set({3, 2}, Cell::Black);
  CHECK(Poset::p3().name_of(RegionGame(c).outcome_atom(RegionGame(c).initial())) ==
        "top");
  c.board.set({2, 2}, Cell::White);
  CHECK(Poset::p3().name_of(RegionGame(c).outcome_atom(RegionGame(c).initial())) ==
        "a");
  c.board.set({3, 2}, Cell::White);
  CHECK(Poset::p3().name_of(RegionGame(c).outcome_atom(RegionGame(c).initial())) ==
        "bot");
}

TEST_CASE("terminal partition of completions") {
  Universe u;
  Region r = load_region("value-example.pos");
  r.board.set({2, 2}, Cell::White);
  r.board.set({3, 2}, Cell::Black);
  RegionGame g(r);
  std::vector<int> part = g.terminal_partition(g.initial());
  // black at y joins terminals 2 and 3 (outcome a); terminal 1 separate
  CHECK(part[1] == part[2]);
  CHECK(part[0] != part[1]);
}

TEST_CASE("all-white fill gives the discrete partition") {
  Region r = load_region("value-example.pos");
  r.board.set({2, 2}, Cell::White);
  r.board.set({3, 2}, Cell::White);
  RegionGame g(r);
  std::vector<int> part = g.terminal_partition(g.initial());
  CHECK(part[0] != part[1]);
  CHECK(part[1] != part[2]);
  CHECK(part[0] != part[2]);
}

TEST_CASE("superswitch tile evaluates to the superswitch value") {
  Universe u;
  Region r = load_region("g1-tile.pos");
  CHECK(r.empty_count() == 12);
  CHECK(region_is_surrounded(r));
  const GameNode* val = region_canonical_value(u, r);
  CHECK(print_value(u, val) == "{a,b|a}");
}

TEST_CASE("simpleswitch tile evaluates to H_1") {
  Universe u;
  Region r = load_region("h1-tile.pos");
  CHECK(r.empty_count() == 6);
  const GameNode* val = region_canonical_value(u, r);
  CHECK(print_value(u, val) == "{a,{top|b}|a}");
}

TEST_CASE("raw region forms are monotone; canonical values passable") {
  Universe u;
  Region r = load_region("value-example.pos");
  const GameNode* raw = region_value(u, r);
  CHECK(is_monotone(u, raw));
  CHECK(is_passable(u, canonical(u, raw)));

  Region h = load_region("h1-tile.pos");
  const GameNode* hraw = region_value(u, h);
  CHECK(is_monotone(u, hraw));
  CHECK(is_passable(u, canonical(u, hraw)));
}

TEST_CASE("adding a black stone never lowers the region value") {
  Universe u;
  Region r = load_region("value-example.pos");
  const GameNode* base = region_canonical_value(u, r);
  for (Coord c : r.cells) {
    if (r.board.at(c) != Cell::Empty) continue;
    Region rb = r;
    rb.board.set(c, Cell::Black);
    CHECK(u.leq(base, region_canonical_value(u, rb)));
    Region rw = r;
    rw.board.set(c, Cell::White);
    CHECK(u.leq(region_canonical_value(u, rw), base));
  }
}

TEST_CASE("transforms") {
  Position p = parse_position(slurp(data_file("value-example.pos")));
  CHECK(print_position(transform_mirror(transform_mirror(p))) == print_position(p));
  CHECK(print_position(transform_rotate180(transform_rotate180(p))) ==
        print_position(p));
  CHECK(print_position(transform_translate(p, 0, 0)) == print_position(p));
  CHECK_THROWS_AS(transform_translate(p, 3, 0), BoardError);
  Position sw = transform_color_swap(p);
  CHECK(sw.board.at({3, 1}) == Cell::White);
  CHECK(sw.board.at({2, 1}) == Cell::Black);
  CHECK(print_position(transform_color_swap(sw)) == print_position(p));
}

TEST_CASE("fork regions collapse outcome c to bot") {
  Universe u;
  // a tiny synthetic fork: one empty cell between terminals 1 and 2
  Position p = parse_position(
      "hex 3 3\n"
      "B.B\n"
      "W#W\n"
      "#B#\n"
      "kind fork\n"
      "terminal 1 1,1\n"
      "terminal 2 3,1\n"
      "terminal 3 2,3\n");
  Region r = region_of_position(p);
  Region c = r;
  c.board.set({2, 1}, Cell::Black);
  RegionGame g(c, true, false);
  // the stone joins terminals 1 and 2 but not 3: p3 outcome c, fork bot
  CHECK(Poset::fork().name_of(g.outcome_atom(g.initial())) == "bot");
  // the same completion read as a generic 3-terminal region shows c
  Region cp = c;
  cp.kind = RegionKind::Generic3;
  RegionGame gp(cp, true, false);
  CHECK(Poset::p3().name_of(gp.outcome_atom(gp.initial())) == "c");
}

TEST_CASE("degenerate region with no empty cells evaluates to its atom") {
  Universe u;
  Region r = load_region("value-example.pos");
  r.board.set({2, 2}, Cell::Black);
  r.board.set({3, 2}, Cell::Black);
  const GameNode* g = region_value(u, r);
  CHECK(g->is_atom());
  CHECK(g->poset->name_of(g->atom) == "top");
}

TEST_CASE("unsurrounded region rejected by region_value") {
  Position p = parse_position(
      "hex 2 1\n"
      ".B\n"
      "kind two_terminal\n"
      "terminal 1 2,1\n"
      "terminal 2 2,1\n");
  Region r = region_of_position(p);
  CHECK_FALSE(region_is_surrounded(r));
  Universe u;
  CHECK_THROWS_AS(region_value(u, r), BoardError);
}
