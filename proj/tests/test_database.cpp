#include <catch2/catch_amalgamated.hpp>

#include "data_path.hpp"
#include "hexcgt/database.hpp"

using namespace hexcgt;

namespace {

std::vector<DbEntry> load_excerpt() {
  std::istringstream in(slurp(data_file("realizable-excerpt.db")));
  return parse_database(in);
}

}  // namespace

TEST_CASE("builtin primaries load and validate") {
  PrimaryLib lib = PrimaryLib::builtin();
  CHECK(lib.size() == 32);
  CHECK(lib.at(1).arity() == 2);
  CHECK(lib.at(5).arity() == 3);
  CHECK(lib.at(1).empty_cells() == 1);
  CHECK(lib.at(5).empty_cells() == 3);
  CHECK(lib.at(9).empty_cells() == 4);
  CHECK_THROWS_AS(lib.at(33), DatabaseError);
}

TEST_CASE("external primaries file extends the library") {
  PrimaryLib lib = PrimaryLib::builtin();
  lib.load_text(slurp(data_file("primaries-extra.txt")));
  CHECK(lib.size() == 122);
  CHECK(lib.at(122).arity() == 3);
}

TEST_CASE("composition grammar round trip") {
  for (const char* text : {
           "Empty",
           "Eq(1,2,3)",
           "Eq(2,3), P1(1,2)",
           "P3op(2,3,1)",
           "P5(1,3,2)x",
           "P5op(4,5,1), P15op(4,6,2)x, P25op(6,5,3)x",
           "P1(3,4), P3op(4,5,3), P3(2,4,6), P5(2,1,6)x, P9(2,5,4)",
       }) {
    CompositionExpr e = parse_composition(text);
    CHECK(print_composition(e) == text);
  }
  CHECK_THROWS_AS(parse_composition("P5(1,2,"), CompositionParseError);
  CHECK_THROWS_AS(parse_composition("Q7(1)"), CompositionParseError);
  CHECK_THROWS_AS(parse_composition(""), CompositionParseError);
}

TEST_CASE("dangling internal labels are inert wire ends") {
  Universe u;
  PrimaryLib lib = PrimaryLib::builtin();
  // slot 3 wired to nothing behaves like the unused external of P5(1,2,3)
  // with terminal 3 renamed away
  const GameNode* stub = expr_value(u, parse_composition("P5(1,2,7)"), lib);
  CHECK(stub->poset == &Poset::p3());
  CHECK_THROWS_AS(parse_composition("P5(0,1,2)"), CompositionParseError);
  CHECK_THROWS_AS(expr_value(u, parse_composition("P99(1,2,3)"), lib),
                  DatabaseError);
}

TEST_CASE("atomic composition values") {
  Universe u;
  PrimaryLib lib = PrimaryLib::builtin();
  CHECK(print_value(u, expr_value(u, parse_composition("Empty"), lib)) == "bot");
  CHECK(print_value(u, expr_value(u, parse_composition("Eq(1,2,3)"), lib)) ==
        "top");
  CHECK(print_value(u, expr_value(u, parse_composition("Eq(2,3)"), lib)) == "a");
  CHECK(print_value(u, expr_value(u, parse_composition("P1(2,3)"), lib)) ==
        "{a|bot}");
  CHECK(print_value(u, expr_value(u, parse_composition("P1(1,2)"), lib)) ==
        "{c|bot}");
}

TEST_CASE("every excerpt line verifies") {
  Universe u;
  PrimaryLib lib = PrimaryLib::builtin();
  std::vector<DbEntry> db = load_excerpt();
  CHECK(db.size() == 15);
  for (const DbEntry& e : db) {
    std::string why;
    INFO(print_entry(e));
    CHECK(verify_entry(u, e, lib, &why));
    INFO(why);
  }
}

TEST_CASE("tampered entries fail verification") {
  Universe u;
  PrimaryLib lib = PrimaryLib::builtin();
  DbEntry bogus{0, "top", "Empty"};
  CHECK_FALSE(verify_entry(u, bogus, lib));
  DbEntry wrong_count{3, "{a|bot}", "P1(2,3)"};
  CHECK_FALSE(verify_entry(u, wrong_count, lib));
}

TEST_CASE("expr_value is invariant under internal relabeling") {
  Universe u;
  PrimaryLib lib = PrimaryLib::builtin();
  const GameNode* v1 = expr_value(
      u, parse_composition("P5op(4,5,1), P15op(4,6,2)x, P25op(6,5,3)x"), lib);
  const GameNode* v2 = expr_value(
      u, parse_composition("P5op(9,8,1), P15op(9,7,2)x, P25op(7,8,3)x"), lib);
  CHECK(v1 == v2);
}

TEST_CASE("the fourteen-cell entry is the pivoting context") {
  Universe u;
  PrimaryLib lib = PrimaryLib::builtin();
  const GameNode* v = expr_value(
      u, parse_composition("P5op(4,5,1), P15op(4,6,2)x, P25op(6,5,3)x"), lib);
  CHECK(print_value(u, v) == "{a,b|{a,b|{a|bot}}}");
}

TEST_CASE("generation from atomic seeds") {
  Universe u;
  PrimaryLib lib = PrimaryLib::builtin();
  std::vector<DbEntry> seeds = {
      {0, "bot", "Empty"},
      {0, "top", "Eq(1,2,3)"},
      {0, "a", "Eq(2,3)"},
      {0, "b", "Eq(1,3)"},
      {0, "c", "Eq(1,2)"},
      {1, "{a|bot}", "P1(2,3)"},
      {1, "{top|a}", "Eq(2,3), P1(1,2)"},
  };
  GenerateLimits limits;
  limits.max_rounds = 1;
  limits.max_entries = 400;
  GenerateStatus status;
  std::vector<DbEntry> db = generate(u, seeds, lib, limits, &status);
  CHECK(db.size() > seeds.size());
  // the relabel closure of the atoms covers all five
  auto has_value = [&](const std::string& v) {
    for (const DbEntry& e : db)
      if (e.value == v) return true;
    return false;
  };
  CHECK(has_value("a"));
  CHECK(has_value("b"));
  CHECK(has_value("c"));
  // relabelings of {a|bot} and the dual {top|a} family appear
  CHECK(has_value("{b|bot}"));
  CHECK(has_value("{c|bot}"));
  CHECK(has_value("{top|b}"));
  // every generated entry verifies
  for (const DbEntry& e : db) {
    std::string why;
    INFO(print_entry(e));
    CHECK(verify_entry(u, e, lib, &why));
  }
  // determinism: a second run yields byte-identical output
  Universe u2;
  std::vector<DbEntry> db2 = generate(u2, seeds, lib, limits);
  CHECK(print_database(db) == print_database(db2));
}

TEST_CASE("pinwheel closure reaches the hex tripleswitch value") {
  Universe u;
  PrimaryLib lib = PrimaryLib::builtin();
  // seed with the superswitch entry; one round of pinwheels must produce
  // canonical(T'_0) = canonical(pinwheel of three G_2)... G_2 needs the
  // twelve-cell realization chained; instead seed the G_2 value via the
  // concatenation expression from the excerpt line plus one more level.
  std::vector<DbEntry> db = load_excerpt();
  DbEntry super = db[13];
  REQUIRE(super.value == "{a,b|a}");
  GenerateLimits limits;
  limits.max_rounds = 1;
  limits.max_entries = 800;
  std::vector<DbEntry> out = generate(u, {super}, lib, limits);
  const GameNode* want =
      canonical(u, pinwheel3(u, parse_value(u, "{a,b|a}"),
                             parse_value(u, "{a,b|a}"), parse_value(u, "{a,b|a}")));
  bool found = false;
  for (const DbEntry& e : out)
    if (e.value == print_value(u, want)) found = true;
  CHECK(found);
}

TEST_CASE("dual closure of pinwheel-built entries verifies") {
  Universe u;
  PrimaryLib lib = PrimaryLib::builtin();
  std::vector<DbEntry> seeds = {
      {0, "a", "Eq(2,3)"},
      {0, "b", "Eq(1,3)"},
      {1, "{a|bot}", "P1(2,3)"},
  };
  GenerateLimits limits;
  limits.max_rounds = 2;
  limits.max_entries = 700;
  std::vector<DbEntry> db = generate(u, seeds, lib, limits);
  int composite = 0;
  for (const DbEntry& e : db) {
    std::string why;
    INFO(print_entry(e));
    CHECK(verify_entry(u, e, lib, &why));
    if (parse_composition(e.expr).components.size() >= 3) ++composite;
  }
  CHECK(composite >= 5);
  // the full symmetry group applied twice adds nothing: regenerate from the
  // output and expect the same set
  std::vector<DbEntry> again = generate(u, db, lib, GenerateLimits{50, 1, 700});
  CHECK(print_database(again) == print_database(generate(u, db, lib, GenerateLimits{50, 1, 700})));
}

TEST_CASE("quotient databases") {
  Universe u;
  std::vector<DbEntry> db = load_excerpt();
  std::vector<DbEntry> fork = quotient_db(u, db, quotient_map("p3_to_fork"));
  std::vector<DbEntry> corner = quotient_db(u, db, quotient_map("p3_to_corner"));
  CHECK(fork.size() <= db.size());
  CHECK(corner.size() <= db.size());
  // bot and c collapse to one fork entry
  int bots = 0;
  for (const DbEntry& e : fork)
    if (e.value == "bot") ++bots;
  CHECK(bots == 1);
  // the c-flavored switch becomes a bot-flavored one under the fork map
  bool found = false;
  for (const DbEntry& e : fork)
    if (e.value == "{a,{top|bot}|bot}" || e.value == "{a,{top|b}|bot}") found = true;
  CHECK(found);
}

TEST_CASE("assembling a single component reproduces the fragment") {
  Universe u;
  PrimaryLib lib = PrimaryLib::builtin();
  CompositionExpr e = parse_composition("P5(1,2,3)");
  AssemblyLayout layout;
  layout.cols = lib.at(5).fragment.cols();
  layout.rows = lib.at(5).fragment.rows();
  layout.placements.push_back({0, 0, 0, false});
  Position p = assemble_board(u, e, lib, layout);
  CHECK(p.board == lib.at(5).fragment);
}

TEST_CASE("overlapping empty interiors are rejected") {
  Universe u;
  PrimaryLib lib = PrimaryLib::builtin();
  CompositionExpr e = parse_composition("P1(1,2), P1(2,3)");
  AssemblyLayout layout;
  layout.cols = lib.at(1).fragment.cols();
  layout.rows = lib.at(1).fragment.rows();
  layout.placements.push_back({0, 0, 0, false});
  layout.placements.push_back({0, 0, 0, false});
  CHECK_THROWS_AS(assemble_board(u, e, lib, layout), DatabaseError);
}
