#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "data_path.hpp"
#include "hexcgt/solver.hpp"

using namespace hexcgt;

namespace {

Position empty_board(int n) {
  Position p;
  p.board = Board(n, n);
  p.kind = RegionKind::WholeBoard;
  return p;
}

Position load(const std::string& name) {
  return parse_position(slurp(data_file(name)));
}

}  // namespace

TEST_CASE("first player wins empty boards up to 3x3") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(winner(empty_board(n), Player::Black) == Player::Black);
    CHECK(winner(empty_board(n), Player::White) == Player::White);
  }
}

TEST_CASE("single cell win") {
  Position p = empty_board(1);
  SolveResult r = winning_moves(p, Player::Black);
  REQUIRE(r.winning_moves.size() == 1);
  CHECK(r.winning_moves[0] == Coord{1, 1});
}

TEST_CASE("decided positions") {
  Position p = empty_board(2);
  p.board.set({1, 1}, Cell::Black);
  p.board.set({1, 2}, Cell::Black);
  CHECK(winner(p, Player::White) == Player::Black);
  // a fully decided position has no winning moves for the loser
  SolveResult r = winning_moves(p, Player::White);
  CHECK(r.winning_moves.empty());
  CHECK_FALSE(unique_winning_move(p, Player::White).has_value());
}

TEST_CASE("empty 2x2 has several winning first moves") {
  SolveResult r = winning_moves(empty_board(2), Player::Black);
  CHECK(r.winning_moves.size() > 1);
  CHECK_FALSE(unique_winning_move(empty_board(2), Player::Black).has_value());
}

TEST_CASE("ziggurat witness has the announced unique winning move") {
  Position p = load("witness-ziggurat-4ex.pos");
  SolveResult r = winning_moves(p, Player::White);
  REQUIRE(r.winning_moves.size() == 1);
  CHECK(r.winning_moves[0] == p.marks.at("win"));
}

TEST_CASE("small witnesses from the manifest verify") {
  std::istringstream manifest(slurp(data_file("witnesses.manifest")));
  std::string file;
  int empties;
  int verified = 0;
  while (manifest >> file >> empties) {
    if (empties > 12) continue;
    Position p = load(file);
    INFO(file);
    std::optional<Coord> m = unique_winning_move(p, Player::White);
    REQUIRE(m.has_value());
    CHECK(*m == p.marks.at("win"));
    ++verified;
  }
  CHECK(verified >= 6);
}

TEST_CASE("oversized positions exhaust the budget loudly") {
  Position p = load("witness-ziggurat-7-large.pos");
  CHECK_THROWS_AS(winning_moves(p, Player::White, 200'000), BudgetExceeded);
}

TEST_CASE("zero-sum consistency of move classification") {
  Position p = load("witness-trapezoid-1.pos");
  Solver s(p.board);
  Player w = winner(p, Player::White);
  SolveResult r = winning_moves(p, Player::White);
  if (w == Player::White) CHECK_FALSE(r.winning_moves.empty());
  // every empty cell is exactly one of winning / losing
  int empties = 0;
  for (Coord c : p.board.all_cells())
    if (p.board.at(c) == Cell::Empty) ++empties;
  for (Coord c : r.winning_moves) CHECK(p.board.at(c) == Cell::Empty);
  Position q = p;
  for (Coord c : q.board.all_cells()) {
    if (q.board.at(c) != Cell::Empty) continue;
    q.board.set(c, Cell::White);
    bool wins = winner(q, Player::Black) == Player::White;
    q.board.set(c, Cell::Empty);
    bool listed = std::find(r.winning_moves.begin(), r.winning_moves.end(), c) !=
                  r.winning_moves.end();
    CHECK(wins == listed);
  }
}

TEST_CASE("color symmetry on random small positions") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    Position p = empty_board(3);
    for (Coord c : p.board.all_cells()) {
      int r = static_cast<int>(rng() % 4);
      if (r == 0) p.board.set(c, Cell::Black);
      else if (r == 1) p.board.set(c, Cell::White);
    }
    Position q = transform_color_swap(transform_mirror(p));
    for (Player tm : {Player::Black, Player::White}) {
      Player w = winner(p, tm);
      Player wq = winner(q, other(tm));
      CHECK(wq == other(w));
    }
  }
}

TEST_CASE("adding a black stone never flips the winner to white") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 8; ++trial) {
    Position p = empty_board(3);
    for (Coord c : p.board.all_cells()) {
      int r = static_cast<int>(rng() % 5);
      if (r == 0) p.board.set(c, Cell::Black);
      else if (r == 1) p.board.set(c, Cell::White);
    }
    for (Player tm : {Player::Black, Player::White}) {
      if (winner(p, tm) != Player::Black) continue;
      for (Coord c : p.board.all_cells()) {
        if (p.board.at(c) != Cell::Empty) continue;
        Position q = p;
        q.board.set(c, Cell::Black);
        CHECK(winner(q, tm) == Player::Black);
      }
    }
  }
}
