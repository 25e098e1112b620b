#pragma once

#include "hexcgt/board.hpp"
#include "hexcgt/game.hpp"
#include "hexcgt/sums.hpp"

namespace hexcgt {

enum class Player : uint8_t { Black, White };

inline Player other(Player p) {
  return p == Player::Black ? Player::White : Player::Black;
}
inline const char* player_name(Player p) {
  return p == Player::Black ? "black" : "white";
}
inline Cell stone_of(Player p) {
  return p == Player::Black ? Cell::Black : Cell::White;
}

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(uint64_t nodes)
      : std::runtime_error("solver budget exceeded after " +
                           std::to_string(nodes) + " nodes"),
        nodes_searched(nodes) {}
  uint64_t nodes_searched;
};

struct SolveResult {
  Player winner;
  std::vector<Coord> winning_moves;  // for the player to move; empty if lost
  uint64_t nodes = 0;
};

// Exact winner search for whole-board positions at desk scale: depth-first
// with a transposition table on the full stone assignment, connectivity by
// breadth-first search after each placement, center-out move ordering and a
// configurable node budget.
class Solver {
 public:
  explicit Solver(const Board& board, uint64_t budget = 50'000'000)
      : board_(board), budget_(budget) {
    for (Coord c : board_.all_cells()) cells_.push_back(c);
    order_ = cells_;
    double cx = (board_.cols() + 1) / 2.0, cy = (board_.rows() + 1) / 2.0;
    std::sort(order_.begin(), order_.end(), [&](Coord a, Coord b) {
      double da = (a.x - cx) * (a.x - cx) + (a.y - cy) * (a.y - cy);
      double db = (b.x - cx) * (b.x - cx) + (b.y - cy) * (b.y - cy);
      if (da != db) return da < db;
      return a < b;
    });
  }

  uint64_t nodes_searched() const { return nodes_; }

  // Is `p` connected between their two edges right now?
  bool connected(Player p) const {
    EdgeSide from = p == Player::Black ? EdgeSide::Top : EdgeSide::Left;
    EdgeSide to = p == Player::Black ? EdgeSide::Bottom : EdgeSide::Right;
    Cell mine = stone_of(p);
    std::vector<Coord> stack;
    std::set<std::pair<int, int>> seen;
    for (Coord c : cells_)
      if (board_.at(c) == mine && board_.touches_edge(c, from)) {
        stack.push_back(c);
        seen.insert({c.x, c.y});
      }
    while (!stack.empty()) {
      Coord c = stack.back();
      stack.pop_back();
      if (board_.touches_edge(c, to)) return true;
      for (const Coord& d : kNeighborDeltas) {
        Coord n{c.x + d.x, c.y + d.y};
        if (board_.at(n) != mine || seen.count({n.x, n.y})) continue;
        seen.insert({n.x, n.y});
        stack.push_back(n);
      }
    }
    return false;
  }

  Player winner(Player to_move) {
    if (connected(Player::Black)) return Player::Black;
    if (connected(Player::White)) return Player::White;
    return search(to_move) ? to_move : other(to_move);
  }

  SolveResult solve(Player to_move) {
    SolveResult res{winner(to_move), {}, 0};
    for (Coord c : order_) {
      if (board_.at(c) != Cell::Empty) continue;
      board_.set(c, stone_of(to_move));
      bool wins = connected(to_move) || !search(other(to_move));
      board_.set(c, Cell::Empty);
      if (wins) res.winning_moves.push_back(c);
    }
    std::sort(res.winning_moves.begin(), res.winning_moves.end());
    res.nodes = nodes_;
    return res;
  }

 private:
  // true when the side to move wins with perfect play
  bool search(Player to_move) {
    if (++nodes_ > budget_) throw BudgetExceeded(nodes_);
    std::vector<uint64_t> key = pack(to_move);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    // mandatory-move shortcut: an immediately winning placement ends it
    bool any_move = false;
    for (Coord c : order_) {
      if (board_.at(c) != Cell::Empty) continue;
      any_move = true;
      board_.set(c, stone_of(to_move));
      bool won = connected(to_move);
      board_.set(c, Cell::Empty);
      if (won) {
        table_.emplace(std::move(key), true);
        return true;
      }
    }
    if (!any_move) {
      // filled board: exactly one side is connected
      bool black = connected(Player::Black);
      bool win = (to_move == Player::Black) == black;
      table_.emplace(std::move(key), win);
      return win;
    }
    bool win = false;
    for (Coord c : order_) {
      if (board_.at(c) != Cell::Empty) continue;
      board_.set(c, stone_of(to_move));
      bool opp = search(other(to_move));
      board_.set(c, Cell::Empty);
      if (!opp) {
        win = true;
        break;
      }
    }
    table_.emplace(std::move(key), win);
    return win;
  }

  std::vector<uint64_t> pack(Player to_move) const {
    std::vector<uint64_t> key((cells_.size() + 31) / 32 + 1, 0);
    key[0] = to_move == Player::Black ? 1 : 2;
    for (size_t i = 0; i < cells_.size(); ++i) {
      uint64_t v = static_cast<uint64_t>(board_.at(cells_[i]));
      key[1 + i / 32] |= v << (2 * (i % 32));
    }
    return key;
  }

  Board board_;
  std::vector<Coord> cells_;
  std::vector<Coord> order_;
  uint64_t budget_;
  uint64_t nodes_ = 0;
  std::unordered_map<std::vector<uint64_t>, bool, detail::VecKeyHash> table_;
};

inline Player winner(const Position& p, Player to_move,
                     uint64_t budget = 50'000'000) {
  Solver s(p.board, budget);
  return s.winner(to_move);
}

inline SolveResult winning_moves(const Position& p, Player to_move,
                                 uint64_t budget = 50'000'000) {
  Solver s(p.board, budget);
  return s.solve(to_move);
}

inline std::optional<Coord> unique_winning_move(const Position& p, Player to_move,
                                                uint64_t budget = 50'000'000) {
  SolveResult r = winning_moves(p, to_move, budget);
  if (r.winning_moves.size() == 1) return r.winning_moves[0];
  return std::nullopt;
}

}  // namespace hexcgt
