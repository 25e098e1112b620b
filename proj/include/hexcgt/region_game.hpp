#pragma once

#include "hexcgt/board.hpp"
#include "hexcgt/sums.hpp"

namespace hexcgt {

// Evaluates a region as a game over its kind's outcome poset. Left options
// place black stones, right options white stones; completions map to atoms
// via the black partition of the terminals.
//
// Nodes are interned on the packed assignment of the region's empty cells.
// In collapsing mode a position whose terminal partition can no longer
// change presents as its atom, which keeps the reachable state space small;
// the resulting form is equivalent to the literal expansion. Raw mode
// reproduces the literal expansion exactly (base case: filled completions).
class RegionGame : public LazyExpander {
 public:
  RegionGame(const Region& region, bool collapse = true,
             bool require_surrounded = true)
      : region_(region), collapse_(collapse) {
    if (require_surrounded && !region_is_surrounded(region_))
      throw BoardError("region is not surrounded");
    build();
  }

  const Region& region() const { return region_; }
  int empty_cells() const { return static_cast<int>(slots_.size()); }

  const Poset& poset() const override {
    switch (region_.kind) {
      case RegionKind::TwoTerminal:
      case RegionKind::WholeBoard: return Poset::boolean();
      case RegionKind::Generic3: return Poset::p3();
      case RegionKind::Corner: return Poset::corner();
      case RegionKind::Fork:
      case RegionKind::PivotFork: return Poset::fork();
    }
    throw BoardError("bad kind");
  }

  // Packed assignment of the empty slots: 2 bits each, 0 = still empty,
  // 1 = black, 2 = white.
  using Assign = std::vector<uint64_t>;

  Assign initial() const {
    return Assign(static_cast<size_t>((slots_.size() + 31) / 32), 0);
  }

  static int slot_state(const Assign& a, int slot) {
    return static_cast<int>((a[static_cast<size_t>(slot) / 32] >>
                             (2 * (static_cast<size_t>(slot) % 32))) & 3);
  }
  static void set_slot(Assign& a, int slot, int v) {
    size_t w = static_cast<size_t>(slot) / 32;
    int sh = 2 * (slot % 32);
    a[w] = (a[w] & ~(3ULL << sh)) | (static_cast<uint64_t>(v) << sh);
  }

  const GameNode* node(Universe& u, const Assign& a) const {
    return u.lazy(*this, a);
  }
  const GameNode* root(Universe& u) const { return node(u, initial()); }

  std::optional<Atom> as_atom(const std::vector<uint64_t>& key) const override {
    bool any_empty = false;
    for (size_t i = 0; i < slots_.size(); ++i)
      if (slot_state(key, static_cast<int>(i)) == 0) {
        any_empty = true;
        break;
      }
    if (!any_empty) return outcome_atom(key);
    if (!collapse_) return std::nullopt;
    return determined_atom(key);
  }

  void expand(Universe& u, const GameNode& n,
              std::vector<const GameNode*>& left,
              std::vector<const GameNode*>& right) const override {
    for (size_t i = 0; i < slots_.size(); ++i) {
      if (slot_state(n.key, static_cast<int>(i)) != 0) continue;
      Assign b = n.key;
      set_slot(b, static_cast<int>(i), 1);
      left.push_back(node(u, b));
      set_slot(b, static_cast<int>(i), 2);
      right.push_back(node(u, b));
    }
  }

  int depth_bound(const std::vector<uint64_t>& key) const override {
    int d = 0;
    for (size_t i = 0; i < slots_.size(); ++i)
      if (slot_state(key, static_cast<int>(i)) == 0) ++d;
    return d;
  }

  // The partition of terminal indices induced by black paths inside the
  // region (0-based class representatives).
  std::vector<int> terminal_partition(const Assign& a) const {
    UnionFind uf(node_count());
    run_union(uf, a, /*empties_black=*/false);
    std::vector<int> cls(region_.terminals.size());
    std::map<int, int> rep;
    for (size_t t = 0; t < region_.terminals.size(); ++t) {
      int root = uf.find(term_node(static_cast<int>(t)));
      auto it = rep.emplace(root, static_cast<int>(rep.size())).first;
      cls[t] = it->second;
    }
    return cls;
  }

  Atom outcome_atom(const Assign& a) const {
    UnionFind uf(node_count());
    run_union(uf, a, false);
    return atom_of_partition(uf);
  }

 private:
  struct Slot {
    int cell;  // region cell index
  };

  void build() {
    // index region cells
    for (size_t i = 0; i < region_.cells.size(); ++i)
      cell_index_[key_of(region_.cells[i])] = static_cast<int>(i);
    fixed_.resize(region_.cells.size());
    for (size_t i = 0; i < region_.cells.size(); ++i) {
      Cell v = region_.board.at(region_.cells[i]);
      fixed_[i] = v;
      if (v == Cell::Empty) slots_.push_back({static_cast<int>(i)});
    }
    if (slots_.size() > 64)
      throw BoardError("region has too many empty cells to evaluate");
    slot_of_cell_.assign(region_.cells.size(), -1);
    for (size_t s = 0; s < slots_.size(); ++s)
      slot_of_cell_[static_cast<size_t>(slots_[s].cell)] = static_cast<int>(s);
    // adjacency
    adj_.resize(region_.cells.size());
    for (size_t i = 0; i < region_.cells.size(); ++i) {
      Coord c = region_.cells[i];
      for (const Coord& d : kNeighborDeltas) {
        auto it = cell_index_.find(key_of({c.x + d.x, c.y + d.y}));
        if (it != cell_index_.end()) adj_[i].push_back(it->second);
      }
    }
    // terminals
    if (static_cast<int>(region_.terminals.size()) !=
        expected_terminal_count(region_.kind))
      throw BoardError("terminal count does not match region kind");
    term_members_.resize(region_.terminals.size());
    for (size_t t = 0; t < region_.terminals.size(); ++t) {
      const TerminalSpec& spec = region_.terminals[t];
      if (spec.is_edge) {
        if (!edge_is_black(spec.edge))
          throw BoardError("terminals must be black edges or black stones");
        for (size_t i = 0; i < region_.cells.size(); ++i)
          if (region_.board.touches_edge(region_.cells[i], spec.edge))
            term_members_[t].push_back(static_cast<int>(i));
      } else {
        if (spec.cells.empty()) throw BoardError("empty terminal group");
        for (Coord c : spec.cells) {
          auto it = cell_index_.find(key_of(c));
          if (it == cell_index_.end())
            throw BoardError("terminal cell outside region");
          term_members_[t].push_back(it->second);
        }
      }
    }
  }

  static int64_t key_of(Coord c) {
    return (static_cast<int64_t>(c.x) << 20) | static_cast<int64_t>(c.y + 4096);
  }

  int node_count() const {
    return static_cast<int>(region_.cells.size() + terminals_size());
  }
  int terminals_size() const { return static_cast<int>(region_.terminals.size()); }
  int term_node(int t) const { return static_cast<int>(region_.cells.size()) + t; }

  bool cell_black(const Assign& a, int cell, bool empties_black) const {
    if (fixed_[static_cast<size_t>(cell)] == Cell::Black) return true;
    if (fixed_[static_cast<size_t>(cell)] != Cell::Empty) return false;
    int st = slot_state(a, slot_of_cell_[static_cast<size_t>(cell)]);
    return st == 1 || (st == 0 && empties_black);
  }

  void run_union(UnionFind& uf, const Assign& a, bool empties_black) const {
    const int n = static_cast<int>(region_.cells.size());
    for (int i = 0; i < n; ++i) {
      if (!cell_black(a, i, empties_black)) continue;
      for (int j : adj_[static_cast<size_t>(i)])
        if (j < i && cell_black(a, j, empties_black)) uf.join(i, j);
    }
    for (int t = 0; t < terminals_size(); ++t)
      for (int m : term_members_[static_cast<size_t>(t)])
        if (cell_black(a, m, empties_black)) uf.join(term_node(t), m);
  }

  Atom atom_of_partition(UnionFind& uf) const {
    auto same = [&](int s, int t) { return uf.same(term_node(s), term_node(t)); };
    switch (region_.kind) {
      case RegionKind::TwoTerminal:
      case RegionKind::WholeBoard:
        return Poset::boolean().index_of(same(0, 1) ? "top" : "bot");
      case RegionKind::Generic3:
      case RegionKind::Corner: {
        const Poset& p = poset();
        bool e12 = same(0, 1), e13 = same(0, 2), e23 = same(1, 2);
        if (e12 && e13) return p.index_of("top");
        if (e23) return p.index_of("a");
        if (e13) return p.index_of("b");
        if (e12) return p.index_of("c");
        return p.index_of("bot");
      }
      case RegionKind::Fork:
      case RegionKind::PivotFork: {
        // terminal layout: 1 = B (or stone group), 2 = A, 3 = edge;
        // a = 2~3, b = 1~3; 1~2 alone is worth nothing.
        const Poset& p = Poset::fork();
        bool e13 = same(0, 2), e23 = same(1, 2);
        if (e13 && e23) return p.index_of("top");
        if (e23) return p.index_of("a");
        if (e13) return p.index_of("b");
        return p.index_of("bot");
      }
    }
    throw BoardError("bad kind");
  }

  // The outcome is decided when no remaining placement can change the
  // pairwise terminal connectivity: the partition over terminals with
  // empties counted black equals the one over black stones alone.
  std::optional<Atom> determined_atom(const Assign& a) const {
    UnionFind now(node_count()), pot(node_count());
    run_union(now, a, false);
    run_union(pot, a, true);
    for (int s = 0; s < terminals_size(); ++s)
      for (int t = s + 1; t < terminals_size(); ++t)
        if (now.same(term_node(s), term_node(t)) !=
            pot.same(term_node(s), term_node(t)))
          return std::nullopt;
    return atom_of_partition(now);
  }

  Region region_;
  bool collapse_;
  std::map<int64_t, int> cell_index_;
  std::vector<Cell> fixed_;
  std::vector<Slot> slots_;
  std::vector<int> slot_of_cell_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> term_members_;
};

// The literal game form of a region: recursion over empty cells with
// black placements on the left, memoized on the stone assignment.
inline const GameNode* region_value(Universe& u, const Region& region) {
  RegionGame g(region, /*collapse=*/false);
  return u.materialize(g.root(u));
}

// Canonical value of a region; equivalent to canonical(region_value(...))
// but collapses decided positions while expanding, which is what makes
// larger regions feasible.
inline const GameNode* region_canonical_value(Universe& u, const Region& region,
                                              bool require_surrounded = true) {
  RegionGame g(region, /*collapse=*/true, require_surrounded);
  return materialize_canonical(u, g.root(u));
}

// Lazy comparison helpers against an explicit value; the region is never
// materialized.
inline bool region_leq_value(Universe& u, const Region& region,
                             const GameNode* value,
                             bool require_surrounded = true) {
  RegionGame g(region, true, require_surrounded);
  return u.leq(g.root(u), value);
}
inline bool region_geq_value(Universe& u, const Region& region,
                             const GameNode* value,
                             bool require_surrounded = true) {
  RegionGame g(region, true, require_surrounded);
  return u.leq(value, g.root(u));
}
inline bool region_equiv_value(Universe& u, const Region& region,
                               const GameNode* value,
                               bool require_surrounded = true) {
  RegionGame g(region, true, require_surrounded);
  const GameNode* r = g.root(u);
  return u.leq(r, value) && u.leq(value, r);
}

}  // namespace hexcgt
