#pragma once

#include "hexcgt/region_game.hpp"

namespace hexcgt {

// Splitting a region at its stone walls: when the empty cells fall into
// several connected components, a move happens in exactly one component and
// outcomes only interact through the partition each component induces on
// the black nets around it. The region's game is therefore the wired sum
// of the component games, combined by joining partitions across the nets.
//
// Components are evaluated over their own outcome posets: the reachable
// partitions of their boundary nets, ordered by refinement (more joins is
// better for Black, and only Black connectivity feeds the region outcome).

namespace detail {

// Partition of {0..n-1} in canonical first-occurrence form.
inline std::vector<int> canonical_partition(UnionFind& uf,
                                            const std::vector<int>& nodes) {
  std::vector<int> cls(nodes.size());
  std::map<int, int> rep;
  for (size_t i = 0; i < nodes.size(); ++i) {
    int root = uf.find(nodes[i]);
    auto it = rep.emplace(root, static_cast<int>(rep.size())).first;
    cls[i] = it->second;
  }
  return cls;
}

inline bool partition_refines(const std::vector<int>& p,
                              const std::vector<int>& q) {
  // every pair joined in p is joined in q
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] == p[j] && q[i] != q[j]) return false;
  return true;
}

}  // namespace detail

// One empty component of a region, played as a game over the partitions it
// can induce on its boundary nets.
class ComponentGame : public LazyExpander {
 public:
  // `cells`: the component's empty cells; `anchors[c]` lists the boundary
  // net ids adjacent to cell c.
  ComponentGame(std::vector<Coord> cells,
                std::vector<std::vector<int>> anchors_per_cell,
                std::vector<int> anchor_nets)
      : cells_(std::move(cells)),
        cell_anchors_(std::move(anchors_per_cell)),
        anchor_nets_(std::move(anchor_nets)) {
    if (cells_.size() > 24)
      throw BoardError("empty component too large to evaluate");
    adj_.resize(cells_.size());
    for (size_t i = 0; i < cells_.size(); ++i)
      for (size_t j = i + 1; j < cells_.size(); ++j)
        if (adjacent(cells_[i], cells_[j])) {
          adj_[i].push_back(static_cast<int>(j));
          adj_[j].push_back(static_cast<int>(i));
        }
    build_poset();
  }

  static bool adjacent(Coord a, Coord b) {
    for (const Coord& d : kNeighborDeltas)
      if (a.x + d.x == b.x && a.y + d.y == b.y) return true;
    return false;
  }

  const Poset& poset() const override { return *poset_; }
  int anchor_count() const { return static_cast<int>(anchor_nets_.size()); }
  const std::vector<int>& anchor_nets() const { return anchor_nets_; }
  // the canonical partition of the anchors for a poset atom
  const std::vector<int>& partition_of(Atom a) const {
    return partitions_[static_cast<size_t>(a)];
  }

  using Assign = std::vector<uint64_t>;
  Assign initial() const {
    return Assign(static_cast<size_t>((cells_.size() + 31) / 32), 0);
  }
  const GameNode* root(Universe& u) const { return u.lazy(*this, initial()); }

  std::optional<Atom> as_atom(const std::vector<uint64_t>& key) const override {
    UnionFind now(node_count()), pot(node_count());
    run_union(now, key, false);
    run_union(pot, key, true);
    const int base = static_cast<int>(cells_.size());
    for (size_t s = 0; s < anchor_nets_.size(); ++s)
      for (size_t t = s + 1; t < anchor_nets_.size(); ++t)
        if (now.same(base + static_cast<int>(s), base + static_cast<int>(t)) !=
            pot.same(base + static_cast<int>(s), base + static_cast<int>(t)))
          return std::nullopt;
    std::vector<int> nodes;
    for (size_t s = 0; s < anchor_nets_.size(); ++s)
      nodes.push_back(base + static_cast<int>(s));
    std::vector<int> part = detail::canonical_partition(now, nodes);
    auto it = partition_atom_.find(part);
    if (it == partition_atom_.end())
      throw BoardError("component reached an unenumerated partition");
    return it->second;
  }

  void expand(Universe& u, const GameNode& n,
              std::vector<const GameNode*>& left,
              std::vector<const GameNode*>& right) const override {
    for (size_t i = 0; i < cells_.size(); ++i) {
      if (RegionGame::slot_state(n.key, static_cast<int>(i)) != 0) continue;
      Assign b = n.key;
      RegionGame::set_slot(b, static_cast<int>(i), 1);
      left.push_back(u.lazy(*this, b));
      RegionGame::set_slot(b, static_cast<int>(i), 2);
      right.push_back(u.lazy(*this, b));
    }
  }

  int depth_bound(const std::vector<uint64_t>& key) const override {
    int d = 0;
    for (size_t i = 0; i < cells_.size(); ++i)
      if (RegionGame::slot_state(key, static_cast<int>(i)) == 0) ++d;
    return d;
  }

 private:
  int node_count() const {
    return static_cast<int>(cells_.size() + anchor_nets_.size());
  }

  void run_union(UnionFind& uf, const Assign& a, bool empties_black) const {
    const int base = static_cast<int>(cells_.size());
    auto black = [&](size_t i) {
      int st = RegionGame::slot_state(a, static_cast<int>(i));
      return st == 1 || (st == 0 && empties_black);
    };
    for (size_t i = 0; i < cells_.size(); ++i) {
      if (!black(i)) continue;
      for (int j : adj_[i])
        if (static_cast<size_t>(j) < i && black(static_cast<size_t>(j)))
          uf.join(static_cast<int>(i), j);
      for (int s = 0; s < static_cast<int>(cell_anchors_[i].size()); ++s)
        uf.join(static_cast<int>(i), base + cell_anchors_[i][static_cast<size_t>(s)]);
    }
  }

  // Enumerates the reachable anchor partitions over all two-colorings of
  // the component and orders them by refinement.
  void build_poset() {
    if (cells_.size() > 16)
      throw BoardError("component too large to enumerate its outcome poset");
    const int base = static_cast<int>(cells_.size());
    std::vector<int> nodes;
    for (size_t s = 0; s < anchor_nets_.size(); ++s)
      nodes.push_back(base + static_cast<int>(s));
    std::vector<std::vector<int>> parts;
    for (uint64_t mask = 0; mask < (1ULL << cells_.size()); ++mask) {
      Assign a = initial();
      for (size_t i = 0; i < cells_.size(); ++i)
        RegionGame::set_slot(a, static_cast<int>(i), (mask >> i) & 1 ? 1 : 2);
      UnionFind uf(node_count());
      run_union(uf, a, false);
      std::vector<int> part = detail::canonical_partition(uf, nodes);
      if (partition_atom_.emplace(part, static_cast<int>(parts.size())).second)
        parts.push_back(part);
    }
    partitions_ = parts;
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (size_t i = 0; i < parts.size(); ++i)
      names.push_back("q" + std::to_string(i));
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = 0; j < parts.size(); ++j)
        if (i != j && detail::partition_refines(parts[i], parts[j]))
          covers.emplace_back(names[i], names[j]);
    poset_ = std::make_unique<Poset>("component", std::move(names), covers);
  }

  std::vector<Coord> cells_;
  std::vector<std::vector<int>> cell_anchors_;
  std::vector<int> anchor_nets_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> partitions_;
  std::map<std::vector<int>, Atom> partition_atom_;
  std::unique_ptr<Poset> poset_;
};

// The decomposition of a region into nets and empty components, with the
// sum rule joining component partitions across the nets.
class RegionDecomposition {
 public:
  explicit RegionDecomposition(const Region& region) : region_(region) {
    build();
  }

  int component_count() const { return static_cast<int>(components_.size()); }
  const ComponentGame& component(int i) const {
    return *components_[static_cast<size_t>(i)];
  }

  // Evaluates the region by evaluating each component to canonical form and
  // combining through the net-join rule.
  const GameNode* canonical_value(Universe& u) {
    std::vector<const GameNode*> vals;
    std::vector<const Poset*> posets;
    for (auto& comp : components_) {
      vals.push_back(materialize_canonical(u, comp->root(u)));
      posets.push_back(&comp->poset());
    }
    rule_ = std::make_unique<SumRule>(make_rule(posets));
    return materialize_canonical(u, sum(u, *rule_, vals));
  }

 private:
  SumRule make_rule(std::vector<const Poset*> posets) {
    auto comps = &components_;
    auto net_of_terminal = net_of_terminal_;
    int net_count = net_count_;
    const Region* reg = &region_;
    auto combine = [comps, net_of_terminal, net_count,
                    reg](std::span<const Atom> atoms) -> Atom {
      UnionFind uf(net_count);
      for (size_t i = 0; i < comps->size(); ++i) {
        const ComponentGame& c = *(*comps)[i];
        const std::vector<int>& part = c.partition_of(atoms[i]);
        const std::vector<int>& nets = c.anchor_nets();
        for (size_t s = 0; s < nets.size(); ++s)
          for (size_t t = s + 1; t < nets.size(); ++t)
            if (part[s] == part[t]) uf.join(nets[s], nets[t]);
      }
      auto same = [&](int s, int t) {
        return uf.same(net_of_terminal[static_cast<size_t>(s)],
                       net_of_terminal[static_cast<size_t>(t)]);
      };
      switch (reg->kind) {
        case RegionKind::TwoTerminal:
        case RegionKind::WholeBoard:
          return Poset::boolean().index_of(same(0, 1) ? "top" : "bot");
        case RegionKind::Generic3:
        case RegionKind::Corner: {
          const Poset& p = reg->kind == RegionKind::Corner ? Poset::corner()
                                                           : Poset::p3();
          bool e12 = same(0, 1), e13 = same(0, 2), e23 = same(1, 2);
          if (e12 && e13) return p.index_of("top");
          if (e23) return p.index_of("a");
          if (e13) return p.index_of("b");
          if (e12) return p.index_of("c");
          return p.index_of("bot");
        }
        case RegionKind::Fork:
        case RegionKind::PivotFork: {
          const Poset& p = Poset::fork();
          bool e13 = same(0, 2), e23 = same(1, 2);
          if (e13 && e23) return p.index_of("top");
          if (e23) return p.index_of("a");
          if (e13) return p.index_of("b");
          return p.index_of("bot");
        }
      }
      throw BoardError("bad kind");
    };
    const Poset* result = nullptr;
    switch (region_.kind) {
      case RegionKind::TwoTerminal:
      case RegionKind::WholeBoard: result = &Poset::boolean(); break;
      case RegionKind::Generic3: result = &Poset::p3(); break;
      case RegionKind::Corner: result = &Poset::corner(); break;
      default: result = &Poset::fork(); break;
    }
    return SumRule("net-join", std::move(posets), result, combine);
  }

  void build() {
    // index region cells
    std::map<std::pair<int, int>, int> index;
    for (size_t i = 0; i < region_.cells.size(); ++i)
      index[{region_.cells[i].x, region_.cells[i].y}] = static_cast<int>(i);
    const int n = static_cast<int>(region_.cells.size());
    const int term_count = static_cast<int>(region_.terminals.size());

    // nets: black stones plus terminal nodes (edge terminals included)
    UnionFind uf(n + term_count);
    auto is_black = [&](int i) {
      return region_.board.at(region_.cells[static_cast<size_t>(i)]) == Cell::Black;
    };
    for (int i = 0; i < n; ++i) {
      if (!is_black(i)) continue;
      Coord c = region_.cells[static_cast<size_t>(i)];
      for (const Coord& d : kNeighborDeltas) {
        auto it = index.find({c.x + d.x, c.y + d.y});
        if (it != index.end() && it->second < i && is_black(it->second))
          uf.join(i, it->second);
      }
    }
    for (int t = 0; t < term_count; ++t) {
      const TerminalSpec& spec = region_.terminals[static_cast<size_t>(t)];
      if (spec.is_edge) {
        if (!edge_is_black(spec.edge))
          throw BoardError("terminals must be black edges or stones");
        for (int i = 0; i < n; ++i)
          if (is_black(i) &&
              region_.board.touches_edge(region_.cells[static_cast<size_t>(i)],
                                         spec.edge))
            uf.join(n + t, i);
      } else {
        for (Coord c : spec.cells) {
          auto it = index.find({c.x, c.y});
          if (it == index.end()) throw BoardError("terminal cell outside region");
          Cell v = region_.board.at(c);
          if (v == Cell::Black) uf.join(n + t, it->second);
          else if (v == Cell::Empty)
            empty_terminal_cells_.emplace_back(it->second, t);
          else
            throw BoardError("terminal cells must be black or empty");
        }
      }
    }
    // net ids (dense)
    std::map<int, int> net_id;
    auto net_of = [&](int node) {
      int root = uf.find(node);
      auto it = net_id.emplace(root, static_cast<int>(net_id.size())).first;
      return it->second;
    };
    net_of_terminal_.resize(static_cast<size_t>(term_count));
    for (int t = 0; t < term_count; ++t)
      net_of_terminal_[static_cast<size_t>(t)] = net_of(n + t);

    // empty components
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int comp_count = 0;
    for (int i = 0; i < n; ++i) {
      if (comp[static_cast<size_t>(i)] >= 0 ||
          region_.board.at(region_.cells[static_cast<size_t>(i)]) != Cell::Empty)
        continue;
      std::vector<int> stack{i};
      comp[static_cast<size_t>(i)] = comp_count;
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        Coord c = region_.cells[static_cast<size_t>(cur)];
        for (const Coord& d : kNeighborDeltas) {
          auto it = index.find({c.x + d.x, c.y + d.y});
          if (it == index.end()) continue;
          int j = it->second;
          if (comp[static_cast<size_t>(j)] >= 0 ||
              region_.board.at(region_.cells[static_cast<size_t>(j)]) != Cell::Empty)
            continue;
          comp[static_cast<size_t>(j)] = comp_count;
          stack.push_back(j);
        }
      }
      ++comp_count;
    }

    for (int k = 0; k < comp_count; ++k) {
      std::vector<Coord> cells;
      std::vector<std::vector<int>> anchors_per_cell;
      std::vector<int> anchor_nets;
      std::map<int, int> anchor_slot;  // net id -> slot
      for (int i = 0; i < n; ++i) {
        if (comp[static_cast<size_t>(i)] != k) continue;
        Coord c = region_.cells[static_cast<size_t>(i)];
        cells.push_back(c);
        std::vector<int> slots;
        auto add_net = [&](int node) {
          int id = net_of(node);
          auto it = anchor_slot.emplace(id, static_cast<int>(anchor_nets.size()));
          if (it.second) anchor_nets.push_back(id);
          int slot = it.first->second;
          for (int s : slots)
            if (s == slot) return;
          slots.push_back(slot);
        };
        for (const Coord& d : kNeighborDeltas) {
          auto it = index.find({c.x + d.x, c.y + d.y});
          if (it != index.end() && is_black(it->second)) add_net(it->second);
        }
        for (int t = 0; t < term_count; ++t) {
          const TerminalSpec& spec = region_.terminals[static_cast<size_t>(t)];
          if (spec.is_edge && region_.board.touches_edge(c, spec.edge))
            add_net(n + t);
        }
        for (const auto& [cell, t] : empty_terminal_cells_)
          if (cell == i) add_net(n + t);
        anchors_per_cell.push_back(std::move(slots));
      }
      components_.push_back(std::make_unique<ComponentGame>(
          std::move(cells), std::move(anchors_per_cell), std::move(anchor_nets)));
    }
    net_count_ = static_cast<int>(net_id.size());
  }

  Region region_;
  std::vector<std::unique_ptr<ComponentGame>> components_;
  std::vector<int> net_of_terminal_;
  std::vector<std::pair<int, int>> empty_terminal_cells_;  // (cell, terminal)
  int net_count_ = 0;
  std::unique_ptr<SumRule> rule_;
};

// Canonical region value with decomposition: splits at stone walls when the
// empties form several components, otherwise evaluates directly.
inline const GameNode* region_canonical_value_decomposed(Universe& u,
                                                         const Region& region,
                                                         bool require_surrounded = true) {
  if (require_surrounded && !region_is_surrounded(region))
    throw BoardError("region is not surrounded");
  RegionDecomposition d(region);
  if (d.component_count() <= 1)
    return region_canonical_value(u, region, require_surrounded);
  return d.canonical_value(u);
}

}  // namespace hexcgt
