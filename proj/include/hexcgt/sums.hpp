#pragma once

#include <cassert>
#include <numeric>

#include "hexcgt/game.hpp"

namespace hexcgt {

// Scratch union-find over a fixed node count.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<size_t>(x)] != x) {
      parent_[static_cast<size_t>(x)] =
          parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
      x = parent_[static_cast<size_t>(x)];
    }
    return x;
  }
  void join(int a, int b) { parent_[static_cast<size_t>(find(a))] = find(b); }
  bool same(int a, int b) { return find(a) == find(b); }

 private:
  std::vector<int> parent_;
};

// Interprets an atom of a 2- or 3-terminal outcome poset as the partition
// it induces on the operand's terminals (1-based).
inline void join_atom_partition(UnionFind& uf, int base, int terminals,
                                const Poset& p, Atom a) {
  const std::string& n = p.name_of(a);
  if (terminals == 2) {
    if (n == "top") uf.join(base + 0, base + 1);
    else if (n != "bot") throw GameError("2-terminal operands use bool atoms");
    return;
  }
  if (terminals != 3) throw GameError("operands have 2 or 3 terminals");
  if (n == "top") {
    uf.join(base + 0, base + 1);
    uf.join(base + 1, base + 2);
  } else if (n == "a") {
    uf.join(base + 1, base + 2);
  } else if (n == "b") {
    uf.join(base + 0, base + 2);
  } else if (n == "c") {
    uf.join(base + 0, base + 1);
  } else if (n != "bot") {
    throw GameError("atom '" + n + "' has no terminal-partition reading");
  }
}

// A terminal-identification scheme: which operand terminals are wired
// together and which feed the external terminals of the composite.
struct Wiring {
  struct Node {
    int operand;   // -1 for an external terminal
    int terminal;  // 1-based
  };
  std::string name;
  std::vector<int> operand_terminals;          // 2 or 3 per operand
  std::vector<std::pair<Node, Node>> joins;    // identifications
  int external_count = 0;                      // 0, 2 or 3

  int arity() const { return static_cast<int>(operand_terminals.size()); }
};

// How atom tuples combine under a sum. `combine` is total and monotone in
// every argument; table-backed rules are verified exhaustively when built
// from a wiring.
class SumRule {
 public:
  SumRule(std::string name, std::vector<const Poset*> operand_posets,
          const Poset* result,
          std::function<Atom(std::span<const Atom>)> combine)
      : name_(std::move(name)),
        operand_posets_(std::move(operand_posets)),
        result_(result),
        combine_(std::move(combine)) {}

  int arity() const { return static_cast<int>(operand_posets_.size()); }
  const Poset& operand_poset(int i) const {
    return *operand_posets_[static_cast<size_t>(i)];
  }
  const Poset& result_poset() const { return *result_; }
  const std::string& name() const { return name_; }

  Atom combine(std::span<const Atom> atoms) const { return combine_(atoms); }

  // Exhaustive monotonicity check over all tuple pairs differing in one
  // coordinate; throws when violated.
  void verify_monotone() const {
    std::vector<Atom> t(static_cast<size_t>(arity()), 0);
    verify_rec(t, 0);
  }

 private:
  void verify_rec(std::vector<Atom>& t, int i) const {
    if (i == arity()) {
      Atom base = combine_(t);
      for (int k = 0; k < arity(); ++k) {
        Atom saved = t[static_cast<size_t>(k)];
        const Poset& p = operand_poset(k);
        for (Atom up = 0; up < p.size(); ++up) {
          if (!p.leq(saved, up)) continue;
          t[static_cast<size_t>(k)] = up;
          if (!result_->leq(base, combine_(t)))
            throw GameError("sum rule '" + name_ + "' is not monotone");
        }
        t[static_cast<size_t>(k)] = saved;
      }
      return;
    }
    for (Atom a = 0; a < operand_poset(i).size(); ++a) {
      t[static_cast<size_t>(i)] = a;
      verify_rec(t, i + 1);
    }
  }

  std::string name_;
  std::vector<const Poset*> operand_posets_;
  const Poset* result_;
  std::function<Atom(std::span<const Atom>)> combine_;

  friend class SumExpander;
  mutable std::shared_ptr<void> expander_;  // lazily created SumExpander
};

// Derives the atom-combination table of a wiring by join semantics: every
// operand atom contributes its terminal partition, identifications merge
// across operands, and the result atom names the induced partition of the
// external terminals.
inline SumRule wiring_atom_table(const Wiring& w,
                                 std::vector<const Poset*> operand_posets) {
  if (static_cast<int>(operand_posets.size()) != w.arity())
    throw GameError("wiring arity mismatch");
  if (w.external_count != 0 && w.external_count != 2 && w.external_count != 3)
    throw GameError("wirings have 0, 2 or 3 external terminals");
  const Poset* result =
      w.external_count == 3 ? &Poset::p3() : &Poset::boolean();

  // node layout: operands first, then external terminals
  std::vector<int> base(static_cast<size_t>(w.arity()) + 1, 0);
  for (int i = 0; i < w.arity(); ++i)
    base[static_cast<size_t>(i) + 1] =
        base[static_cast<size_t>(i)] + w.operand_terminals[static_cast<size_t>(i)];
  const int ext_base = base[static_cast<size_t>(w.arity())];
  const int total = ext_base + w.external_count;

  auto node_id = [&](const Wiring::Node& n) {
    if (n.operand < 0) {
      if (n.terminal < 1 || n.terminal > w.external_count)
        throw GameError("wiring references unknown external terminal");
      return ext_base + n.terminal - 1;
    }
    if (n.operand >= w.arity() ||
        n.terminal < 1 ||
        n.terminal > w.operand_terminals[static_cast<size_t>(n.operand)])
      throw GameError("wiring references unknown operand terminal");
    return base[static_cast<size_t>(n.operand)] + n.terminal - 1;
  };
  // resolve joins to node ids eagerly (also validates them)
  std::vector<std::pair<int, int>> joins;
  for (const auto& [x, y] : w.joins) joins.emplace_back(node_id(x), node_id(y));
  std::vector<int> terminals = w.operand_terminals;
  const int ext_count = w.external_count;

  auto combine = [joins, terminals, operand_posets, base, ext_base, total,
                  ext_count](std::span<const Atom> atoms) -> Atom {
    UnionFind uf(total);
    for (const auto& [x, y] : joins) uf.join(x, y);
    for (size_t i = 0; i < terminals.size(); ++i)
      join_atom_partition(uf, base[i], terminals[i], *operand_posets[i],
                          atoms[i]);
    if (ext_count == 2)
      return uf.same(ext_base, ext_base + 1) ? Poset::boolean().index_of("top")
                                             : Poset::boolean().index_of("bot");
    const Poset& p3 = Poset::p3();
    bool e12 = uf.same(ext_base, ext_base + 1);
    bool e13 = uf.same(ext_base, ext_base + 2);
    bool e23 = uf.same(ext_base + 1, ext_base + 2);
    if (e12 && e13) return p3.index_of("top");
    if (e23) return p3.index_of("a");
    if (e13) return p3.index_of("b");
    if (e12) return p3.index_of("c");
    return p3.index_of("bot");
  };

  SumRule rule(w.name, std::move(operand_posets), result, combine);
  rule.verify_monotone();
  return rule;
}

// ---- the parameterized disjunctive sum --------------------------------------

// A move in the sum is a move in exactly one operand; all-atomic tuples
// collapse through the rule's combine.
class SumExpander : public LazyExpander {
 public:
  SumExpander(const SumRule* rule) : rule_(rule) {}

  const Poset& poset() const override { return rule_->result_poset(); }

  std::optional<Atom> as_atom(const std::vector<uint64_t>& key) const override {
    (void)key;
    return std::nullopt;  // decided at node-construction in make()
  }

  void expand(Universe& u, const GameNode& n,
              std::vector<const GameNode*>& left,
              std::vector<const GameNode*>& right) const override {
    std::vector<const GameNode*> ops = operands(u, n);
    for (size_t i = 0; i < ops.size(); ++i) {
      for (auto* l : u.left_options(ops[i])) {
        std::vector<const GameNode*> next = ops;
        next[i] = l;
        left.push_back(make(u, *rule_, next));
      }
      for (auto* r : u.right_options(ops[i])) {
        std::vector<const GameNode*> next = ops;
        next[i] = r;
        right.push_back(make(u, *rule_, next));
      }
    }
  }

  int depth_bound(const std::vector<uint64_t>& key) const override {
    return static_cast<int>(key[0]);
  }

  // Builds the sum node for an operand tuple (memoized through the
  // universe's interner on operand identity).
  static const GameNode* make(Universe& u, const SumRule& rule,
                              std::span<const GameNode* const> ops) {
    if (static_cast<int>(ops.size()) != rule.arity())
      throw GameError("sum: operand count does not match rule arity");
    bool all_atomic = true;
    int depth_sum = 0;
    for (int i = 0; i < rule.arity(); ++i) {
      const GameNode* g = ops[static_cast<size_t>(i)];
      if (g->poset != &rule.operand_poset(i))
        throw GameError("sum: operand poset does not match rule");
      all_atomic &= g->is_atom();
      depth_sum += g->depth;
    }
    if (all_atomic) {
      std::vector<Atom> atoms;
      for (auto* g : ops) atoms.push_back(g->atom);
      return u.atom(rule.result_poset(), rule.combine(atoms));
    }
    const SumExpander& e = instance(rule);
    std::vector<uint64_t> key;
    key.push_back(static_cast<uint64_t>(depth_sum));
    for (auto* g : ops) key.push_back(g->id);
    return u.lazy(e, std::move(key));
  }

 private:
  static std::vector<const GameNode*> operands(Universe& u, const GameNode& n) {
    std::vector<const GameNode*> ops;
    for (size_t i = 1; i < n.key.size(); ++i)
      ops.push_back(u.node_by_id(static_cast<uint32_t>(n.key[i])));
    return ops;
  }

  // The expander lives with its rule, so nodes never outlive their options
  // supplier.
  static const SumExpander& instance(const SumRule& rule) {
    if (!rule.expander_)
      rule.expander_ = std::make_shared<SumExpander>(&rule);
    return *static_cast<SumExpander*>(rule.expander_.get());
  }

  const SumRule* rule_;
};

inline const GameNode* sum(Universe& u, const SumRule& rule,
                           std::span<const GameNode* const> operands) {
  return SumExpander::make(u, rule, operands);
}

// ---- the three named wirings -------------------------------------------------

// Concatenation: terminal 1 of G to terminal 1 of H, terminal 2 of G to
// terminal 3 of H; externals are (1 of G, 2 of H, 3 of G).
inline const Wiring& concat_wiring() {
  static const Wiring w{
      "concat",
      {3, 3},
      {{{0, 1}, {1, 1}},
       {{0, 2}, {1, 3}},
       {{-1, 1}, {0, 1}},
       {{-1, 2}, {1, 2}},
       {{-1, 3}, {0, 3}}},
      3};
  return w;
}

// Juxtaposition: terminal 1 of G to terminal 1 of H and 2 to 2; the two
// externals are the terminals 3, so the result is a 2-terminal position.
inline const Wiring& juxtapose_wiring() {
  static const Wiring w{
      "juxtapose",
      {3, 3},
      {{{0, 1}, {1, 1}},
       {{0, 2}, {1, 2}},
       {{-1, 1}, {0, 3}},
       {{-1, 2}, {1, 3}}},
      2};
  return w;
}

// Pinwheel: terminal 1 of each operand to terminal 2 of the next, terminal 3
// of operand i to external i.
inline const Wiring& pinwheel_wiring() {
  static const Wiring w{
      "pinwheel",
      {3, 3, 3},
      {{{0, 1}, {1, 2}},
       {{1, 1}, {2, 2}},
       {{2, 1}, {0, 2}},
       {{-1, 1}, {0, 3}},
       {{-1, 2}, {1, 3}},
       {{-1, 3}, {2, 3}}},
      3};
  return w;
}

inline const SumRule& concat_rule() {
  static const SumRule r =
      wiring_atom_table(concat_wiring(), {&Poset::p3(), &Poset::p3()});
  return r;
}
inline const SumRule& juxtapose_rule() {
  static const SumRule r =
      wiring_atom_table(juxtapose_wiring(), {&Poset::p3(), &Poset::p3()});
  return r;
}
inline const SumRule& pinwheel_rule() {
  static const SumRule r = wiring_atom_table(
      pinwheel_wiring(), {&Poset::p3(), &Poset::p3(), &Poset::p3()});
  return r;
}

inline const GameNode* concat(Universe& u, const GameNode* g, const GameNode* h) {
  std::array<const GameNode*, 2> ops{g, h};
  return sum(u, concat_rule(), ops);
}
inline const GameNode* juxtapose(Universe& u, const GameNode* g,
                                 const GameNode* h) {
  std::array<const GameNode*, 2> ops{g, h};
  return sum(u, juxtapose_rule(), ops);
}
inline const GameNode* pinwheel3(Universe& u, const GameNode* g1,
                                 const GameNode* g2, const GameNode* g3) {
  std::array<const GameNode*, 3> ops{g1, g2, g3};
  return sum(u, pinwheel_rule(), ops);
}

}  // namespace hexcgt
