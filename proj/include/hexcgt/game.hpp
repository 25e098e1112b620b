#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hexcgt/poset.hpp"

namespace hexcgt {

class Universe;
struct GameNode;

class GameError : public std::runtime_error {
 public:
  explicit GameError(const std::string& msg) : std::runtime_error(msg) {}
};

// Supplier of options for games that are expanded on demand (board regions,
// parameterized sums). Nodes of the same expander are interned by `key`.
class LazyExpander {
 public:
  LazyExpander() {
    static std::atomic<uint64_t> counter{1};
    serial_ = counter.fetch_add(1, std::memory_order_relaxed);
  }
  virtual ~LazyExpander() = default;
  // Unique per instance; interning keys use it so that a later expander
  // allocated at a recycled address can never alias an old one's nodes.
  uint64_t serial() const { return serial_; }

  virtual const Poset& poset() const = 0;
  // Returns the atom when the position's outcome is already decided, in
  // which case no node is created at all.
  virtual std::optional<Atom> as_atom(const std::vector<uint64_t>& key) const = 0;
  virtual void expand(Universe& u, const GameNode& n,
                      std::vector<const GameNode*>& left,
                      std::vector<const GameNode*>& right) const = 0;
  virtual int depth_bound(const std::vector<uint64_t>& key) const = 0;

 private:
  uint64_t serial_ = 0;
};

// A game form node. Atoms and explicit forms are immutable; lazy nodes fill
// their option lists on first expansion. Structural equality coincides with
// pointer equality within one Universe.
struct GameNode {
  enum Kind : uint8_t { kAtom, kForm, kLazy };

  Kind kind = kAtom;
  bool expanded = false;
  Atom atom = -1;
  int depth = 0;
  uint32_t id = 0;
  const Poset* poset = nullptr;
  const LazyExpander* expander = nullptr;
  std::vector<uint64_t> key;
  std::vector<const GameNode*> left;
  std::vector<const GameNode*> right;

  bool is_atom() const { return kind == kAtom; }
  bool is_composite() const { return kind != kAtom; }
};

namespace detail {

inline void hash_mix(uint64_t& h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

struct VecKeyHash {
  size_t operator()(const std::vector<uint64_t>& v) const {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (uint64_t x : v) hash_mix(h, x);
    return static_cast<size_t>(h);
  }
};

}  // namespace detail

// Owns all game nodes, the interning tables and the relation caches.
// Not thread-safe: concurrent workers each use their own Universe; results
// are pure, so duplicated work is sound and outputs stay identical.
class Universe {
 public:
  Universe() = default;
  Universe(const Universe&) = delete;
  Universe& operator=(const Universe&) = delete;

  // ---- node construction -------------------------------------------------

  const GameNode* atom(const Poset& p, Atom a) {
    if (a < 0 || a >= p.size()) throw GameError("atom out of range");
    std::vector<uint64_t> k{kAtomTag, p.serial(), static_cast<uint64_t>(a)};
    if (auto it = intern_.find(k); it != intern_.end()) return it->second;
    GameNode* n = new_node();
    n->kind = GameNode::kAtom;
    n->atom = a;
    n->poset = &p;
    n->depth = 0;
    n->expanded = true;
    intern_.emplace(std::move(k), n);
    return n;
  }

  const GameNode* atom(const Poset& p, const std::string& name) {
    return atom(p, p.index_of(name));
  }

  // Explicit composite form; children must be atoms or forms over the same
  // poset. Option sets are stored sorted by structural order, duplicates
  // merged.
  const GameNode* form(const Poset& p, std::vector<const GameNode*> lo,
                       std::vector<const GameNode*> ro) {
    if (lo.empty() || ro.empty())
      throw GameError("composite games need nonempty left and right option sets");
    normalize(lo);
    normalize(ro);
    std::vector<uint64_t> k{kFormTag, p.serial(),
                            static_cast<uint64_t>(lo.size())};
    int d = 0;
    for (auto* c : lo) check_child(p, c, d, k);
    for (auto* c : ro) check_child(p, c, d, k);
    if (auto it = intern_.find(k); it != intern_.end()) return it->second;
    GameNode* n = new_node();
    n->kind = GameNode::kForm;
    n->poset = &p;
    n->left = std::move(lo);
    n->right = std::move(ro);
    n->depth = d + 1;
    n->expanded = true;
    intern_.emplace(std::move(k), n);
    return n;
  }

  // Lazy node (or its atom, when the expander reports the position decided).
  const GameNode* lazy(const LazyExpander& e, std::vector<uint64_t> payload) {
    if (auto a = e.as_atom(payload)) return atom(e.poset(), *a);
    std::vector<uint64_t> k{kLazyTag, e.serial()};
    k.insert(k.end(), payload.begin(), payload.end());
    if (auto it = intern_.find(k); it != intern_.end()) return it->second;
    GameNode* n = new_node();
    n->kind = GameNode::kLazy;
    n->poset = &e.poset();
    n->expander = &e;
    n->key = std::move(payload);
    n->depth = e.depth_bound(n->key);
    intern_.emplace(std::move(k), n);
    return n;
  }

  void expand(const GameNode* n) {
    if (n->expanded) return;
    GameNode* m = const_cast<GameNode*>(n);
    n->expander->expand(*this, *n, m->left, m->right);
    if (m->left.empty() || m->right.empty())
      throw GameError("lazy expansion produced an empty option set");
    m->expanded = true;
  }

  std::span<const GameNode* const> left_options(const GameNode* n) {
    if (n->is_atom()) return {};
    expand(n);
    return n->left;
  }
  std::span<const GameNode* const> right_options(const GameNode* n) {
    if (n->is_atom()) return {};
    expand(n);
    return n->right;
  }

  // ---- order relations ---------------------------------------------------

  // G <= H: every G^(L) is tri H and G is tri every H^(R).
  bool leq(const GameNode* g, const GameNode* h) {
    check_same_poset(g, h);
    const uint64_t ck = pair_key(g, h);
    if (auto it = leq_cache_.find(ck); it != leq_cache_.end()) return it->second;
    bool ok = true;
    if (g->is_atom()) {
      ok = tri(g, h);
    } else {
      for (auto* gl : left_options(g))
        if (!tri(gl, h)) {
          ok = false;
          break;
        }
    }
    if (ok) {
      if (h->is_atom()) {
        ok = tri(g, h);
      } else {
        for (auto* hr : right_options(h))
          if (!tri(g, hr)) {
            ok = false;
            break;
          }
      }
    }
    leq_cache_.emplace(ck, ok);
    return ok;
  }

  // G tri H: some G^R <= H, or G <= some H^L, or both atomic with atoms ordered.
  bool tri(const GameNode* g, const GameNode* h) {
    check_same_poset(g, h);
    if (g->is_atom() && h->is_atom()) return g->poset->leq(g->atom, h->atom);
    const uint64_t ck = pair_key(g, h);
    if (auto it = tri_cache_.find(ck); it != tri_cache_.end()) return it->second;
    bool ok = false;
    if (g->is_composite())
      for (auto* gr : right_options(g))
        if (leq(gr, h)) {
          ok = true;
          break;
        }
    if (!ok && h->is_composite())
      for (auto* hl : left_options(h))
        if (leq(g, hl)) {
          ok = true;
          break;
        }
    tri_cache_.emplace(ck, ok);
    return ok;
  }

  bool equivalent(const GameNode* g, const GameNode* h) {
    return leq(g, h) && leq(h, g);
  }

  // ---- structural order (deterministic tie-break) -------------------------

  // Atoms by poset element index, then forms by (depth, left options
  // lexicographic, right options lexicographic).
  static int cmp(const GameNode* a, const GameNode* b) {
    if (a == b) return 0;
    if (a->depth != b->depth) return a->depth < b->depth ? -1 : 1;
    if (a->is_atom() && b->is_atom())
      return a->atom < b->atom ? -1 : (a->atom > b->atom ? 1 : 0);
    if (a->is_atom() != b->is_atom()) return a->is_atom() ? -1 : 1;
    if (int c = cmp_list(a->left, b->left)) return c;
    return cmp_list(a->right, b->right);
  }

  // ---- conversions ---------------------------------------------------------

  // Replays a game as an explicit form, expanding lazy nodes.
  const GameNode* materialize(const GameNode* g) {
    if (g->is_atom() || g->kind == GameNode::kForm) return g;
    if (auto it = materialize_memo_.find(g->id); it != materialize_memo_.end())
      return it->second;
    std::vector<const GameNode*> lo, ro;
    for (auto* c : left_options(g)) lo.push_back(materialize(c));
    for (auto* c : right_options(g)) ro.push_back(materialize(c));
    const GameNode* f = form(*g->poset, std::move(lo), std::move(ro));
    materialize_memo_.emplace(g->id, f);
    return f;
  }

  const GameNode* node_by_id(uint32_t id) const { return nodes_[id]; }
  size_t node_count() const { return nodes_.size(); }

  std::unordered_map<uint64_t, bool>& leq_cache() { return leq_cache_; }
  std::unordered_map<uint32_t, const GameNode*>& canonical_memo() {
    return canonical_memo_;
  }

 private:
  friend class Canonicalizer;

  static constexpr uint64_t kAtomTag = 1, kFormTag = 2, kLazyTag = 3;

  GameNode* new_node() {
    GameNode* n = &pool_.emplace_back();
    n->id = static_cast<uint32_t>(nodes_.size());
    nodes_.push_back(n);
    return n;
  }

  void normalize(std::vector<const GameNode*>& v) {
    std::sort(v.begin(), v.end(),
              [](const GameNode* a, const GameNode* b) { return cmp(a, b) < 0; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  void check_child(const Poset& p, const GameNode* c, int& d,
                   std::vector<uint64_t>& k) {
    if (c->kind == GameNode::kLazy)
      throw GameError("explicit forms cannot contain unexpanded games");
    if (c->poset != &p) throw GameError("option over a different poset");
    d = std::max(d, c->depth);
    k.push_back(c->id);
  }

  static void check_same_poset(const GameNode* a, const GameNode* b) {
    if (a->poset != b->poset)
      throw GameError("cannot compare games over different posets");
  }

  static uint64_t pair_key(const GameNode* a, const GameNode* b) {
    return (static_cast<uint64_t>(a->id) << 32) | b->id;
  }

  static int cmp_list(const std::vector<const GameNode*>& a,
                      const std::vector<const GameNode*>& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
      if (int c = cmp(a[i], b[i])) return c;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
  }

  std::deque<GameNode> pool_;
  std::vector<const GameNode*> nodes_;
  std::unordered_map<std::vector<uint64_t>, const GameNode*, detail::VecKeyHash>
      intern_;
  std::unordered_map<uint64_t, bool> leq_cache_;
  std::unordered_map<uint64_t, bool> tri_cache_;
  std::unordered_map<uint32_t, const GameNode*> materialize_memo_;
  std::unordered_map<uint32_t, const GameNode*> canonical_memo_;
};

// ---- simple structural transforms ------------------------------------------

// Swaps left and right option sets throughout; atoms are fixed.
inline const GameNode* transpose(Universe& u, const GameNode* g) {
  std::unordered_map<uint32_t, const GameNode*> memo;
  std::function<const GameNode*(const GameNode*)> go =
      [&](const GameNode* n) -> const GameNode* {
    if (n->is_atom()) return n;
    if (auto it = memo.find(n->id); it != memo.end()) return it->second;
    std::vector<const GameNode*> lo, ro;
    for (auto* c : u.right_options(n)) lo.push_back(go(c));
    for (auto* c : u.left_options(n)) ro.push_back(go(c));
    const GameNode* f = u.form(*n->poset, std::move(lo), std::move(ro));
    memo.emplace(n->id, f);
    return f;
  };
  return go(g);
}

// Maps every atom through `m`; the result lives over m.target.
inline const GameNode* map_atoms(Universe& u, const GameNode* g,
                                 const MonotoneMap& m) {
  std::unordered_map<uint32_t, const GameNode*> memo;
  std::function<const GameNode*(const GameNode*)> go =
      [&](const GameNode* n) -> const GameNode* {
    if (n->is_atom()) return u.atom(*m.target, m(n->atom));
    if (auto it = memo.find(n->id); it != memo.end()) return it->second;
    std::vector<const GameNode*> lo, ro;
    for (auto* c : u.left_options(n)) lo.push_back(go(c));
    for (auto* c : u.right_options(n)) ro.push_back(go(c));
    const GameNode* f = u.form(*m.target, std::move(lo), std::move(ro));
    memo.emplace(n->id, f);
    return f;
  };
  if (g->poset != m.source) throw GameError("map_atoms: poset mismatch");
  return go(g);
}

// Renames terminals of a p3 game by a permutation of {1,2,3}. Terminal i
// going to perm[i] sends the atom "all but i" to "all but perm[i]", i.e.
// a<->1, b<->2, c<->3, with bot and top fixed.
inline const GameNode* relabel(Universe& u, const GameNode* g,
                               const std::array<int, 3>& perm) {
  const Poset& p3 = Poset::p3();
  if (g->poset != &p3) throw GameError("relabel is defined on p3 games only");
  MonotoneMap m;
  m.source = &p3;
  m.target = &p3;
  m.assignment.assign(static_cast<size_t>(p3.size()), 0);
  m.assignment[static_cast<size_t>(p3.index_of("bot"))] = p3.index_of("bot");
  m.assignment[static_cast<size_t>(p3.index_of("top"))] = p3.index_of("top");
  const char* names[3] = {"a", "b", "c"};
  for (int i = 0; i < 3; ++i) {
    if (perm[static_cast<size_t>(i)] < 1 || perm[static_cast<size_t>(i)] > 3)
      throw GameError("relabel: permutation entries must be 1..3");
    m.assignment[static_cast<size_t>(p3.index_of(names[i]))] =
        p3.index_of(names[perm[static_cast<size_t>(i)] - 1]);
  }
  return map_atoms(u, g, m);
}

// The dual of a value under exchanging the players' roles: left and right
// swap and the extreme outcomes trade places, while a, b, c keep their
// (renumbered) identities.
inline const GameNode* dual_value(Universe& u, const GameNode* g) {
  const GameNode* t = transpose(u, g);
  MonotoneMap m;
  m.source = g->poset;
  m.target = g->poset;
  for (int i = 0; i < m.source->size(); ++i) {
    const std::string& n = m.source->name_of(i);
    m.assignment.push_back(m.source->index_of(
        n == "bot" ? "top" : (n == "top" ? "bot" : n)));
  }
  return map_atoms(u, t, m);
}

inline int depth(const GameNode* g) { return g->depth; }

// G is monotone when every option brackets it (G^R <= G <= G^L) and all
// options are hereditarily monotone.
inline bool is_monotone(Universe& u, const GameNode* g) {
  std::unordered_map<uint32_t, bool> memo;
  std::function<bool(const GameNode*)> go = [&](const GameNode* n) -> bool {
    if (n->is_atom()) return true;
    if (auto it = memo.find(n->id); it != memo.end()) return it->second;
    bool ok = true;
    for (auto* l : u.left_options(n))
      if (!u.leq(n, l) || !go(l)) {
        ok = false;
        break;
      }
    if (ok)
      for (auto* r : u.right_options(n))
        if (!u.leq(r, n) || !go(r)) {
          ok = false;
          break;
        }
    memo.emplace(n->id, ok);
    return ok;
  };
  return go(g);
}

// G is passable when G tri G hereditarily.
inline bool is_passable(Universe& u, const GameNode* g) {
  std::unordered_map<uint32_t, bool> memo;
  std::function<bool(const GameNode*)> go = [&](const GameNode* n) -> bool {
    if (auto it = memo.find(n->id); it != memo.end()) return it->second;
    bool ok = u.tri(n, n);
    if (ok && n->is_composite()) {
      for (auto* l : u.left_options(n))
        if (!go(l)) {
          ok = false;
          break;
        }
      if (ok)
        for (auto* r : u.right_options(n))
          if (!go(r)) {
            ok = false;
            break;
          }
    }
    memo.emplace(n->id, ok);
    return ok;
  };
  return go(g);
}

// Number of atom occurrences in the written-out expression tree.
inline int atom_count(Universe& u, const GameNode* g) {
  std::unordered_map<uint32_t, int> memo;
  std::function<int(const GameNode*)> go = [&](const GameNode* n) -> int {
    if (n->is_atom()) return 1;
    if (auto it = memo.find(n->id); it != memo.end()) return it->second;
    int s = 0;
    for (auto* c : u.left_options(n)) s += go(c);
    for (auto* c : u.right_options(n)) s += go(c);
    memo.emplace(n->id, s);
    return s;
  };
  return go(g);
}

}  // namespace hexcgt
