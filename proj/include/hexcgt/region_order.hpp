#pragma once

#include "hexcgt/region_game.hpp"

namespace hexcgt {

// Order checks between a small explicit form and a region game, evaluated
// by direct recursion over (form, stone assignment) pairs. No game nodes
// are created for region states, so boards near twenty empty cells stay
// within memory; atomic comparisons collapse to alternating win searches
// with connectivity prunes.
class RegionOrderAnalyzer {
 public:
  RegionOrderAnalyzer(Universe& u, const Region& region,
                      bool require_surrounded = false)
      : u_(u), game_(region, /*collapse=*/true, require_surrounded) {
    const Poset& p = game_.poset();
    for (Atom a = 0; a < p.size(); ++a) atoms_.push_back(u_.atom(p, a));
  }

  const Poset& poset() const { return game_.poset(); }

  // form <= region and region <= form at the initial position
  bool form_leq_region(const GameNode* f) {
    return leq_fr(check(f), game_.initial());
  }
  bool region_leq_form(const GameNode* f) {
    return leq_rf(game_.initial(), check(f));
  }
  bool atom_leq_region(Atom x) { return side_leq(x, true, game_.initial()); }
  bool region_leq_atom(Atom x) { return side_leq(x, false, game_.initial()); }
  size_t memo_entries() const { return forces_memo_.size() + memo_.size(); }

 private:
  using Assign = RegionGame::Assign;

  const GameNode* check(const GameNode* f) {
    if (f->poset != &game_.poset())
      throw GameError("form and region live over different posets");
    if (f->kind == GameNode::kLazy) f = u_.materialize(f);
    return f;
  }

  uint64_t key(const Assign& a, uint32_t id, int tag) {
    uint64_t h = a[0];
    for (size_t i = 1; i < a.size(); ++i) detail::hash_mix(h, a[i]);
    detail::hash_mix(h, (static_cast<uint64_t>(id) << 3) | static_cast<uint64_t>(tag));
    return h;
  }

  std::optional<Atom> region_atom(const Assign& a) {
    // fully filled and decided positions read off their atom
    return game_.as_atom(a);
  }

  // Moves adjacent to the previous one come first; local answers settle
  // connection fights early in both quantifiers.
  void ordered_moves(const Assign& a, int last, std::vector<int>& out) {
    out.clear();
    if (last >= 0)
      for (int i : neighbor_slots(last))
        if (RegionGame::slot_state(a, i) == 0) out.push_back(i);
    for (int i = 0; i < game_.empty_cells(); ++i) {
      if (RegionGame::slot_state(a, i) != 0) continue;
      bool seen = false;
      for (int j : out) seen |= j == i;
      if (!seen) out.push_back(i);
    }
  }

  const std::vector<int>& neighbor_slots(int slot) {
    if (neighbor_slots_.empty()) {
      int n = game_.empty_cells();
      std::vector<Coord> coords;
      for (Coord c : game_.region().cells)
        if (game_.region().board.at(c) == Cell::Empty) coords.push_back(c);
      neighbor_slots_.resize(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          for (const Coord& d : kNeighborDeltas)
            if (coords[static_cast<size_t>(i)].x + d.x ==
                    coords[static_cast<size_t>(j)].x &&
                coords[static_cast<size_t>(i)].y + d.y ==
                    coords[static_cast<size_t>(j)].y)
              neighbor_slots_[static_cast<size_t>(i)].push_back(j);
        }
    }
    return neighbor_slots_[static_cast<size_t>(slot)];
  }

  template <typename Fn>
  bool exists_move(const Assign& a, int stone, Fn&& fn, int last = -1) {
    std::vector<int> order;
    ordered_moves(a, last, order);
    for (int i : order) {
      Assign b = a;
      RegionGame::set_slot(b, i, stone);
      if (fn(b, i)) return true;
    }
    return false;
  }
  template <typename Fn>
  bool forall_moves(const Assign& a, int stone, Fn&& fn, int last = -1) {
    std::vector<int> order;
    ordered_moves(a, last, order);
    for (int i : order) {
      Assign b = a;
      RegionGame::set_slot(b, i, stone);
      if (!fn(b, i)) return false;
    }
    return true;
  }

  // Every completion's outcome sits between the current atom and the
  // all-remaining-black atom, which prunes both goal directions exactly.
  // Returns 1 (goal holds for all completions), 0 (never), -1 (open).
  int bound_prune(Atom x, bool up, const Assign& a) {
    const Poset& p = game_.poset();
    Atom now = game_.outcome_atom(a);
    Assign full_black = a;
    for (int i = 0; i < game_.empty_cells(); ++i)
      if (RegionGame::slot_state(full_black, i) == 0)
        RegionGame::set_slot(full_black, i, 1);
    Atom ceiling = game_.outcome_atom(full_black);
    if (up) {
      if (p.leq(x, now)) return 1;
      if (!p.leq(x, ceiling)) return 0;
    } else {
      if (p.leq(ceiling, x)) return 1;
      if (!p.leq(now, x)) return 0;
    }
    return -1;
  }

  // [x] <= region (up) or region <= [x] (down), straight from the mutual
  // recursion: the leq side also quantifies over the opponent's consecutive
  // moves, so this is not a plainly alternating game.
  bool side_leq(Atom x, bool up, const Assign& a, int last = -1) {
    if (int pr = bound_prune(x, up, a); pr >= 0) return pr == 1;
    uint64_t k = key(a, static_cast<uint32_t>(x), up ? 4 : 0);
    if (auto it = forces_memo_.find(k); it != forces_memo_.end()) return it->second;
    int other_stone = up ? 2 : 1;
    bool result =
        side_tri(x, up, a, last) &&
        forall_moves(
            a, other_stone,
            [&](const Assign& b, int mv) { return side_tri(x, up, b, mv); }, last);
    forces_memo_.emplace(k, result);
    return result;
  }

  bool side_tri(Atom x, bool up, const Assign& a, int last = -1) {
    if (int pr = bound_prune(x, up, a); pr >= 0) return pr == 1;
    uint64_t k = key(a, static_cast<uint32_t>(x), (up ? 4 : 0) | 1);
    if (auto it = forces_memo_.find(k); it != forces_memo_.end()) return it->second;
    int own_stone = up ? 1 : 2;
    bool result = exists_move(
        a, own_stone,
        [&](const Assign& b, int mv) { return side_leq(x, up, b, mv); }, last);
    forces_memo_.emplace(k, result);
    return result;
  }

  // ---- form <= region ------------------------------------------------------

  bool leq_fr(const GameNode* f, const Assign& a) {
    if (f->is_atom()) return side_leq(f->atom, true, a);
    if (auto ra = region_atom(a)) return u_.leq(f, atoms_[static_cast<size_t>(*ra)]);
    // transitivity through atoms: f <= [y] <= R proves it, [y] <= f with
    // [y] </= R refutes it
    for (Atom y : above(f))
      if (side_leq(y, true, a)) return true;
    for (Atom y : below(f))
      if (!side_leq(y, true, a)) return false;
    uint64_t k = key(a, f->id, 2);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    memo_.emplace(k, false);  // pairs recurse on strictly smaller games
    bool ok = true;
    for (auto* fl : u_.left_options(f))
      if (!tri_fr(fl, a)) {
        ok = false;
        break;
      }
    if (ok)
      ok = forall_moves(a, 2,
                        [&](const Assign& b, int) { return tri_fr(f, b); });
    memo_[k] = ok;
    return ok;
  }

  bool tri_fr(const GameNode* f, const Assign& a) {
    if (auto ra = region_atom(a)) {
      if (f->is_atom()) return game_.poset().leq(f->atom, *ra);
      return u_.tri(f, atoms_[static_cast<size_t>(*ra)]);
    }
    if (f->is_atom()) return side_tri(f->atom, true, a);
    for (Atom y : above(f))
      if (side_tri(y, true, a)) return true;
    for (Atom y : below(f))
      if (!side_tri(y, true, a)) return false;
    uint64_t k = key(a, f->id, 3);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    memo_.emplace(k, false);
    bool ok = false;
    for (auto* fr : u_.right_options(f))
      if (leq_fr(fr, a)) {
        ok = true;
        break;
      }
    if (!ok)
      ok = exists_move(a, 1,
                       [&](const Assign& b, int) { return leq_fr(f, b); });
    memo_[k] = ok;
    return ok;
  }

  // ---- region <= form ------------------------------------------------------

  bool leq_rf(const Assign& a, const GameNode* f) {
    if (f->is_atom()) return side_leq(f->atom, false, a);
    if (auto ra = region_atom(a)) return u_.leq(atoms_[static_cast<size_t>(*ra)], f);
    for (Atom y : below(f))
      if (side_leq(y, false, a)) return true;
    for (Atom y : above(f))
      if (!side_leq(y, false, a)) return false;
    uint64_t k = key(a, f->id, 6);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    memo_.emplace(k, false);
    bool ok =
        forall_moves(a, 1, [&](const Assign& b, int) { return tri_rf(b, f); });
    if (ok)
      for (auto* fr : u_.right_options(f))
        if (!tri_rf(a, fr)) {
          ok = false;
          break;
        }
    memo_[k] = ok;
    return ok;
  }

  bool tri_rf(const Assign& a, const GameNode* f) {
    if (auto ra = region_atom(a)) {
      if (f->is_atom()) return game_.poset().leq(*ra, f->atom);
      return u_.tri(atoms_[static_cast<size_t>(*ra)], f);
    }
    if (f->is_atom()) return side_tri(f->atom, false, a);
    for (Atom y : below(f))
      if (side_tri(y, false, a)) return true;
    for (Atom y : above(f))
      if (!side_tri(y, false, a)) return false;
    uint64_t k = key(a, f->id, 7);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    memo_.emplace(k, false);
    bool ok =
        exists_move(a, 2, [&](const Assign& b, int) { return leq_rf(b, f); });
    if (!ok)
      for (auto* fl : u_.left_options(f))
        if (leq_rf(a, fl)) {
          ok = true;
          break;
        }
    memo_[k] = ok;
    return ok;
  }

  // atoms comparable with a form, cached per form node
  const std::vector<Atom>& above(const GameNode* f) {
    auto it = above_.find(f->id);
    if (it == above_.end()) {
      std::vector<Atom> v;
      for (Atom y = 0; y < game_.poset().size(); ++y)
        if (u_.leq(f, atoms_[static_cast<size_t>(y)])) v.push_back(y);
      it = above_.emplace(f->id, std::move(v)).first;
    }
    return it->second;
  }
  const std::vector<Atom>& below(const GameNode* f) {
    auto it = below_.find(f->id);
    if (it == below_.end()) {
      std::vector<Atom> v;
      for (Atom y = 0; y < game_.poset().size(); ++y)
        if (u_.leq(atoms_[static_cast<size_t>(y)], f)) v.push_back(y);
      it = below_.emplace(f->id, std::move(v)).first;
    }
    return it->second;
  }

  Universe& u_;
  RegionGame game_;
  std::vector<const GameNode*> atoms_;
  std::vector<std::vector<int>> neighbor_slots_;
  std::unordered_map<uint32_t, std::vector<Atom>> above_, below_;
  std::unordered_map<uint64_t, bool> forces_memo_;
  std::unordered_map<uint64_t, bool> memo_;
};

}  // namespace hexcgt
