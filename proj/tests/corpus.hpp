#pragma once

// Deterministic game-form corpora for property tests.

#include <random>

#include "hexcgt/canonical.hpp"
#include "hexcgt/form_io.hpp"
#include "hexcgt/game.hpp"

namespace hexcgt::testing {

// All forms of the given depth bound whose option sets have at most
// `max_options` members drawn from the previous layer. Deduplicated
// structurally; deterministic order.
inline std::vector<const GameNode*> enumerate_forms(Universe& u, const Poset& p,
                                                    int max_depth,
                                                    int max_options = 2,
                                                    size_t layer_cap = 400) {
  std::vector<const GameNode*> all;
  for (Atom a = 0; a < p.size(); ++a) all.push_back(u.atom(p, a));
  std::vector<const GameNode*> prev = all;
  for (int d = 1; d <= max_depth; ++d) {
    // option sets: nonempty subsets of `prev` of size <= max_options
    std::vector<std::vector<const GameNode*>> sets;
    const size_t n = prev.size();
    for (size_t i = 0; i < n; ++i) {
      sets.push_back({prev[i]});
      if (max_options >= 2)
        for (size_t j = i + 1; j < n; ++j) sets.push_back({prev[i], prev[j]});
    }
    std::vector<const GameNode*> layer;
    for (const auto& lo : sets) {
      for (const auto& ro : sets) {
        layer.push_back(u.form(p, lo, ro));
        if (layer.size() >= layer_cap) break;
      }
      if (layer.size() >= layer_cap) break;
    }
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    all.insert(all.end(), layer.begin(), layer.end());
    prev = std::move(layer);
  }
  return all;
}

// Random form over `p` with exact depth <= max_depth.
inline const GameNode* random_form(Universe& u, const Poset& p, std::mt19937& rng,
                                   int max_depth) {
  if (max_depth == 0 || rng() % 4 == 0)
    return u.atom(p, static_cast<Atom>(rng() % static_cast<unsigned>(p.size())));
  auto options = [&](int budget) {
    std::vector<const GameNode*> v;
    int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) v.push_back(random_form(u, p, rng, budget));
    return v;
  };
  return u.form(p, options(max_depth - 1), options(max_depth - 1));
}

// Random monotone form (rejection sampling); monotone games are passable.
inline const GameNode* random_monotone(Universe& u, const Poset& p,
                                       std::mt19937& rng, int max_depth,
                                       int max_tries = 2000) {
  for (int t = 0; t < max_tries; ++t) {
    const GameNode* g = random_form(u, p, rng, max_depth);
    if (is_monotone(u, g)) return g;
  }
  throw std::runtime_error("no monotone sample found");
}

}  // namespace hexcgt::testing
