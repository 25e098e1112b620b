#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexcgt {

// Index of an element within its Poset.
using Atom = int;

class PosetError : public std::runtime_error {
 public:
  explicit PosetError(const std::string& msg) : std::runtime_error(msg) {}
};

// A finite partially ordered set of outcomes. The order relation is stored
// as its full reflexive-transitive closure, so order queries are O(1).
// Immutable after construction.
class Poset {
 public:
  // `covers` lists pairs (x, y) meaning x <= y; the constructor closes the
  // relation reflexively and transitively and rejects cycles.
  Poset(std::string name, std::vector<std::string> elements,
        const std::vector<std::pair<std::string, std::string>>& covers)
      : name_(std::move(name)), elements_(std::move(elements)) {
    static std::atomic<uint64_t> counter{1};
    serial_ = counter.fetch_add(1, std::memory_order_relaxed);
    const int n = static_cast<int>(elements_.size());
    rel_.assign(static_cast<size_t>(n) * n, false);
    for (int i = 0; i < n; ++i) set(i, i, true);
    for (const auto& [lo, hi] : covers) set(index_of(lo), index_of(hi), true);
    // transitive closure
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (get(i, k))
          for (int j = 0; j < n; ++j)
            if (get(k, j)) set(i, j, true);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && get(i, j) && get(j, i))
          throw PosetError("poset '" + name_ + "' is not antisymmetric: " +
                           elements_[i] + " ~ " + elements_[j]);
    top_ = find_extreme(true);
    bottom_ = find_extreme(false);
  }

  const std::string& name() const { return name_; }
  // Unique per instance; used in interning keys so recycled addresses of
  // dynamically built posets cannot alias.
  uint64_t serial() const { return serial_; }
  int size() const { return static_cast<int>(elements_.size()); }

  bool leq(Atom x, Atom y) const {
    check(x);
    check(y);
    return get(x, y);
  }

  const std::string& name_of(Atom x) const {
    check(x);
    return elements_[static_cast<size_t>(x)];
  }

  Atom index_of(const std::string& s) const {
    for (int i = 0; i < size(); ++i)
      if (elements_[static_cast<size_t>(i)] == s) return i;
    throw PosetError("poset '" + name_ + "' has no element '" + s + "'");
  }

  bool contains(const std::string& s) const {
    for (const auto& e : elements_)
      if (e == s) return true;
    return false;
  }

  std::optional<Atom> top() const {
    return top_ < 0 ? std::nullopt : std::optional<Atom>(top_);
  }
  std::optional<Atom> bottom() const {
    return bottom_ < 0 ? std::nullopt : std::optional<Atom>(bottom_);
  }

  // Builtin posets. Element order is bot < a < b < c < top, which doubles
  // as the structural tie-break order for atoms.
  static const Poset& boolean() {
    static const Poset p("bool", {"bot", "top"}, {{"bot", "top"}});
    return p;
  }
  static const Poset& p3() {
    static const Poset p("p3", {"bot", "a", "b", "c", "top"},
                         {{"bot", "a"},
                          {"bot", "b"},
                          {"bot", "c"},
                          {"a", "top"},
                          {"b", "top"},
                          {"c", "top"}});
    return p;
  }
  static const Poset& corner() {
    static const Poset p("corner", {"bot", "a", "b", "c", "top"},
                         {{"bot", "a"},
                          {"bot", "b"},
                          {"bot", "c"},
                          {"a", "top"},
                          {"b", "top"},
                          {"c", "top"},
                          {"c", "a"}});
    return p;
  }
  static const Poset& fork() {
    static const Poset p("fork", {"bot", "a", "b", "top"},
                         {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
    return p;
  }

  static const Poset& builtin(const std::string& name) {
    if (name == "bool") return boolean();
    if (name == "p3") return p3();
    if (name == "corner") return corner();
    if (name == "fork") return fork();
    throw PosetError("unknown builtin poset '" + name + "'");
  }

 private:
  void check(Atom x) const {
    if (x < 0 || x >= size())
      throw PosetError("atom index " + std::to_string(x) +
                       " out of range for poset '" + name_ + "'");
  }
  bool get(int i, int j) const {
    return rel_[static_cast<size_t>(i) * elements_.size() + j];
  }
  void set(int i, int j, bool v) {
    rel_[static_cast<size_t>(i) * elements_.size() + j] = v;
  }
  int find_extreme(bool want_top) const {
    for (int i = 0; i < size(); ++i) {
      bool ok = true;
      for (int j = 0; j < size(); ++j)
        if (want_top ? !get(j, i) : !get(i, j)) {
          ok = false;
          break;
        }
      if (ok) return i;
    }
    return -1;
  }

  std::string name_;
  uint64_t serial_ = 0;
  std::vector<std::string> elements_;
  std::vector<bool> rel_;
  int top_ = -1;
  int bottom_ = -1;
};

// A total assignment between posets. Monotonicity is a property to be
// checked, not an invariant of construction.
struct MonotoneMap {
  const Poset* source = nullptr;
  const Poset* target = nullptr;
  std::vector<Atom> assignment;  // indexed by source atom

  Atom operator()(Atom x) const { return assignment.at(static_cast<size_t>(x)); }
};

inline bool check_monotone(const MonotoneMap& m) {
  if (!m.source || !m.target ||
      m.assignment.size() != static_cast<size_t>(m.source->size()))
    throw PosetError("monotone map is not total");
  for (Atom x = 0; x < m.source->size(); ++x)
    for (Atom y = 0; y < m.source->size(); ++y)
      if (m.source->leq(x, y) && !m.target->leq(m(x), m(y))) return false;
  return true;
}

// The two quotient maps out of p3 the region kinds use.
inline MonotoneMap quotient_map(const std::string& kind) {
  MonotoneMap m;
  m.source = &Poset::p3();
  if (kind == "p3_to_corner") {
    m.target = &Poset::corner();
    for (int i = 0; i < m.source->size(); ++i)
      m.assignment.push_back(m.target->index_of(m.source->name_of(i)));
  } else if (kind == "p3_to_fork") {
    m.target = &Poset::fork();
    for (int i = 0; i < m.source->size(); ++i) {
      const std::string& n = m.source->name_of(i);
      m.assignment.push_back(m.target->index_of(n == "c" ? "bot" : n));
    }
  } else {
    throw PosetError("unknown quotient map '" + kind + "'");
  }
  return m;
}

}  // namespace hexcgt
