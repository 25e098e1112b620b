#pragma once

#include <thread>

#include "hexcgt/decompose.hpp"
#include "hexcgt/detail/primaries_data.hpp"
#include "hexcgt/form_io.hpp"
#include "hexcgt/region_game.hpp"
#include "hexcgt/sums.hpp"

namespace hexcgt {

class DatabaseError : public std::runtime_error {
 public:
  explicit DatabaseError(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- primary positions ---------------------------------------------------

// A board fragment with labelled black terminals and, for dualization, the
// labelled white boundary stones that become the dual's terminals.
struct PrimaryPosition {
  int id = 0;
  Board fragment;
  std::map<int, Coord> black_labels;
  std::map<int, Coord> white_labels;

  int arity() const { return static_cast<int>(black_labels.size()); }
  int empty_cells() const {
    int n = 0;
    for (Coord c : fragment.all_cells())
      if (fragment.at(c) == Cell::Empty) ++n;
    return n;
  }
};

class PrimaryLib {
 public:
  PrimaryLib() = default;

  static PrimaryLib builtin() {
    PrimaryLib lib;
    lib.load_text(detail::kBuiltinPrimaries);
    return lib;
  }

  void load_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<PrimaryPosition> cur;
    int lineno = 0;
    auto flush = [&]() {
      if (!cur) return;
      validate(*cur);
      primaries_[cur->id] = std::move(*cur);
      cur.reset();
    };
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::string cmd;
      ls >> cmd;
      if (cmd == "primary") {
        flush();
        cur.emplace();
        ls >> cur->id;
        if (cur->id < 1) throw DatabaseError("bad primary id");
        // board block follows immediately
        std::string hd;
        if (!std::getline(in, hd)) throw DatabaseError("primary without board");
        ++lineno;
        std::istringstream hs(hd);
        std::string word;
        int cols = 0, rows = 0;
        hs >> word >> cols >> rows;
        if (word != "hex" || cols < 1 || rows < 1)
          throw DatabaseError("primary block needs 'hex <cols> <rows>'");
        cur->fragment = Board(cols, rows, Cell::Out);
        for (int y = 1; y <= rows; ++y) {
          std::string row;
          if (!std::getline(in, row)) throw DatabaseError("primary board truncated");
          ++lineno;
          if (!row.empty() && row.back() == '\r') row.pop_back();
          if (static_cast<int>(row.size()) != cols)
            throw DatabaseError("primary board row length mismatch");
          for (int x = 1; x <= cols; ++x) {
            char ch = row[static_cast<size_t>(x - 1)];
            Cell v = ch == '.'   ? Cell::Empty
                     : ch == 'B' ? Cell::Black
                     : ch == 'W' ? Cell::White
                     : ch == '#' ? Cell::Out
                                 : Cell{255};
            if (v == Cell{255}) throw DatabaseError("bad primary board character");
            cur->fragment.set({x, y}, v);
          }
        }
      } else if (cmd == "blabel" || cmd == "wlabel") {
        if (!cur) throw DatabaseError("label line outside a primary block");
        int lab = 0;
        std::string cell;
        ls >> lab >> cell;
        Coord c = parse_coord(cell, lineno);
        if (cmd == "blabel") cur->black_labels[lab] = c;
        else cur->white_labels[lab] = c;
      } else {
        throw DatabaseError("unknown primaries directive '" + cmd + "'");
      }
    }
    flush();
  }

  bool contains(int id) const { return primaries_.count(id) > 0; }
  const PrimaryPosition& at(int id) const {
    auto it = primaries_.find(id);
    if (it == primaries_.end())
      throw DatabaseError("unknown primary P" + std::to_string(id));
    return it->second;
  }
  size_t size() const { return primaries_.size(); }

  // The fragment of P_id or its dual: the dual swaps the colors and takes
  // the white labels as terminals.
  Region region_of(int id, bool dual) const {
    const PrimaryPosition& p = at(id);
    Region r;
    r.board = p.fragment;
    if (dual)
      for (Coord c : r.board.all_cells()) {
        Cell v = r.board.at(c);
        if (v == Cell::Black) r.board.set(c, Cell::White);
        else if (v == Cell::White) r.board.set(c, Cell::Black);
      }
    r.cells = r.board.all_cells();
    r.kind = p.arity() == 2 ? RegionKind::TwoTerminal : RegionKind::Generic3;
    const auto& labels = dual ? p.white_labels : p.black_labels;
    for (int t = 1; t <= p.arity(); ++t) {
      auto it = labels.find(t);
      if (it == labels.end()) throw DatabaseError("primary lacks a terminal label");
      r.terminals.push_back(TerminalSpec::of_cells({it->second}));
    }
    return r;
  }

 private:
  static void validate(const PrimaryPosition& p) {
    if (p.black_labels.size() != p.white_labels.size() ||
        (p.arity() != 2 && p.arity() != 3))
      throw DatabaseError("primary P" + std::to_string(p.id) +
                          " needs 2 or 3 labels of each color");
    auto check = [&](const std::map<int, Coord>& m, Cell want) {
      int expect = 1;
      for (const auto& [lab, c] : m) {
        if (lab != expect++)
          throw DatabaseError("primary labels must be 1..k");
        if (p.fragment.at(c) != want)
          throw DatabaseError("primary label on a wrong-colored cell");
      }
    };
    check(p.black_labels, Cell::Black);
    check(p.white_labels, Cell::White);
  }

  std::map<int, PrimaryPosition> primaries_;
};

// ---- composition expressions ----------------------------------------------

// One component of a composition: a direct terminal junction or a primary
// position reference with label arguments.
struct Component {
  enum Kind : uint8_t { kEmpty, kEq, kPrimary } kind = kEmpty;
  int primary_id = 0;
  bool dual = false;     // the "op" flag
  bool mirrored = false; // the "x" chirality flag
  std::vector<int> labels;
};

struct CompositionExpr {
  std::vector<Component> components;
};

inline std::string print_composition(const CompositionExpr& e) {
  std::string out;
  for (size_t i = 0; i < e.components.size(); ++i) {
    if (i) out += ", ";
    const Component& c = e.components[i];
    switch (c.kind) {
      case Component::kEmpty:
        out += "Empty";
        break;
      case Component::kEq:
      case Component::kPrimary: {
        if (c.kind == Component::kEq) {
          out += "Eq";
        } else {
          out += "P" + std::to_string(c.primary_id);
          if (c.dual) out += "op";
        }
        out += "(";
        for (size_t j = 0; j < c.labels.size(); ++j) {
          if (j) out += ",";
          out += std::to_string(c.labels[j]);
        }
        out += ")";
        if (c.kind == Component::kPrimary && c.mirrored) out += "x";
        break;
      }
    }
  }
  return out;
}

class CompositionParseError : public std::runtime_error {
 public:
  CompositionParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)),
        position(pos) {}
  size_t position;
};

inline CompositionExpr parse_composition(const std::string& text) {
  CompositionExpr expr;
  size_t i = 0;
  auto skip_ws = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_labels = [&](Component& c) {
    if (i >= text.size() || text[i] != '(')
      throw CompositionParseError("expected '('", i);
    ++i;
    while (true) {
      skip_ws();
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw CompositionParseError("expected label", i);
      int label = std::stoi(text.substr(start, i - start));
      if (label < 1) throw CompositionParseError("labels are positive", start);
      c.labels.push_back(label);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        return;
      }
      throw CompositionParseError("expected ',' or ')'", i);
    }
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) throw CompositionParseError("expected component", i);
    Component c;
    if (text.compare(i, 5, "Empty") == 0) {
      i += 5;
      c.kind = Component::kEmpty;
    } else if (text.compare(i, 2, "Eq") == 0) {
      i += 2;
      c.kind = Component::kEq;
      parse_labels(c);
      if (c.labels.size() != 2 && c.labels.size() != 3)
        throw CompositionParseError("Eq takes 2 or 3 labels", i);
    } else if (text[i] == 'P') {
      ++i;
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw CompositionParseError("expected primary id", i);
      c.kind = Component::kPrimary;
      c.primary_id = std::stoi(text.substr(start, i - start));
      if (text.compare(i, 2, "op") == 0) {
        c.dual = true;
        i += 2;
      }
      parse_labels(c);
      if (i < text.size() && text[i] == 'x') {
        c.mirrored = true;
        ++i;
      }
    } else {
      throw CompositionParseError("expected 'Empty', 'Eq' or 'P<id>'", i);
    }
    expr.components.push_back(std::move(c));
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != ',')
      throw CompositionParseError("expected ',' between components", i);
    ++i;
  }
  return expr;
}

// Labels are wires: external terminals are 1, 2 and 3; larger labels join
// the slots that share them. A label occurring once is a dangling wire end
// and joins nothing.
inline void validate_labels(const CompositionExpr& e) {
  for (const Component& c : e.components)
    for (int l : c.labels)
      if (l < 1) throw DatabaseError("labels are positive integers");
}

// Canonical form of an expression: junction stubs dropped and internal
// labels renumbered 4, 5, ... in order of first occurrence.
inline CompositionExpr normalize_expr(const CompositionExpr& e) {
  CompositionExpr out;
  std::map<int, int> count;
  for (const Component& c : e.components)
    for (int l : c.labels) ++count[l];
  for (const Component& c : e.components) {
    if (c.kind == Component::kEq) {
      Component eq = c;
      eq.labels.clear();
      for (int l : c.labels)
        if (l <= 3 || count[l] >= 2) eq.labels.push_back(l);
      if (eq.labels.size() >= 2) out.components.push_back(eq);
      continue;
    }
    out.components.push_back(c);
  }
  if (out.components.empty())
    out.components.push_back({Component::kEmpty, 0, false, false, {}});
  std::map<int, int> renum;
  int next = 4;
  for (Component& c : out.components)
    for (int& l : c.labels) {
      if (l <= 3) continue;
      auto it = renum.find(l);
      if (it == renum.end()) it = renum.emplace(l, next++).first;
      l = it->second;
    }
  return out;
}

inline int expr_empty_cells(const CompositionExpr& e, const PrimaryLib& lib) {
  int n = 0;
  for (const Component& c : e.components)
    if (c.kind == Component::kPrimary) n += lib.at(c.primary_id).empty_cells();
  return n;
}

// Evaluates a composition: operand values come from the (possibly dualized)
// fragments, Eq components contribute junction atoms, and the operands are
// summed over the wiring the shared labels induce.
inline const GameNode* expr_value(Universe& u, const CompositionExpr& e,
                                  const PrimaryLib& lib) {
  validate_labels(e);
  std::vector<const GameNode*> operands;
  std::vector<const Poset*> posets;
  Wiring w;
  w.name = "expr";
  w.external_count = 3;
  std::map<int, Wiring::Node> first_at;  // label -> first node carrying it
  auto wire = [&](int label, Wiring::Node node) {
    if (label <= 3) {
      w.joins.push_back({{-1, label}, node});
      return;
    }
    auto it = first_at.find(label);
    if (it == first_at.end()) first_at.emplace(label, node);
    else w.joins.push_back({it->second, node});
  };
  for (const Component& c : e.components) {
    if (c.kind == Component::kEmpty) continue;
    int op_index = static_cast<int>(operands.size());
    if (c.kind == Component::kEq) {
      const Poset& p = c.labels.size() == 2 ? Poset::boolean() : Poset::p3();
      operands.push_back(u.atom(p, "top"));
      posets.push_back(&p);
    } else {
      Region r = lib.region_of(c.primary_id, c.dual);
      operands.push_back(region_canonical_value_decomposed(u, r));
      posets.push_back(operands.back()->poset);
    }
    w.operand_terminals.push_back(static_cast<int>(c.labels.size()));
    for (size_t s = 0; s < c.labels.size(); ++s)
      wire(c.labels[s], {op_index, static_cast<int>(s) + 1});
  }
  if (operands.empty()) return u.atom(Poset::p3(), "bot");
  SumRule rule = wiring_atom_table(w, posets);
  return materialize_canonical(u, sum(u, rule, operands));
}

// ---- database entries -------------------------------------------------------

struct DbEntry {
  int empties = 0;
  std::string value;  // canonical form, value grammar
  std::string expr;   // composition grammar
};

inline std::string print_entry(const DbEntry& e) {
  return std::to_string(e.empties) + " " + e.value + " G(1,2,3) = " + e.expr;
}

inline DbEntry parse_entry(const std::string& line) {
  std::istringstream in(line);
  DbEntry e;
  std::string value, g, eq;
  if (!(in >> e.empties >> value >> g >> eq) || g != "G(1,2,3)" || eq != "=")
    throw DatabaseError("malformed database line: " + line);
  e.value = value;
  std::getline(in, e.expr);
  size_t start = e.expr.find_first_not_of(' ');
  e.expr = start == std::string::npos ? "" : e.expr.substr(start);
  return e;
}

// true iff the expression reproduces the entry's canonical value and its
// empty-cell count.
inline bool verify_entry(Universe& u, const DbEntry& e, const PrimaryLib& lib,
                         std::string* reason = nullptr) {
  CompositionExpr expr = parse_composition(e.expr);
  const GameNode* got = expr_value(u, expr, lib);
  const GameNode* want = canonical(u, parse_value(u, e.value, Poset::p3()));
  if (got != want) {
    if (reason) *reason = "value is " + print_value(u, got);
    return false;
  }
  int empties = expr_empty_cells(expr, lib);
  if (empties != e.empties) {
    if (reason) *reason = "empty count is " + std::to_string(empties);
    return false;
  }
  return true;
}

// ---- closure-based generation ------------------------------------------------

struct GenerateLimits {
  int max_atoms = 50;
  int max_rounds = 4;
  size_t max_entries = 20000;
};

struct GenerateStatus {
  int rounds_run = 0;
  bool entry_limit_hit = false;
  bool round_limit_hit = false;
};

namespace detail {

inline CompositionExpr remap_labels(const CompositionExpr& e,
                                    const std::function<int(int)>& f) {
  CompositionExpr out = e;
  for (Component& c : out.components)
    for (int& l : c.labels) l = f(l);
  return out;
}

inline int max_label(const CompositionExpr& e) {
  int m = 3;
  for (const Component& c : e.components)
    for (int l : c.labels) m = std::max(m, l);
  return m;
}

// relabels external terminals by a permutation of {1,2,3}; odd permutations
// flip every primary's chirality to stay planar
inline CompositionExpr relabel_expr(const CompositionExpr& e,
                                    const std::array<int, 3>& perm) {
  CompositionExpr out = remap_labels(e, [&](int l) {
    return l <= 3 ? perm[static_cast<size_t>(l - 1)] : l;
  });
  int inversions = (perm[0] > perm[1]) + (perm[0] > perm[2]) + (perm[1] > perm[2]);
  if (inversions % 2 == 1)
    for (Component& c : out.components)
      if (c.kind == Component::kPrimary) c.mirrored = !c.mirrored;
  return out;
}

inline CompositionExpr toggle_ops(const CompositionExpr& e) {
  CompositionExpr out = e;
  for (Component& c : out.components)
    if (c.kind == Component::kPrimary) c.dual = !c.dual;
  return out;
}

// Composes the duals of three expressions into the planar dual of their
// pinwheel: the center face joins the slot-3 terminals of all three duals,
// and the outer faces become the new externals (3,1,2 going around).
inline CompositionExpr pinwheel_dual_expr(const CompositionExpr& xd,
                                          const CompositionExpr& yd,
                                          const CompositionExpr& zd) {
  static const int ext[3] = {3, 1, 2};
  CompositionExpr out;
  const CompositionExpr* ops[3] = {&xd, &yd, &zd};
  int next = 5;  // 4 is the center junction
  for (int k = 0; k < 3; ++k) {
    std::map<int, int> fresh;
    CompositionExpr part = remap_labels(*ops[k], [&](int l) -> int {
      if (l == 1) return ext[(k + 2) % 3];
      if (l == 2) return ext[k];
      if (l == 3) return 4;
      auto it = fresh.find(l);
      if (it == fresh.end()) it = fresh.emplace(l, next++).first;
      return it->second;
    });
    for (Component& comp : part.components) out.components.push_back(comp);
  }
  return out;
}

// composes three expressions through the pinwheel junctions: terminal 1 of
// each operand meets terminal 2 of the next, terminal 3 goes outside
inline CompositionExpr pinwheel_expr(const CompositionExpr& a,
                                     const CompositionExpr& b,
                                     const CompositionExpr& c) {
  CompositionExpr out;
  const CompositionExpr* ops[3] = {&a, &b, &c};
  int next = 7;  // 4,5,6 are the junctions
  for (int k = 0; k < 3; ++k) {
    int junction_own = 4 + k;             // carries terminal 1 of operand k
    int junction_prev = 4 + (k + 2) % 3;  // terminal 2 meets the previous one
    std::map<int, int> fresh;
    CompositionExpr part = remap_labels(*ops[k], [&](int l) -> int {
      if (l == 1) return junction_own;
      if (l == 2) return junction_prev;
      if (l == 3) return k + 1;
      auto it = fresh.find(l);
      if (it == fresh.end()) it = fresh.emplace(l, next++).first;
      return it->second;
    });
    for (Component& comp : part.components) out.components.push_back(comp);
  }
  return normalize_expr(out);
}

}  // namespace detail

// Searches for an expression realizing the dual of `e`'s value: a planar
// complement for the simple shapes (junction-only expressions, a single
// primary, a junction plus a two-terminal piece) and the op-toggle
// otherwise. Every candidate is verified before being returned.
inline std::optional<std::string> find_dual_expr(Universe& u, const PrimaryLib& lib,
                                                 const CompositionExpr& e,
                                                 const GameNode* dual_val) {
  std::vector<CompositionExpr> candidates;
  const auto& comps = e.components;
  if (comps.size() == 1 && comps[0].kind == Component::kEmpty) {
    CompositionExpr c;
    c.components.push_back({Component::kEq, 0, false, false, {1, 2, 3}});
    candidates.push_back(c);
  } else if (comps.size() == 1 && comps[0].kind == Component::kEq &&
             comps[0].labels.size() == 3) {
    CompositionExpr c;
    c.components.push_back({Component::kEmpty, 0, false, false, {}});
    candidates.push_back(c);
  } else if (comps.size() == 1 && comps[0].kind == Component::kEq) {
    candidates.push_back(e);  // a junction between two externals is self-dual
  } else if (comps.size() == 1 && comps[0].kind == Component::kPrimary &&
             comps[0].labels.size() == 2) {
    // a two-terminal piece between externals x and y: the dual keeps x and y
    // joined and moves the piece between that junction and the third terminal
    int x = comps[0].labels[0], y = comps[0].labels[1];
    if (x <= 3 && y <= 3) {
      int z = 6 - x - y;
      for (int endpoint : {x, y}) {
        CompositionExpr c;
        c.components.push_back({Component::kEq, 0, false, false, {x, y}});
        Component piece = comps[0];
        piece.labels = {z, endpoint};
        c.components.push_back(piece);
        candidates.push_back(c);
        piece.dual = !piece.dual;
        CompositionExpr c2 = c;
        c2.components[1] = piece;
        candidates.push_back(c2);
      }
    }
  } else if (comps.size() == 2 &&
             ((comps[0].kind == Component::kEq && comps[1].kind == Component::kPrimary) ||
              (comps[1].kind == Component::kEq && comps[0].kind == Component::kPrimary))) {
    const Component& eq = comps[0].kind == Component::kEq ? comps[0] : comps[1];
    const Component& pr = comps[0].kind == Component::kPrimary ? comps[0] : comps[1];
    if (eq.labels.size() == 2 && pr.labels.size() == 2) {
      for (bool flip : {false, true}) {
        CompositionExpr c;
        Component piece = pr;
        piece.dual = flip ? !piece.dual : piece.dual;
        piece.labels = eq.labels;
        c.components.push_back(piece);
        candidates.push_back(c);
      }
    }
  }
  candidates.push_back(detail::toggle_ops(e));

  for (const CompositionExpr& cand : candidates) {
    try {
      if (expr_value(u, cand, lib) == dual_val &&
          expr_empty_cells(cand, lib) == expr_empty_cells(e, lib))
        return print_composition(cand);
    } catch (const DatabaseError&) {
    }
  }
  return std::nullopt;
}

// Fixpoint closure of the seed entries under the six terminal relabelings,
// duals, and pinwheel composition. Deduplicates by canonical value, keeping
// the expression with the fewest empty cells (ties by expression text), and
// drops values whose canonical form exceeds max_atoms atom occurrences.
// Deterministic for fixed seeds and limits. Entries whose dual has no
// expressible realization simply contribute nothing to the dual closure;
// everything emitted re-verifies.
inline std::vector<DbEntry> generate(Universe& u, const std::vector<DbEntry>& seeds,
                                     const PrimaryLib& lib,
                                     const GenerateLimits& limits,
                                     GenerateStatus* status = nullptr) {
  struct Item {
    const GameNode* value;
    int empties;
    std::string expr;
    std::optional<std::string> dual_expr;
  };
  std::map<const GameNode*, Item> best;  // keyed by canonical value node
  auto better = [](const Item& x, const Item& y) {
    if (x.empties != y.empties) return x.empties < y.empties;
    return x.expr < y.expr;
  };
  auto add = [&](Item item) -> bool {
    // returns true when the set changed
    auto it = best.find(item.value);
    if (it == best.end()) {
      best.emplace(item.value, item);
      return true;
    }
    if (better(item, it->second)) it->second = item;
    else if (!it->second.dual_expr && item.dual_expr)
      it->second.dual_expr = item.dual_expr;
    return false;
  };
  for (const DbEntry& s : seeds) {
    std::string why;
    if (!verify_entry(u, s, lib, &why))
      throw DatabaseError("seed fails verification (" + why + "): " + print_entry(s));
    const GameNode* v = canonical(u, parse_value(u, s.value, Poset::p3()));
    const GameNode* dv = canonical(u, dual_value(u, v));
    add({v, s.empties, s.expr,
         find_dual_expr(u, lib, parse_composition(s.expr), dv)});
  }

  GenerateStatus st;
  static const std::array<std::array<int, 3>, 6> kPerms = {
      {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
  for (int round = 0; round < limits.max_rounds; ++round) {
    st.rounds_run = round + 1;
    bool changed = false;
    std::vector<Item> snapshot;
    for (const auto& [v, item] : best) snapshot.push_back(item);
    std::sort(snapshot.begin(), snapshot.end(),
              [](const Item& x, const Item& y) {
                if (x.empties != y.empties) return x.empties < y.empties;
                return x.expr < y.expr;
              });
    auto admit = [&](const GameNode* val, int empties, CompositionExpr expr,
                     std::optional<CompositionExpr> dual) {
      if (atom_count(u, val) > limits.max_atoms) return;
      if (best.size() >= limits.max_entries && !best.count(val)) {
        st.entry_limit_hit = true;
        return;
      }
      std::optional<std::string> dual_text;
      if (dual) dual_text = print_composition(*dual);
      changed |= add({val, empties, print_composition(expr), dual_text});
    };
    for (const Item& item : snapshot) {
      CompositionExpr expr = parse_composition(item.expr);
      std::optional<CompositionExpr> dexpr;
      if (item.dual_expr) dexpr = parse_composition(*item.dual_expr);
      for (const auto& perm : kPerms) {
        const GameNode* v = canonical(u, relabel(u, item.value, perm));
        std::optional<CompositionExpr> rd;
        if (dexpr) rd = detail::relabel_expr(*dexpr, perm);
        admit(v, item.empties, detail::relabel_expr(expr, perm), rd);
      }
      if (dexpr) {
        const GameNode* dv = canonical(u, dual_value(u, item.value));
        admit(dv, item.empties, *dexpr, expr);
      }
    }
    for (const Item& x : snapshot) {
      if (st.entry_limit_hit) break;
      for (const Item& y : snapshot) {
        if (st.entry_limit_hit) break;
        for (const Item& z : snapshot) {
          if (best.size() >= limits.max_entries) {
            st.entry_limit_hit = true;
            break;
          }
          const GameNode* v = canonical(
              u, pinwheel3(u, x.value, y.value, z.value));
          std::optional<CompositionExpr> dual;
          if (x.dual_expr && y.dual_expr && z.dual_expr)
            dual = detail::pinwheel_dual_expr(parse_composition(*x.dual_expr),
                                              parse_composition(*y.dual_expr),
                                              parse_composition(*z.dual_expr));
          admit(v, x.empties + y.empties + z.empties,
                detail::pinwheel_expr(parse_composition(x.expr),
                                      parse_composition(y.expr),
                                      parse_composition(z.expr)),
                dual);
        }
      }
    }
    if (!changed) break;
    if (round + 1 == limits.max_rounds && changed) st.round_limit_hit = true;
  }

  std::vector<DbEntry> out;
  for (const auto& [v, item] : best)
    out.push_back({item.empties, print_value(u, item.value), item.expr});
  std::sort(out.begin(), out.end(), [](const DbEntry& x, const DbEntry& y) {
    if (x.empties != y.empties) return x.empties < y.empties;
    if (x.value != y.value) return x.value < y.value;
    return x.expr < y.expr;
  });
  if (status) *status = st;
  return out;
}

// Pushes every entry through a quotient map (p3 to corner or fork),
// re-canonicalizes over the target poset and deduplicates.
inline std::vector<DbEntry> quotient_db(Universe& u,
                                        const std::vector<DbEntry>& db,
                                        const MonotoneMap& m) {
  if (m.source != &Poset::p3()) throw DatabaseError("quotients start from p3");
  std::map<const GameNode*, DbEntry> best;
  for (const DbEntry& e : db) {
    const GameNode* v = parse_value(u, e.value, Poset::p3());
    const GameNode* q = canonical(u, map_atoms(u, v, m));
    DbEntry ne{e.empties, print_value(u, q), e.expr};
    auto it = best.find(q);
    if (it == best.end() || ne.empties < it->second.empties ||
        (ne.empties == it->second.empties && ne.expr < it->second.expr))
      best[q] = ne;
  }
  std::vector<DbEntry> out;
  for (const auto& [v, e] : best) out.push_back(e);
  std::sort(out.begin(), out.end(), [](const DbEntry& x, const DbEntry& y) {
    if (x.empties != y.empties) return x.empties < y.empties;
    if (x.value != y.value) return x.value < y.value;
    return x.expr < y.expr;
  });
  return out;
}

// ---- database files -----------------------------------------------------------

inline std::vector<DbEntry> parse_database(std::istream& in) {
  std::vector<DbEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_entry(line));
  }
  return out;
}

inline std::string print_database(const std::vector<DbEntry>& db) {
  std::string out;
  for (const DbEntry& e : db) out += print_entry(e) + "\n";
  return out;
}

// ---- board assembly -------------------------------------------------------------

struct ComponentLayout {
  int dx = 0, dy = 0;
  int rotation = 0;   // multiples of 60 degrees, counterclockwise
  bool mirror = false;
};

struct AssemblyLayout {
  std::vector<ComponentLayout> placements;          // one per component
  std::vector<std::vector<Coord>> connectors;        // black stone paths
  int cols = 0, rows = 0;
};

namespace detail {

inline Coord rot60(Coord c) { return {-c.y, c.x + c.y}; }

inline Coord place(Coord c, const ComponentLayout& l) {
  if (l.mirror) c = {c.y, c.x};
  for (int i = 0; i < ((l.rotation % 6) + 6) % 6; ++i) c = rot60(c);
  return {c.x + l.dx, c.y + l.dy};
}

}  // namespace detail

// Assembles a composition into one position: places each primary fragment,
// merges identical wall stones, lays the connector stones, and designates
// the external terminals. The caller should check the result against
// expr_value; assemble_board re-evaluates and throws on a value mismatch.
inline Position assemble_board(Universe& u, const CompositionExpr& e,
                               const PrimaryLib& lib, const AssemblyLayout& layout) {
  validate_labels(e);
  std::vector<const Component*> prims;
  for (const Component& c : e.components)
    if (c.kind == Component::kPrimary) prims.push_back(&c);
  if (prims.size() != layout.placements.size())
    throw DatabaseError("layout placement count mismatch");
  Position out;
  out.board = Board(layout.cols, layout.rows, Cell::Out);
  std::map<int, std::vector<Coord>> label_cells;
  for (size_t i = 0; i < prims.size(); ++i) {
    const Component& c = *prims[i];
    const ComponentLayout& pl = layout.placements[i];
    Region frag = lib.region_of(c.primary_id, c.dual);
    for (Coord cc : frag.board.all_cells()) {
      Cell v = frag.board.at(cc);
      Coord dst = detail::place(cc, pl);
      if (!out.board.in_grid(dst))
        throw DatabaseError("placement leaves the assembly grid");
      Cell prev = out.board.at(dst);
      if (prev == Cell::Out) out.board.set(dst, v);
      else if (prev != v)
        throw DatabaseError("component placements overlap inconsistently");
      // overlapping identical stones merge (shared walls)
      if (prev == Cell::Empty && v == Cell::Empty)
        throw DatabaseError("empty cells of two components overlap");
    }
    for (size_t s = 0; s < c.labels.size(); ++s) {
      Coord t = detail::place(frag.terminals[s].cells.at(0), pl);
      label_cells[c.labels[static_cast<size_t>(s)]].push_back(t);
    }
  }
  for (const auto& path : layout.connectors)
    for (Coord cc : path) {
      if (!out.board.in_grid(cc))
        throw DatabaseError("connector outside the assembly grid");
      Cell prev = out.board.at(cc);
      if (prev == Cell::Empty)
        throw DatabaseError("connector breaks into a fragment interior");
      if (prev == Cell::White)
        throw DatabaseError("connector collides with a wall stone");
      out.board.set(cc, Cell::Black);
    }
  out.kind = RegionKind::Generic3;
  for (int t = 1; t <= 3; ++t) {
    auto it = label_cells.find(t);
    if (it == label_cells.end())
      throw DatabaseError("external terminal " + std::to_string(t) +
                          " is not placed");
    out.terminals.push_back(TerminalSpec::of_cells({it->second.front()}));
  }
  // the assembled region must realize the expression's value
  Region r = region_of_position(out);
  const GameNode* want = expr_value(u, e, lib);
  const GameNode* got = region_canonical_value_decomposed(u, r);
  if (!u.equivalent(got, want))
    throw DatabaseError("assembled region evaluates to " + print_value(u, got) +
                        ", expected " + print_value(u, want));
  return out;
}

}  // namespace hexcgt
