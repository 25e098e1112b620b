#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "hexcgt/canonical.hpp"
#include "hexcgt/game.hpp"

namespace hexcgt {

class BoardError : public std::runtime_error {
 public:
  explicit BoardError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Coord {
  int x = 0;  // column, 1-based
  int y = 0;  // row, 1-based
  auto operator<=>(const Coord&) const = default;
};

// Axial neighbors: (+-1,0), (0,+-1), (+1,-1), (-1,+1).
inline constexpr Coord kNeighborDeltas[6] = {{1, 0},  {-1, 0}, {0, 1},
                                             {0, -1}, {1, -1}, {-1, 1}};

enum class Cell : uint8_t { Empty, Black, White, Out };

inline char cell_char(Cell c) {
  switch (c) {
    case Cell::Empty: return '.';
    case Cell::Black: return 'B';
    case Cell::White: return 'W';
    case Cell::Out: return '#';
  }
  return '?';
}

enum class EdgeSide : uint8_t { Top, Bottom, Left, Right };

inline const char* edge_name(EdgeSide s) {
  switch (s) {
    case EdgeSide::Top: return "top";
    case EdgeSide::Bottom: return "bottom";
    case EdgeSide::Left: return "left";
    case EdgeSide::Right: return "right";
  }
  return "?";
}

// Top and bottom edges belong to Black, left and right to White.
inline bool edge_is_black(EdgeSide s) {
  return s == EdgeSide::Top || s == EdgeSide::Bottom;
}

// A rhombic grid fragment. Cells marked Out are not part of the position.
class Board {
 public:
  Board() = default;
  Board(int cols, int rows, Cell fill = Cell::Empty)
      : cols_(cols), rows_(rows),
        cells_(static_cast<size_t>(cols) * static_cast<size_t>(rows), fill) {
    if (cols < 1 || rows < 1) throw BoardError("board dimensions must be positive");
  }

  int cols() const { return cols_; }
  int rows() const { return rows_; }
  bool in_grid(Coord c) const {
    return c.x >= 1 && c.x <= cols_ && c.y >= 1 && c.y <= rows_;
  }
  Cell at(Coord c) const {
    return in_grid(c) ? cells_[index(c)] : Cell::Out;
  }
  void set(Coord c, Cell v) {
    if (!in_grid(c)) throw BoardError("cell out of grid");
    cells_[index(c)] = v;
  }
  bool exists(Coord c) const { return at(c) != Cell::Out; }

  // Whether `c` touches the given board edge.
  bool touches_edge(Coord c, EdgeSide s) const {
    switch (s) {
      case EdgeSide::Top: return c.y == 1;
      case EdgeSide::Bottom: return c.y == rows_;
      case EdgeSide::Left: return c.x == 1;
      case EdgeSide::Right: return c.x == cols_;
    }
    return false;
  }

  std::vector<Coord> all_cells() const {
    std::vector<Coord> v;
    for (int y = 1; y <= rows_; ++y)
      for (int x = 1; x <= cols_; ++x)
        if (exists({x, y})) v.push_back({x, y});
    return v;
  }

  bool operator==(const Board& o) const {
    return cols_ == o.cols_ && rows_ == o.rows_ && cells_ == o.cells_;
  }

 private:
  size_t index(Coord c) const {
    return static_cast<size_t>(c.y - 1) * static_cast<size_t>(cols_) +
           static_cast<size_t>(c.x - 1);
  }

  int cols_ = 0, rows_ = 0;
  std::vector<Cell> cells_;
};

enum class RegionKind : uint8_t {
  TwoTerminal,
  Generic3,
  Corner,
  Fork,
  PivotFork,
  WholeBoard,
};

inline const char* kind_name(RegionKind k) {
  switch (k) {
    case RegionKind::TwoTerminal: return "two_terminal";
    case RegionKind::Generic3: return "generic3";
    case RegionKind::Corner: return "corner";
    case RegionKind::Fork: return "fork";
    case RegionKind::PivotFork: return "pivot_fork";
    case RegionKind::WholeBoard: return "whole_board";
  }
  return "?";
}

inline RegionKind kind_from_name(const std::string& s) {
  if (s == "two_terminal") return RegionKind::TwoTerminal;
  if (s == "generic3") return RegionKind::Generic3;
  if (s == "corner") return RegionKind::Corner;
  if (s == "fork") return RegionKind::Fork;
  if (s == "pivot_fork") return RegionKind::PivotFork;
  if (s == "whole_board") return RegionKind::WholeBoard;
  throw BoardError("unknown region kind '" + s + "'");
}

// A terminal group: either a black board edge or a set of cells.
struct TerminalSpec {
  bool is_edge = false;
  EdgeSide edge = EdgeSide::Bottom;
  std::vector<Coord> cells;

  static TerminalSpec of_edge(EdgeSide s) {
    TerminalSpec t;
    t.is_edge = true;
    t.edge = s;
    return t;
  }
  static TerminalSpec of_cells(std::vector<Coord> c) {
    TerminalSpec t;
    t.cells = std::move(c);
    return t;
  }
};

// A position file: a board plus optional region designation and named cell
// marks (used for probe indices and expected winning moves).
struct Position {
  Board board;
  std::optional<RegionKind> kind;
  std::vector<TerminalSpec> terminals;
  std::vector<EdgeSide> extra_edges;  // non-terminal walls (white sides only)
  std::map<std::string, Coord> marks;

  int empty_count() const {
    int n = 0;
    for (Coord c : board.all_cells())
      if (board.at(c) == Cell::Empty) ++n;
    return n;
  }
};

// ---- text format -------------------------------------------------------------

class PositionParseError : public std::runtime_error {
 public:
  PositionParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_number(line) {}
  int line_number;
};

inline Coord parse_coord(const std::string& tok, int lineno) {
  size_t comma = tok.find(',');
  if (comma == std::string::npos)
    throw PositionParseError("expected cell 'x,y', got '" + tok + "'", lineno);
  try {
    return {std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))};
  } catch (const std::exception&) {
    throw PositionParseError("bad cell '" + tok + "'", lineno);
  }
}

inline Position parse_position(std::istream& in) {
  Position pos;
  std::string line;
  int lineno = 0;
  // Comments and blank lines are allowed outside the grid block.
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw PositionParseError("empty input", lineno);
  std::istringstream hd(line);
  std::string word;
  int cols = 0, rows = 0;
  hd >> word >> cols >> rows;
  if (word != "hex" || cols < 1 || rows < 1)
    throw PositionParseError("expected header 'hex <cols> <rows>'", lineno);
  pos.board = Board(cols, rows);
  for (int y = 1; y <= rows; ++y) {
    if (!std::getline(in, line)) throw PositionParseError("missing board row", lineno);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (static_cast<int>(line.size()) != cols)
      throw PositionParseError("board row has wrong length", lineno);
    for (int x = 1; x <= cols; ++x) {
      switch (line[static_cast<size_t>(x - 1)]) {
        case '.': pos.board.set({x, y}, Cell::Empty); break;
        case 'B': pos.board.set({x, y}, Cell::Black); break;
        case 'W': pos.board.set({x, y}, Cell::White); break;
        case '#': pos.board.set({x, y}, Cell::Out); break;
        default:
          throw PositionParseError("bad board character", lineno);
      }
    }
  }
  while (next_line()) {
    std::istringstream ls(line);
    std::string cmd;
    ls >> cmd;
    if (cmd == "kind") {
      std::string k;
      ls >> k;
      pos.kind = kind_from_name(k);
    } else if (cmd == "terminal") {
      int idx = 0;
      ls >> idx;
      if (idx != static_cast<int>(pos.terminals.size()) + 1)
        throw PositionParseError("terminal indices must be declared 1,2,...", lineno);
      std::string tok;
      TerminalSpec spec;
      bool any = false;
      while (ls >> tok) {
        any = true;
        if (tok.rfind("edge:", 0) == 0) {
          std::string side = tok.substr(5);
          if (side == "top") spec = TerminalSpec::of_edge(EdgeSide::Top);
          else if (side == "bottom") spec = TerminalSpec::of_edge(EdgeSide::Bottom);
          else if (side == "left") spec = TerminalSpec::of_edge(EdgeSide::Left);
          else if (side == "right") spec = TerminalSpec::of_edge(EdgeSide::Right);
          else throw PositionParseError("bad edge side", lineno);
        } else {
          spec.cells.push_back(parse_coord(tok, lineno));
        }
      }
      if (!any) throw PositionParseError("terminal needs cells or an edge", lineno);
      pos.terminals.push_back(spec);
    } else if (cmd == "edge") {
      std::string side;
      ls >> side;
      if (side == "left") pos.extra_edges.push_back(EdgeSide::Left);
      else if (side == "right") pos.extra_edges.push_back(EdgeSide::Right);
      else throw PositionParseError("only white (left/right) walls may be non-terminal edges", lineno);
    } else if (cmd == "mark") {
      std::string label, cell;
      ls >> label >> cell;
      pos.marks[label] = parse_coord(cell, lineno);
    } else {
      throw PositionParseError("unknown directive '" + cmd + "'", lineno);
    }
  }
  return pos;
}

inline Position parse_position(const std::string& text) {
  std::istringstream in(text);
  return parse_position(in);
}

inline std::string print_position(const Position& pos) {
  std::ostringstream out;
  out << "hex " << pos.board.cols() << " " << pos.board.rows() << "\n";
  for (int y = 1; y <= pos.board.rows(); ++y) {
    for (int x = 1; x <= pos.board.cols(); ++x) out << cell_char(pos.board.at({x, y}));
    out << "\n";
  }
  if (pos.kind) out << "kind " << kind_name(*pos.kind) << "\n";
  for (size_t i = 0; i < pos.terminals.size(); ++i) {
    out << "terminal " << (i + 1);
    const TerminalSpec& t = pos.terminals[i];
    if (t.is_edge) {
      out << " edge:" << edge_name(t.edge);
    } else {
      for (Coord c : t.cells) out << " " << c.x << "," << c.y;
    }
    out << "\n";
  }
  for (EdgeSide s : pos.extra_edges) out << "edge " << edge_name(s) << "\n";
  for (const auto& [label, c] : pos.marks)
    out << "mark " << label << " " << c.x << "," << c.y << "\n";
  return out.str();
}

// ---- geometric and color transforms -------------------------------------------

inline Coord rotate180_coord(const Board& b, Coord c) {
  return {b.cols() + 1 - c.x, b.rows() + 1 - c.y};
}

inline Position transform_rotate180(const Position& p) {
  Position out = p;
  out.board = Board(p.board.cols(), p.board.rows(), Cell::Out);
  for (int y = 1; y <= p.board.rows(); ++y)
    for (int x = 1; x <= p.board.cols(); ++x)
      out.board.set(rotate180_coord(p.board, {x, y}), p.board.at({x, y}));
  for (auto& t : out.terminals) {
    if (t.is_edge) {
      t.edge = t.edge == EdgeSide::Top      ? EdgeSide::Bottom
               : t.edge == EdgeSide::Bottom ? EdgeSide::Top
               : t.edge == EdgeSide::Left   ? EdgeSide::Right
                                            : EdgeSide::Left;
    } else {
      for (auto& c : t.cells) c = rotate180_coord(p.board, c);
    }
  }
  for (auto& [k, c] : out.marks) c = rotate180_coord(p.board, c);
  return out;
}

// Reflection across the main diagonal: (x,y) -> (y,x). Orientation-reversing
// and adjacency-preserving; black and white edges trade places.
inline Position transform_mirror(const Position& p) {
  Position out = p;
  out.board = Board(p.board.rows(), p.board.cols(), Cell::Out);
  for (int y = 1; y <= p.board.rows(); ++y)
    for (int x = 1; x <= p.board.cols(); ++x)
      out.board.set({y, x}, p.board.at({x, y}));
  auto flip_side = [](EdgeSide s) {
    switch (s) {
      case EdgeSide::Top: return EdgeSide::Left;
      case EdgeSide::Left: return EdgeSide::Top;
      case EdgeSide::Bottom: return EdgeSide::Right;
      case EdgeSide::Right: return EdgeSide::Bottom;
    }
    return s;
  };
  for (auto& t : out.terminals) {
    if (t.is_edge) t.edge = flip_side(t.edge);
    else for (auto& c : t.cells) c = {c.y, c.x};
  }
  for (auto& s2 : out.extra_edges) {
    s2 = flip_side(s2);
    if (s2 == EdgeSide::Top || s2 == EdgeSide::Bottom)
      throw BoardError("mirror would move a white wall onto a black side");
  }
  for (auto& [k, c] : out.marks) c = {c.y, c.x};
  return out;
}

inline Position transform_translate(const Position& p, int dx, int dy) {
  Position out = p;
  out.board = Board(p.board.cols(), p.board.rows(), Cell::Out);
  for (int y = 1; y <= p.board.rows(); ++y)
    for (int x = 1; x <= p.board.cols(); ++x) {
      Cell v = p.board.at({x, y});
      if (v == Cell::Out) continue;
      Coord t{x + dx, y + dy};
      if (!out.board.in_grid(t)) throw BoardError("translate moves cells out of range");
      out.board.set(t, v);
    }
  for (auto& t : out.terminals)
    if (!t.is_edge)
      for (auto& c : t.cells) c = {c.x + dx, c.y + dy};
  for (auto& [k, c] : out.marks) c = {c.x + dx, c.y + dy};
  return out;
}

// Exchanges black and white stones. The edge-color convention is fixed, so
// color-swapped whole boards are normally combined with a mirror.
inline Position transform_color_swap(const Position& p) {
  Position out = p;
  for (Coord c : p.board.all_cells()) {
    Cell v = p.board.at(c);
    if (v == Cell::Black) out.board.set(c, Cell::White);
    else if (v == Cell::White) out.board.set(c, Cell::Black);
  }
  return out;
}

// ---- regions -----------------------------------------------------------------

// A designated part of a position, with the terminal structure that gives
// its completions outcomes.
struct Region {
  Board board;
  std::vector<Coord> cells;  // region cells (stones and empties)
  RegionKind kind = RegionKind::Generic3;
  std::vector<TerminalSpec> terminals;
  std::vector<EdgeSide> extra_edges;

  int empty_count() const {
    int n = 0;
    for (Coord c : cells)
      if (board.at(c) == Cell::Empty) ++n;
    return n;
  }
};

inline int expected_terminal_count(RegionKind k) {
  switch (k) {
    case RegionKind::TwoTerminal: return 2;
    case RegionKind::WholeBoard: return 2;
    case RegionKind::PivotFork: return 3;
    default: return 3;
  }
}

// Builds the region of a parsed position: all non-Out cells, with the
// declared kind and terminals (whole boards get their edge terminals
// implicitly).
inline Region region_of_position(const Position& pos) {
  Region r;
  r.board = pos.board;
  r.cells = pos.board.all_cells();
  if (!pos.kind) throw BoardError("position declares no region kind");
  r.kind = *pos.kind;
  r.terminals = pos.terminals;
  r.extra_edges = pos.extra_edges;
  if (r.kind == RegionKind::WholeBoard && r.terminals.empty()) {
    r.terminals.push_back(TerminalSpec::of_edge(EdgeSide::Top));
    r.terminals.push_back(TerminalSpec::of_edge(EdgeSide::Bottom));
  }
  if (static_cast<int>(r.terminals.size()) != expected_terminal_count(r.kind))
    throw BoardError("region kind " + std::string(kind_name(r.kind)) +
                     " needs " + std::to_string(expected_terminal_count(r.kind)) +
                     " terminals");
  return r;
}

// Every empty region cell must be walled in: each neighbor is a region
// cell, an occupied board cell, or lies beyond a board edge.
inline bool region_is_surrounded(const Region& r) {
  bool side_ok[4] = {false, false, false, false};
  if (r.kind == RegionKind::WholeBoard)
    side_ok[0] = side_ok[1] = side_ok[2] = side_ok[3] = true;
  for (const TerminalSpec& t : r.terminals)
    if (t.is_edge) side_ok[static_cast<int>(t.edge)] = true;
  for (EdgeSide s : r.extra_edges) side_ok[static_cast<int>(s)] = true;

  std::set<std::pair<int, int>> in_region;
  for (Coord c : r.cells) in_region.insert({c.x, c.y});
  for (Coord c : r.cells) {
    if (r.board.at(c) != Cell::Empty) continue;
    for (const Coord& d : kNeighborDeltas) {
      Coord n{c.x + d.x, c.y + d.y};
      if (in_region.count({n.x, n.y})) continue;
      if (!r.board.in_grid(n)) {
        // beyond the grid: fine exactly when walled by a present edge
        bool ok = true;
        if (n.y < 1) ok &= side_ok[static_cast<int>(EdgeSide::Top)];
        if (n.y > r.board.rows()) ok &= side_ok[static_cast<int>(EdgeSide::Bottom)];
        if (n.x < 1) ok &= side_ok[static_cast<int>(EdgeSide::Left)];
        if (n.x > r.board.cols()) ok &= side_ok[static_cast<int>(EdgeSide::Right)];
        if (ok) continue;
        return false;
      }
      Cell v = r.board.at(n);
      if (v == Cell::Black || v == Cell::White) continue;
      return false;
    }
  }
  return true;
}

}  // namespace hexcgt
