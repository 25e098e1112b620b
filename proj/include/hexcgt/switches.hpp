#pragma once

#include "hexcgt/detail/tiles_data.hpp"
#include "hexcgt/form_io.hpp"
#include "hexcgt/region_game.hpp"
#include "hexcgt/sums.hpp"

namespace hexcgt {

enum class SwitchFamily : uint8_t {
  Superswitch,
  DualSuperswitch,
  Simpleswitch,
  DualSimpleswitch,
  IdealTripleswitch,
  Sign,
};

inline const char* family_name(SwitchFamily f) {
  switch (f) {
    case SwitchFamily::Superswitch: return "superswitch";
    case SwitchFamily::DualSuperswitch: return "dual-superswitch";
    case SwitchFamily::Simpleswitch: return "simpleswitch";
    case SwitchFamily::DualSimpleswitch: return "dual-simpleswitch";
    case SwitchFamily::IdealTripleswitch: return "tripleswitch";
    case SwitchFamily::Sign: return "sign";
  }
  return "?";
}

inline SwitchFamily family_from_name(const std::string& s) {
  if (s == "superswitch") return SwitchFamily::Superswitch;
  if (s == "dual-superswitch") return SwitchFamily::DualSuperswitch;
  if (s == "simpleswitch") return SwitchFamily::Simpleswitch;
  if (s == "dual-simpleswitch") return SwitchFamily::DualSimpleswitch;
  if (s == "tripleswitch") return SwitchFamily::IdealTripleswitch;
  if (s == "sign") return SwitchFamily::Sign;
  throw GameError("unknown switch family '" + s + "'");
}

// G_0 = a, G_{n+1} = {a,b|G_n}; H_1 = {a,{top|b}|a}, H_{n+1} = {a,b|H_n};
// T_0 = bot, T_{n+1} = {a,b,c|T_n}; sign games over bool; duals by transpose.
inline const GameNode* switch_value(Universe& u, SwitchFamily f, int index) {
  const Poset& p3 = Poset::p3();
  const GameNode* a = u.atom(p3, "a");
  const GameNode* b = u.atom(p3, "b");
  switch (f) {
    case SwitchFamily::Superswitch: {
      if (index < 0) throw GameError("superswitch index must be >= 0");
      const GameNode* g = a;
      for (int i = 0; i < index; ++i) g = u.form(p3, {a, b}, {g});
      return g;
    }
    case SwitchFamily::DualSuperswitch:
      // exchanging the players swaps option sets and the extreme atoms;
      // on superswitch values this is a plain transpose
      return dual_value(u, switch_value(u, SwitchFamily::Superswitch, index));
    case SwitchFamily::Simpleswitch: {
      if (index < 0) throw GameError("simpleswitch index must be >= 0");
      if (index == 0) return a;
      const GameNode* g = u.form(
          p3, {a, u.form(p3, {u.atom(p3, "top")}, {b})}, {a});
      for (int i = 1; i < index; ++i) g = u.form(p3, {a, b}, {g});
      return g;
    }
    case SwitchFamily::DualSimpleswitch:
      return dual_value(u, switch_value(u, SwitchFamily::Simpleswitch, index));
    case SwitchFamily::IdealTripleswitch: {
      if (index < 0) throw GameError("tripleswitch index must be >= 0");
      const GameNode* g = u.atom(p3, "bot");
      for (int i = 0; i < index; ++i)
        g = u.form(p3, {a, b, u.atom(p3, "c")}, {g});
      return g;
    }
    case SwitchFamily::Sign: {
      const Poset& bl = Poset::boolean();
      if (index > 0) return u.atom(bl, "top");
      if (index < 0) return u.atom(bl, "bot");
      return u.form(bl, {u.atom(bl, "top")}, {u.atom(bl, "bot")});
    }
  }
  throw GameError("bad switch family");
}

// T'_n: the pinwheel of three superswitches of index n+2.
inline const GameNode* hex_tripleswitch_value(Universe& u, int n) {
  if (n < 0) throw GameError("hex tripleswitch index must be >= 0");
  const GameNode* g = switch_value(u, SwitchFamily::Superswitch, n + 2);
  return pinwheel3(u, g, g, g);
}

namespace detail {

inline uint64_t fnv1a(const char* s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (; *s; ++s) {
    h ^= static_cast<unsigned char>(*s);
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct Tile {
  Position position;
  const char* expected_value;
};

// Loads an embedded tile, verifying the transcription checksum and, once per
// process, that the fragment really evaluates to its advertised value.
inline const Tile& load_tile(const char* text, uint64_t checksum,
                             const char* value) {
  static std::map<const char*, Tile> cache;
  static std::map<const char*, bool> checked;
  auto it = cache.find(text);
  if (it == cache.end()) {
    if (fnv1a(text) != checksum)
      throw GameError("embedded tile data failed its checksum");
    Tile t{parse_position(text), value};
    it = cache.emplace(text, std::move(t)).first;
  }
  if (!checked[text]) {
    checked[text] = true;  // set first; the check itself may recurse via sums
    Universe u;
    Region r = region_of_position(it->second.position);
    const GameNode* want = parse_value(u, value, Poset::p3());
    if (!region_equiv_value(u, r, want))
      throw GameError("embedded tile does not evaluate to its recorded value");
  }
  return it->second;
}

inline const Tile& superswitch_tile() {
  return load_tile(kSuperswitchTile, kSuperswitchTile_checksum,
                   kSuperswitchTile_value);
}
inline const Tile& dual_superswitch_tile() {
  return load_tile(kDualSuperswitchTile, kDualSuperswitchTile_checksum,
                   kDualSuperswitchTile_value);
}
inline const Tile& simpleswitch_tile() {
  return load_tile(kSimpleswitchTile, kSimpleswitchTile_checksum,
                   kSimpleswitchTile_value);
}
inline const Tile& pivot_context_tile() {
  return load_tile(kPivotContextTile, kPivotContextTile_checksum,
                   kPivotContextTile_value);
}

// Overlays `tile`'s board onto `board` at a column offset; shared cells must
// agree, which is how the chained tiles fuse their walls and junction stones.
inline void blit(Board& board, const Board& tile, int dx) {
  for (int y = 1; y <= tile.rows(); ++y)
    for (int x = 1; x <= tile.cols(); ++x) {
      Cell v = tile.at({x, y});
      if (v == Cell::Out) continue;
      Coord dst{x + dx, y};
      Cell prev = board.at(dst);
      if (prev == Cell::Out) {
        board.set(dst, v);
      } else if (prev != v) {
        throw GameError("tile overlap mismatch while chaining switches");
      }
    }
}

}  // namespace detail

// Hex realization of a switch by horizontally chaining transcribed base
// tiles; level n uses n tiles. Dual families are the color swap of the
// primal chain with the dual tile's terminal cells.
inline Position switch_position(SwitchFamily f, int index) {
  using detail::blit;
  if (index < 1)
    throw GameError("switch positions exist for index >= 1 (index 0 is atomic)");
  const int n = index;
  switch (f) {
    case SwitchFamily::Superswitch:
    case SwitchFamily::DualSuperswitch: {
      const Board& tile = detail::superswitch_tile().position.board;
      // tile body sits above the shared bottom terminal row
      Position out;
      out.board = Board(10 * n + 3, tile.rows(), Cell::Out);
      for (int k = 0; k < n; ++k) {
        Board body = tile;
        // strip the tile's own bottom row; the chain lays one long row
        for (int x = 1; x <= tile.cols(); ++x)
          if (tile.at({x, 1}) != Cell::Out) body.set({x, 1}, Cell::Out);
        blit(out.board, body, 10 * k);
      }
      for (int x = 4; x <= 10 * n + 3; ++x) out.board.set({x, 1}, Cell::Black);
      out.kind = RegionKind::Generic3;
      out.terminals.push_back(TerminalSpec::of_cells({{10 * n + 3, 1}}));
      out.terminals.push_back(TerminalSpec::of_cells({{10 * n, 6}}));
      out.terminals.push_back(TerminalSpec::of_cells({{1, 6}}));
      if (f == SwitchFamily::DualSuperswitch) {
        out = transform_color_swap(out);
        out.terminals.clear();
        out.terminals.push_back(TerminalSpec::of_cells({{1, 7}}));
        out.terminals.push_back(TerminalSpec::of_cells({{3, 2}}));
        out.terminals.push_back(TerminalSpec::of_cells({{10 * n, 5}}));
      }
      return out;
    }
    case SwitchFamily::Simpleswitch:
    case SwitchFamily::DualSimpleswitch: {
      const Board& tile = detail::simpleswitch_tile().position.board;
      Position out;
      out.board = Board(tile.cols() + 3 * (n - 1), tile.rows(), Cell::Out);
      for (int k = 0; k < n; ++k) blit(out.board, tile, 3 * k);
      out.kind = RegionKind::Generic3;
      out.terminals.push_back(
          TerminalSpec::of_cells({{tile.cols() + 3 * (n - 1), 1}}));
      out.terminals.push_back(TerminalSpec::of_cells({{4 + 3 * (n - 1), 5}}));
      out.terminals.push_back(TerminalSpec::of_cells({{1, 5}}));
      if (f == SwitchFamily::DualSimpleswitch) {
        out = transform_color_swap(out);
        out.terminals.clear();
        // the primal chain's three white boundary walls, now black
        out.terminals.push_back(TerminalSpec::of_cells({{1, 7}}));
        out.terminals.push_back(TerminalSpec::of_cells({{2, 4}}));
        out.terminals.push_back(TerminalSpec::of_cells({{5 + 3 * (n - 1), 4}}));
      }
      return out;
    }
    case SwitchFamily::IdealTripleswitch:
      throw GameError("ideal tripleswitches have no claimed Hex realization");
    case SwitchFamily::Sign:
      throw GameError("sign games are values, not boards");
  }
  throw GameError("bad switch family");
}

}  // namespace hexcgt
