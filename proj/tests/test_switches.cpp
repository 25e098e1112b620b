#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "data_path.hpp"
#include "hexcgt/decompose.hpp"
#include "hexcgt/switches.hpp"

using namespace hexcgt;

namespace {

const GameNode* G(Universe& u, int n) {
  return switch_value(u, SwitchFamily::Superswitch, n);
}
const GameNode* H(Universe& u, int n) {
  return switch_value(u, SwitchFamily::Simpleswitch, n);
}
const GameNode* T(Universe& u, int n) {
  return switch_value(u, SwitchFamily::IdealTripleswitch, n);
}

}  // namespace

TEST_CASE("switch value base cases") {
  Universe u;
  CHECK(print_value(u, G(u, 0)) == "a");
  CHECK(print_value(u, G(u, 1)) == "{a,b|a}");
  CHECK(print_value(u, T(u, 0)) == "bot");
  CHECK(print_value(u, T(u, 1)) == "{a,b,c|bot}");
  CHECK(print_value(u, H(u, 1)) == "{a,{top|b}|a}");
  CHECK(print_value(u, switch_value(u, SwitchFamily::Sign, 0)) == "{top|bot}");
  CHECK(print_value(u, switch_value(u, SwitchFamily::Sign, 3)) == "top");
  CHECK(print_value(u, switch_value(u, SwitchFamily::Sign, -2)) == "bot");
  CHECK(print_value(u, switch_value(u, SwitchFamily::DualSuperswitch, 1)) ==
        "{a|a,b}");
  CHECK(print_value(u, switch_value(u, SwitchFamily::DualSimpleswitch, 1)) ==
        "{a|a,{b|bot}}");
  CHECK_THROWS_AS(switch_value(u, SwitchFamily::Superswitch, -1), GameError);
}

TEST_CASE("strict increase of superswitches") {
  Universe u;
  for (int n = 0; n <= 8; ++n) {
    CHECK(u.leq(G(u, n), G(u, n + 1)));
    CHECK_FALSE(u.equivalent(G(u, n), G(u, n + 1)));
  }
}

TEST_CASE("simpleswitches sandwich between superswitches") {
  Universe u;
  for (int n = 0; n <= 6; ++n) {
    CHECK(u.leq(G(u, n), H(u, n)));
    CHECK(u.leq(H(u, n), G(u, n + 1)));
  }
}

TEST_CASE("simpleswitch concatenation law") {
  Universe u;
  for (int n = 1; n <= 5; ++n)
    CHECK(u.equivalent(concat(u, H(u, n), H(u, 1)), H(u, n + 1)));
}

TEST_CASE("superswitch cofinality for sampled passable games") {
  Universe u;
  const Poset& fork = Poset::fork();
  const GameNode* top = u.atom(fork, "top");
  // superswitches over the fork poset (same recursion, no c atom involved)
  auto g_fork = [&](int n) {
    const GameNode* g = u.atom(fork, "a");
    for (int i = 0; i < n; ++i)
      g = u.form(fork, {u.atom(fork, "a"), u.atom(fork, "b")}, {g});
    return g;
  };
  std::mt19937 rng(31);
  int count = 0;
  while (count < 60) {
    const GameNode* h = hexcgt::testing::random_monotone(u, fork, rng, 4);
    if (u.tri(top, h)) continue;
    ++count;
    CHECK(u.leq(h, g_fork(depth(h) + 2)));
  }
}

TEST_CASE("tripleswitch cofinality for sampled passable games over p3") {
  Universe u;
  const Poset& p = Poset::p3();
  const GameNode* top = u.atom(p, "top");
  std::mt19937 rng(37);
  int count = 0;
  while (count < 40) {
    const GameNode* h = hexcgt::testing::random_monotone(u, p, rng, 3);
    if (u.tri(top, h)) continue;
    ++count;
    CHECK(u.leq(h, T(u, depth(h) + 2)));
  }
}

TEST_CASE("hex tripleswitch bounds the ideal tripleswitch") {
  Universe u;
  for (int n = 0; n <= 3; ++n)
    CHECK(u.leq(T(u, n), hex_tripleswitch_value(u, n)));
}

TEST_CASE("switch positions reproduce the chained figures") {
  Position mine = switch_position(SwitchFamily::Superswitch, 3);
  Position fig = parse_position(slurp(data_file("superswitch-chain-3.pos")));
  CHECK(mine.board == fig.board);
  CHECK(print_position(mine) == print_position(fig));

  Position mh = switch_position(SwitchFamily::Simpleswitch, 5);
  Position fh = parse_position(slurp(data_file("simpleswitch-chain-5.pos")));
  CHECK(mh.board == fh.board);
  CHECK(print_position(mh) == print_position(fh));
  CHECK(mh.empty_count() == 30);
}

TEST_CASE("switch positions evaluate to their values") {
  Universe u;
  for (auto f : {SwitchFamily::Superswitch, SwitchFamily::DualSuperswitch,
                 SwitchFamily::Simpleswitch, SwitchFamily::DualSimpleswitch}) {
    Region r = region_of_position(switch_position(f, 1));
    const GameNode* want = canonical(u, switch_value(u, f, 1));
    CHECK(region_canonical_value_decomposed(u, r) == want);
  }
  // two levels: 24 empty cells for the superswitch, handled by splitting
  // the chain at its stone walls
  Region r2 = region_of_position(switch_position(SwitchFamily::Superswitch, 2));
  CHECK(r2.empty_count() == 24);
  CHECK(u.equivalent(region_canonical_value_decomposed(u, r2), G(u, 2)));
  Region s2 = region_of_position(switch_position(SwitchFamily::Simpleswitch, 2));
  CHECK(u.equivalent(region_canonical_value_decomposed(u, s2), H(u, 2)));
}

TEST_CASE("switch position argument errors") {
  CHECK_THROWS_AS(switch_position(SwitchFamily::Superswitch, 0), GameError);
  CHECK_THROWS_AS(switch_position(SwitchFamily::IdealTripleswitch, 1), GameError);
  CHECK_THROWS_AS(switch_position(SwitchFamily::Sign, 1), GameError);
}

TEST_CASE("tile data is checksummed") {
  CHECK(detail::fnv1a(detail::kSuperswitchTile) == detail::kSuperswitchTile_checksum);
  CHECK(detail::fnv1a(detail::kSimpleswitchTile) == detail::kSimpleswitchTile_checksum);
  CHECK(detail::fnv1a(detail::kDualSuperswitchTile) ==
        detail::kDualSuperswitchTile_checksum);
  CHECK(detail::fnv1a(detail::kPivotContextTile) == detail::kPivotContextTile_checksum);
}

TEST_CASE("transcribed dual tile evaluates to the dual value") {
  Universe u;
  const detail::Tile& t = detail::dual_superswitch_tile();
  Region r = region_of_position(t.position);
  CHECK(region_canonical_value_decomposed(u, r) ==
        canonical(u, parse_value(u, t.expected_value)));
}
