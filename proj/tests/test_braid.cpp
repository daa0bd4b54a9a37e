#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "qtop/braid.hpp"

using namespace qtop;

namespace {

// Independent oracle for the dihedral action: sigma_1 maps (x, y) to
// (y, 2y - x mod n).
std::pair<int, int> dihedral_sigma(int n, std::pair<int, int> p) {
  return {p.second, ((2 * p.second - p.first) % n + n) % n};
}

std::vector<std::vector<int>> all_tuples(int carrier, int strands) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(strands, 0);
  for (;;) {
    out.push_back(t);
    int k = strands - 1;
    while (k >= 0 && ++t[k] == carrier) t[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("braid word validation") {
  REQUIRE_THROWS_AS(BraidWord(1, {1}), std::invalid_argument);
  REQUIRE_THROWS_AS(BraidWord(2, {0}), std::invalid_argument);
  REQUIRE_THROWS_AS(BraidWord(2, {2}), std::invalid_argument);
  REQUIRE_THROWS_AS(BraidWord(3, {-3}), std::invalid_argument);
  REQUIRE_NOTHROW(BraidWord(3, {1, -2, 1}));
  REQUIRE(BraidWord(3, {1, -2}).inverse().letters == std::vector<int>{2, -1});
}

TEST_CASE("generator action over R_3") {
  auto r3 = make_dihedral(3);
  BraidWord sigma(2, {1});
  REQUIRE(act(r3, sigma, {0, 1}) == std::vector<int>{1, 2});  // f(0,1) = 2

  // sigma followed by its inverse is the identity on every pair
  BraidWord cancel(2, {1, -1});
  for (const auto& t : all_tuples(3, 2)) REQUIRE(act(r3, cancel, t) == t);

  // diagonal pairs are fixed by idempotency
  for (int a = 0; a < 3; ++a) {
    REQUIRE(act(r3, sigma, {a, a}) == std::vector<int>{a, a});
  }

  REQUIRE_THROWS_AS(act(r3, sigma, {0, 5}), std::invalid_argument);
  REQUIRE_THROWS_AS(act(r3, sigma, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("trefoil and unknot fixed points over dihedral quandles") {
  BraidWord trefoil(2, {1, 1, 1});
  auto r3 = make_dihedral(3);

  auto fixed3 = fixed_points(r3, trefoil);
  REQUIRE(fixed3.count == 9);
  REQUIRE(fixed3.tuples_complete);
  REQUIRE(fixed3.tuples.size() == 9);

  // cross-check by hand: sigma^3 is the identity mod 3 for all nine pairs
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      auto p = std::make_pair(x, y);
      p = dihedral_sigma(3, dihedral_sigma(3, dihedral_sigma(3, p)));
      REQUIRE(p == std::make_pair(x, y));
    }

  auto fixed5 = fixed_points(make_dihedral(5), trefoil);
  REQUIRE(fixed5.count == 5);
  for (const auto& t : fixed5.tuples) REQUIRE(t[0] == t[1]);  // diagonal only

  BraidWord unknot(2, {1});
  auto fixed_unknot = fixed_points(r3, unknot);
  REQUIRE(fixed_unknot.count == 3);
  for (const auto& t : fixed_unknot.tuples) REQUIRE(t[0] == t[1]);
}

TEST_CASE("fixed tuples re-verify and enumeration is ordered") {
  auto q = make_alexander(5, 2);
  BraidWord w(3, {1, 2, -1});
  auto fixed = fixed_points(q, w);
  REQUIRE(std::is_sorted(fixed.tuples.begin(), fixed.tuples.end()));
  for (const auto& t : fixed.tuples) REQUIRE(act(q, w, t) == t);
  REQUIRE(fixed.count >= q.size());  // diagonal tuples are always fixed
}

TEST_CASE("enumeration bound is an explicit refusal") {
  auto q = make_dihedral(10);
  BraidWord w(8, {1});
  REQUIRE_THROWS_WITH(fixed_points(q, w), Catch::Matchers::ContainsSubstring("exceeds bound"));
}

TEST_CASE("word action is a bijection") {
  std::mt19937 rng(11);
  std::vector<FiniteQuandle> pool = {make_trivial(3), make_dihedral(4), make_dihedral(5),
                                     make_alexander(5, 3)};
  for (const auto& q : pool) {
    for (int strands = 2; strands <= 3; ++strands) {
      std::uniform_int_distribution<int> letter(1, strands - 1);
      std::uniform_int_distribution<int> sign(0, 1);
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> letters;
        for (int i = 0; i < 4; ++i) letters.push_back(letter(rng) * (sign(rng) ? 1 : -1));
        BraidWord w(strands, letters);
        BraidWord round = w.concat(w.inverse());
        for (const auto& t : all_tuples(q.size(), strands)) REQUIRE(act(q, round, t) == t);
        // diagonal tuples are fixed by any word over a quandle
        for (int a = 0; a < q.size(); ++a) {
          std::vector<int> diag(strands, a);
          REQUIRE(act(q, w, diag) == diag);
        }
      }
    }
  }
}

TEST_CASE("Markov move invariance of the fixed-point count") {
  std::mt19937 rng(23);
  std::vector<FiniteQuandle> pool = {make_trivial(2), make_dihedral(3), make_dihedral(5),
                                     make_alexander(5, 2), make_core(GroupTable::cyclic(4))};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
  for (int trial = 0; trial < 25; ++trial) {
    const auto& q = pool[pick(rng)];
    std::uniform_int_distribution<int> strands_d(2, 4);
    int strands = strands_d(rng);
    std::uniform_int_distribution<int> len_d(0, 6);
    std::uniform_int_distribution<int> letter(1, strands - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    auto rand_word = [&](int len) {
      std::vector<int> letters;
      for (int i = 0; i < len; ++i) letters.push_back(letter(rng) * (sign(rng) ? 1 : -1));
      return BraidWord(strands, letters);
    };
    BraidWord w = rand_word(len_d(rng));
    long long base = fixed_points(q, w).count;

    // conjugation
    BraidWord alpha = rand_word(3);
    BraidWord conjugated = alpha.concat(w).concat(alpha.inverse());
    REQUIRE(fixed_points(q, conjugated).count == base);

    // stabilization: append sigma_strands on strands+1 strands
    std::vector<int> stab_letters = w.letters;
    stab_letters.push_back(strands);
    BraidWord stabilized(strands + 1, stab_letters);
    REQUIRE(fixed_points(q, stabilized).count == base);
  }
}

TEST_CASE("continuum action supports iterated maps and inverses") {
  ContinuumSpec unit{UnitInterval{}};
  BraidWord w(2, {1, 1, 1});
  std::vector<Point> start = {{0.25}, {0.8}};
  auto moved = act(unit, w, start);
  REQUIRE(moved.size() == 2);

  auto back = act(unit, w.inverse(), moved);
  REQUIRE_THAT(back[0][0], Catch::Matchers::WithinAbs(0.25, 1e-10));
  REQUIRE_THAT(back[1][0], Catch::Matchers::WithinAbs(0.8, 1e-10));

  REQUIRE_THROWS_AS(act(unit, w, {{0.25}, {1.5}}), std::domain_error);
}
