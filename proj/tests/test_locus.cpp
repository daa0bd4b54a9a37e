#include <catch2/catch_amalgamated.hpp>

#include "qtop/locus.hpp"

using namespace qtop;

namespace {
// step of an m-point grid on [0,1]
double grid_step(int m) { return 1.0 / (m - 1); }
}  // namespace

TEST_CASE("trivial locus of the 2-piece family") {
  ContinuumSpec f2{IntervalFamily(2, 0.0, 1.0)};
  const int m = 2001;
  auto rep = trivial_locus(f2, m);
  REQUIRE(rep.intervals.size() == 2);
  const double step = grid_step(m);
  CHECK_THAT(rep.intervals[0].lo, Catch::Matchers::WithinAbs(0.25, step + 1e-12));
  CHECK_THAT(rep.intervals[0].hi, Catch::Matchers::WithinAbs(0.50, step + 1e-12));
  CHECK_THAT(rep.intervals[1].lo, Catch::Matchers::WithinAbs(0.75, step + 1e-12));
  CHECK_THAT(rep.intervals[1].hi, Catch::Matchers::WithinAbs(1.00, step + 1e-12));
  // the left endpoint is trivial but isolated from the intervals
  REQUIRE(rep.isolated == std::vector<double>{0.0});
  REQUIRE_FALSE(rep.covers_domain);
}

TEST_CASE("trivial locus of the unit interval quandle") {
  auto rep = trivial_locus(ContinuumSpec{UnitInterval{}}, 1001);
  REQUIRE(rep.intervals.size() == 1);
  CHECK_THAT(rep.intervals[0].lo, Catch::Matchers::WithinAbs(0.5, grid_step(1001) + 1e-12));
  CHECK(rep.intervals[0].hi == 1.0);
  REQUIRE(rep.isolated == std::vector<double>{0.0});
}

TEST_CASE("affine line has an empty trivial locus") {
  auto rep = trivial_locus(ContinuumSpec{AffineLine(2.0)}, 501);
  REQUIRE(rep.intervals.empty());
  REQUIRE(rep.isolated.empty());
  REQUIRE_FALSE(rep.covers_domain);
}

TEST_CASE("family locus component count equals the family index") {
  for (int n = 1; n <= 8; ++n) {
    auto rep = trivial_locus(ContinuumSpec{IntervalFamily(n, 0.0, 1.0)}, 801);
    INFO("n = " << n);
    REQUIRE(static_cast<int>(rep.intervals.size()) == n);
    REQUIRE(rep.isolated == std::vector<double>{0.0});
  }
  // the count is carrier-independent
  auto rep = trivial_locus(ContinuumSpec{IntervalFamily(4, -3.0, 5.0)}, 801);
  REQUIRE(rep.intervals.size() == 4);
}

TEST_CASE("certificate separates different family indices") {
  ContinuumSpec f2{IntervalFamily(2, 0.0, 1.0)};
  ContinuumSpec f5{IntervalFamily(5, 0.0, 1.0)};
  auto cert = nonisomorphism_certificate(f2, f5, 1001);
  REQUIRE(cert.verdict == CertVerdict::Nonisomorphic);
  REQUIRE(cert.components1 == 2);
  REQUIRE(cert.components2 == 5);

  ContinuumSpec f3{IntervalFamily(3, 0.0, 1.0)};
  auto same = nonisomorphism_certificate(f3, f3, 1001);
  REQUIRE(same.verdict == CertVerdict::Inconclusive);
}

TEST_CASE("certificate separates the 1-piece family from the trivial quandle") {
  ContinuumSpec f1{IntervalFamily(1, 0.0, 1.0)};
  // constant exponent 1 makes the power map the identity: the trivial quandle
  ContinuumSpec trivial{ClosedInterval(0.0, 1.0, [](double) { return 1.0; })};

  auto trivial_rep = trivial_locus(trivial, 1001);
  REQUIRE(trivial_rep.covers_domain);
  REQUIRE(trivial_rep.intervals.size() == 1);  // one component: the whole interval

  auto cert = nonisomorphism_certificate(f1, trivial, 1001);
  REQUIRE(cert.verdict == CertVerdict::Nonisomorphic);  // whole-space locus differs
}

TEST_CASE("certificate requires a shared carrier") {
  ContinuumSpec f2{IntervalFamily(2, 0.0, 1.0)};
  ContinuumSpec g2{IntervalFamily(2, 0.0, 2.0)};
  REQUIRE_THROWS_AS(nonisomorphism_certificate(f2, g2, 101), std::invalid_argument);
}

TEST_CASE("ball family nontrivial component counts") {
  for (int n : {2, 3, 4}) {
    auto rep = trivial_locus(ContinuumSpec{BallFamily(n, 2)}, 21);
    INFO("n = " << n);
    REQUIRE(rep.nontrivial_components == n - 1);
  }
  auto dim1 = trivial_locus(ContinuumSpec{BallFamily(3, 1)}, 1001);
  REQUIRE(static_cast<int>(dim1.intervals.size()) >= 2);  // 1-d path reports intervals

  auto dim3 = trivial_locus(ContinuumSpec{BallFamily(2, 3)}, 13);
  REQUIRE(dim3.nontrivial_components == 1);

  // n = 1 installs no balls: the quandle is trivial everywhere
  auto none = trivial_locus(ContinuumSpec{BallFamily(1, 2)}, 13);
  REQUIRE(none.nontrivial_components == 0);
  REQUIRE(none.covers_domain);
}

TEST_CASE("ball family certificates") {
  auto r2 = trivial_locus(ContinuumSpec{BallFamily(2, 2)}, 21);
  auto r4 = trivial_locus(ContinuumSpec{BallFamily(4, 2)}, 21);
  auto cert = nonisomorphism_certificate(r2, r4);
  REQUIRE(cert.verdict == CertVerdict::Nonisomorphic);

  auto again = trivial_locus(ContinuumSpec{BallFamily(2, 2)}, 21);
  REQUIRE(nonisomorphism_certificate(r2, again).verdict == CertVerdict::Inconclusive);

  REQUIRE_THROWS_AS(nonisomorphism_certificate(r2, trivial_locus(ContinuumSpec{UnitInterval{}},
                                                                 101)),
                    std::invalid_argument);
}

TEST_CASE("locus rejects higher-dimensional non-family specs") {
  REQUIRE_THROWS_AS(trivial_locus(ContinuumSpec{Ball(2, BallVariant::BoundaryDamped)}, 11),
                    std::invalid_argument);
}
