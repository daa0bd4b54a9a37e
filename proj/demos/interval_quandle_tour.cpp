// Walks through the interval quandle on [0,1]: sample the operation, verify
// the axioms on a grid, and locate the trivial locus of a 3-piece family.

#include <iostream>

#include "qtop/locus.hpp"
#include "qtop/verify.hpp"

int main() {
  using namespace qtop;

  ContinuumSpec unit{UnitInterval{}};
  std::cout << "f(0.3, 0.4) = " << eval1(unit, 0.3, 0.4) << "  (identity branch)\n";
  std::cout << "f(0.25, 1.0) = " << eval1(unit, 0.25, 1.0) << "  (power branch)\n";

  auto idem = verify_idempotency(unit, 101);
  auto dist = verify_distributivity(unit, 101);
  std::cout << "idempotency max residual:     " << idem.max_residual << "\n";
  std::cout << "distributivity max residual:  " << dist.max_residual << "\n";

  ContinuumSpec family{IntervalFamily(3, 0.0, 1.0)};
  auto locus = trivial_locus(family, 901);
  std::cout << "trivial locus of the 3-piece family:\n";
  for (const auto& iv : locus.intervals) {
    std::cout << "  [" << iv.lo << ", " << iv.hi << "]\n";
  }
  for (double p : locus.isolated) std::cout << "  isolated point " << p << "\n";

  auto cert = nonisomorphism_certificate(family, ContinuumSpec{IntervalFamily(5, 0.0, 1.0)}, 901);
  std::cout << "family n=3 vs n=5: "
            << (cert.verdict == CertVerdict::Nonisomorphic ? "nonisomorphic" : "inconclusive")
            << " (" << cert.reason << ")\n";
  return 0;
}
