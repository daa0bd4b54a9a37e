// Counts the tuples fixed by the trefoil braid word acting over dihedral
// quandles: 9 over R_3 (every pair), 5 over R_5 (the diagonal only).

#include <iostream>

#include "qtop/braid.hpp"

int main() {
  using namespace qtop;

  BraidWord trefoil(2, {1, 1, 1});
  for (int n : {3, 5, 7}) {
    auto fixed = fixed_points(make_dihedral(n), trefoil);
    std::cout << "trefoil over R_" << n << ": |J| = " << fixed.count << "\n";
  }

  BraidWord unknot(2, {1});
  std::cout << "unknot over R_3:  |J| = " << fixed_points(make_dihedral(3), unknot).count
            << " (diagonal tuples)\n";
  return 0;
}
