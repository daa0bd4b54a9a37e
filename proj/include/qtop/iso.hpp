#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qtop/finite.hpp"
#include "qtop/perm.hpp"

namespace qtop {

enum class IsoStatus { Isomorphic, NotIsomorphic, BoundExceeded };

struct IsoResult {
  IsoStatus status;
  std::optional<std::vector<int>> map;  // witness bijection when Isomorphic

  bool isomorphic() const { return status == IsoStatus::Isomorphic; }
};

namespace detail {

// Per-element invariant used for candidate pruning: (orbit size, diagonal
// idempotency flag). Orbit sizes are skipped when axiom II fails.
inline std::vector<std::pair<int, int>> iso_profiles(const FiniteQuandle& q) {
  const int n = q.size();
  std::vector<std::pair<int, int>> prof(n, {0, 0});
  bool columns_ok = true;
  for (int b = 0; b < n && columns_ok; ++b) columns_ok = q.column_is_permutation(b);
  if (columns_ok) {
    auto summary = inner_group(q);
    for (const auto& orbit : summary.orbits)
      for (int x : orbit) prof[x].first = static_cast<int>(orbit.size());
  }
  for (int a = 0; a < n; ++a) prof[a].second = q.op(a, a) == a ? 1 : 0;
  return prof;
}

inline bool validate_bijection(const FiniteQuandle& q1, const FiniteQuandle& q2,
                               const std::vector<int>& phi) {
  const int n = q1.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (phi[q1.op(a, b)] != q2.op(phi[a], phi[b])) return false;
  return true;
}

}  // namespace detail

/// Backtracking isomorphism search with orbit-size and idempotency-profile
/// pruning. Sizes above `size_bound` are refused explicitly rather than
/// searched (worst case is factorial).
inline IsoResult are_isomorphic(const FiniteQuandle& q1, const FiniteQuandle& q2,
                                int size_bound = 16) {
  if (q1.size() != q2.size()) return {IsoStatus::NotIsomorphic, std::nullopt};
  const int n = q1.size();
  if (n > size_bound) return {IsoStatus::BoundExceeded, std::nullopt};

  auto prof1 = detail::iso_profiles(q1);
  auto prof2 = detail::iso_profiles(q2);
  {
    auto s1 = prof1, s2 = prof2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return {IsoStatus::NotIsomorphic, std::nullopt};
  }

  std::vector<int> phi(n, -1);
  std::vector<char> used(n, 0);

  // After assigning phi[k], every constraint whose three participants are all
  // assigned must hold.
  auto consistent = [&](int k) {
    for (int a = 0; a <= k; ++a) {
      int t1 = q1.op(a, k), t2 = q1.op(k, a);
      if (t1 <= k && phi[q1.op(a, k)] != q2.op(phi[a], phi[k])) return false;
      if (t2 <= k && phi[t2] != q2.op(phi[k], phi[a])) return false;
    }
    // constraints (a, b) with a,b < k whose product is k
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (q1.op(a, b) == k && phi[k] != q2.op(phi[a], phi[b])) return false;
    return true;
  };

  // Elements are assigned in order 0..n-1, so "assigned" == "index <= k".
  std::vector<int> choice(n, -1);
  int k = 0;
  while (k >= 0) {
    if (k == n) {
      if (detail::validate_bijection(q1, q2, phi)) return {IsoStatus::Isomorphic, phi};
      --k;  // re-validate failed (should not happen); backtrack
      used[phi[k]] = 0;
      phi[k] = -1;
      continue;
    }
    bool advanced = false;
    for (int cand = choice[k] + 1; cand < n; ++cand) {
      if (used[cand] || prof1[k] != prof2[cand]) continue;
      phi[k] = cand;
      if (consistent(k)) {
        used[cand] = 1;
        choice[k] = cand;
        ++k;
        advanced = true;
        break;
      }
      phi[k] = -1;
    }
    if (!advanced) {
      choice[k] = -1;
      --k;
      if (k >= 0) {
        used[phi[k]] = 0;
        phi[k] = -1;
      }
    }
  }
  return {IsoStatus::NotIsomorphic, std::nullopt};
}

}  // namespace qtop
