#pragma once

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "qtop/finite.hpp"

namespace qtop {

using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

/// (p * q)(x) = p(q(x))
inline Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
  return r;
}

namespace detail {
struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};
}  // namespace detail

/// The inner group Inn(X) = <R_x : x in X> of a finite rack.
struct PermGroupSummary {
  std::vector<Perm> generators;          // the n column permutations
  long long order = 0;                   // size of the generated group
  std::vector<std::vector<int>> orbits;  // sorted partition of {0,...,n-1}
};

/// Breadth-first product closure over the column permutations. Throws if a
/// column is not bijective or the closure exceeds `closure_cap` elements.
inline PermGroupSummary inner_group(const FiniteQuandle& q, std::size_t closure_cap = 1000000) {
  const int n = q.size();
  PermGroupSummary s;
  s.generators.reserve(n);
  for (int b = 0; b < n; ++b) {
    if (!q.column_is_permutation(b)) {
      throw std::invalid_argument("inner_group: column " + std::to_string(b) +
                                  " is not a bijection (rack axiom II fails)");
    }
    s.generators.push_back(q.column(b));
  }

  std::unordered_set<Perm, detail::PermHash> seen;
  std::deque<Perm> frontier;
  seen.insert(perm_identity(n));
  frontier.push_back(perm_identity(n));
  while (!frontier.empty()) {
    Perm p = std::move(frontier.front());
    frontier.pop_front();
    for (const Perm& g : s.generators) {
      Perm r = perm_compose(g, p);
      if (seen.insert(r).second) {
        if (seen.size() > closure_cap) {
          throw std::runtime_error("inner_group: closure exceeded cap of " +
                                   std::to_string(closure_cap));
        }
        frontier.push_back(std::move(r));
      }
    }
  }
  s.order = static_cast<long long>(seen.size());

  // Orbits of the generated group = connectivity under the generators.
  std::vector<int> root(n);
  for (int i = 0; i < n; ++i) root[i] = i;
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const Perm& g : s.generators)
    for (int i = 0; i < n; ++i) {
      int a = find(i), b = find(g[i]);
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<int>> orbits(n);
  for (int i = 0; i < n; ++i) orbits[find(i)].push_back(i);
  for (auto& o : orbits)
    if (!o.empty()) s.orbits.push_back(std::move(o));
  return s;
}

/// Connected (indecomposable) iff Inn(X) acts transitively.
inline bool is_connected(const FiniteQuandle& q) { return inner_group(q).orbits.size() == 1; }

}  // namespace qtop
