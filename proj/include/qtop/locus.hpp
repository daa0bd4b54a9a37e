#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtop/continuum.hpp"
#include "qtop/verify.hpp"

namespace qtop {

struct LocusInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Trivial locus { x : f(x,y) = x for all sampled y } of a 1-d spec, or the
/// component count of the complementary nontrivial locus for ball families.
/// Grid-width components (single trivial grid points flanked by nontrivial
/// ones) are reported as isolated points, separate from the positive-length
/// intervals.
struct LocusReport {
  std::string domain;
  int grid = 0;
  double tol = 0.0;
  std::vector<LocusInterval> intervals;  // positive-length components, sorted
  std::vector<double> isolated;          // isolated trivial points, sorted
  int nontrivial_components = -1;        // ball families only; -1 otherwise
  bool covers_domain = false;            // every sampled point is trivial
};

inline LocusReport trivial_locus(const ContinuumSpec& s, int m, double tol = 1e-9) {
  LocusReport rep;
  rep.domain = spec_label(s);
  rep.grid = m;
  rep.tol = tol;

  if (const auto* bf = s.get_if<BallFamily>(); bf && bf->dim > 1) {
    PointGrid g = sample_points(s, m);
    const std::size_t n = g.points.size();
    std::vector<char> nontrivial(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (point_distance(eval_raw(s, g.points[i], g.points[j]), g.points[i]) > tol) {
          nontrivial[i] = 1;
          break;
        }
      }
    }
    // orthogonal-adjacency components of the nontrivial lattice points
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
      if (nontrivial[i]) index[g.lattice[i]] = i;
    std::vector<char> seen(n, 0);
    int components = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!nontrivial[i] || seen[i]) continue;
      ++components;
      std::queue<std::size_t> q;
      q.push(i);
      seen[i] = 1;
      while (!q.empty()) {
        std::size_t cur = q.front();
        q.pop();
        std::vector<int> key = g.lattice[cur];
        for (std::size_t axis = 0; axis < key.size(); ++axis) {
          for (int step : {-1, 1}) {
            key[axis] += step;
            auto it = index.find(key);
            if (it != index.end() && !seen[it->second]) {
              seen[it->second] = 1;
              q.push(it->second);
            }
            key[axis] -= step;
          }
        }
      }
    }
    rep.nontrivial_components = components;
    rep.covers_domain = components == 0;
    return rep;
  }

  if (dim(s) != 1) {
    throw std::invalid_argument("trivial_locus: supported for 1-d specs and ball families only");
  }

  auto xs = sample_axis(s, m);
  std::vector<char> trivial(xs.size(), 0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double worst = 0.0;
    for (double y : xs) {
      worst = std::max(worst, std::abs(eval_raw1(s, xs[i], y) - xs[i]));
      if (worst > tol) break;
    }
    trivial[i] = worst <= tol;
  }

  std::size_t i = 0;
  bool all = true;
  while (i < xs.size()) {
    if (!trivial[i]) {
      all = false;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < xs.size() && trivial[j + 1]) ++j;
    if (j == i) {
      rep.isolated.push_back(xs[i]);
    } else {
      rep.intervals.push_back({xs[i], xs[j]});
    }
    i = j + 1;
  }
  rep.covers_domain = all;
  return rep;
}

// ---------------------------------------------------------------------------
// Nonisomorphism certificate
// ---------------------------------------------------------------------------

enum class CertVerdict { Nonisomorphic, Inconclusive };

/// A quandle isomorphism is in particular a homeomorphism carrying one
/// trivial locus onto the other, so it preserves both the number of
/// positive-length components and whether the locus is the whole space.
/// Isolated grid points are deliberately not counted.
struct Certificate {
  CertVerdict verdict = CertVerdict::Inconclusive;
  int components1 = 0;
  int components2 = 0;
  bool covers1 = false;
  bool covers2 = false;
  std::string reason;
};

inline Certificate nonisomorphism_certificate(const LocusReport& r1, const LocusReport& r2) {
  Certificate c;
  c.components1 = static_cast<int>(r1.intervals.size());
  c.components2 = static_cast<int>(r2.intervals.size());
  c.covers1 = r1.covers_domain;
  c.covers2 = r2.covers_domain;
  if (r1.nontrivial_components >= 0 || r2.nontrivial_components >= 0) {
    if (r1.nontrivial_components >= 0 && r2.nontrivial_components >= 0) {
      c.components1 = r1.nontrivial_components;
      c.components2 = r2.nontrivial_components;
      if (c.components1 != c.components2) {
        c.verdict = CertVerdict::Nonisomorphic;
        c.reason = "nontrivial-locus component counts differ: " + std::to_string(c.components1) +
                   " vs " + std::to_string(c.components2);
        return c;
      }
      c.reason = "equal nontrivial-locus component counts";
      return c;
    }
    throw std::invalid_argument("nonisomorphism_certificate: mixed 1-d and ball-family reports");
  }
  if (c.components1 != c.components2) {
    c.verdict = CertVerdict::Nonisomorphic;
    c.reason = "trivial-locus positive-length component counts differ: " +
               std::to_string(c.components1) + " vs " + std::to_string(c.components2);
  } else if (c.covers1 != c.covers2) {
    c.verdict = CertVerdict::Nonisomorphic;
    c.reason = std::string("trivial locus is the whole space for one quandle only (") +
               (c.covers1 ? "first" : "second") + ")";
  } else {
    c.reason = "equal component counts; locus comparison is inconclusive";
  }
  return c;
}

/// Convenience overload for two specs over the same 1-d carrier.
inline Certificate nonisomorphism_certificate(const ContinuumSpec& s1, const ContinuumSpec& s2,
                                              int m, double tol = 1e-9) {
  auto r1 = axis_range(s1), r2 = axis_range(s2);
  if (!r1 || !r2 || r1->first != r2->first || r1->second != r2->second) {
    throw std::invalid_argument(
        "nonisomorphism_certificate: specs must share the same bounded 1-d carrier");
  }
  return nonisomorphism_certificate(trivial_locus(s1, m, tol), trivial_locus(s2, m, tol));
}

}  // namespace qtop
