#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtop/continuum.hpp"
#include "qtop/parallel.hpp"

namespace qtop {

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// Default sampling box for specs on the whole real line.
inline constexpr double kLineBoxLo = -8.0;
inline constexpr double kLineBoxHi = 8.0;

/// Relative inset used to sample open domains away from their boundary.
inline constexpr double kOpenDomainInset = 1e-6;

/// Uniform 1-d sample including endpoints; open domains are shrunk by
/// kOpenDomainInset of the width, line specs fall back to [kLineBoxLo, kLineBoxHi].
inline std::vector<double> sample_axis(const ContinuumSpec& s, int m) {
  if (m < 2) throw std::invalid_argument("sample_axis: need at least 2 points");
  double lo, hi;
  if (auto r = axis_range(s)) {
    lo = r->first;
    hi = r->second;
    if (has_open_domain(s)) {
      double d = kOpenDomainInset * (hi - lo);
      lo += d;
      hi -= d;
    }
  } else {
    lo = kLineBoxLo;
    hi = kLineBoxHi;
  }
  std::vector<double> xs(m);
  for (int i = 0; i < m; ++i) xs[i] = lo + (hi - lo) * i / (m - 1);
  return xs;
}

/// Sample points of an n-d domain: per-axis box grid intersected with the
/// open ball interior. Grid index tuples are returned alongside the points so
/// locus component analysis can use lattice adjacency.
struct PointGrid {
  std::vector<Point> points;
  std::vector<std::vector<int>> lattice;  // grid index tuple per point
  int per_axis = 0;
};

namespace detail {

inline PointGrid ball_point_grid(const Point& center, double radius, int dim, int m) {
  if (m < 2) throw std::invalid_argument("ball_point_grid: need at least 2 points");
  const double r_in = radius * (1.0 - kOpenDomainInset);
  PointGrid g;
  g.per_axis = m;
  std::vector<int> idx(dim, 0);
  Point p(dim);
  for (;;) {
    double d = 0.0;
    for (int i = 0; i < dim; ++i) {
      p[i] = center[i] - r_in + 2.0 * r_in * idx[i] / (m - 1);
      double t = p[i] - center[i];
      d += t * t;
    }
    if (d <= r_in * r_in) {
      g.points.push_back(p);
      g.lattice.push_back(idx);
    }
    int k = dim - 1;
    while (k >= 0 && ++idx[k] == m) idx[k--] = 0;
    if (k < 0) break;
  }
  return g;
}

}  // namespace detail

inline PointGrid sample_points(const ContinuumSpec& s, int m) {
  if (const auto* b = s.get_if<Ball>()) {
    if (b->dim > 1) return detail::ball_point_grid(b->center, b->radius, b->dim, m);
  }
  if (const auto* f = s.get_if<BallFamily>()) {
    if (f->dim > 1) return detail::ball_point_grid(Point(f->dim, 0.0), 1.0, f->dim, m);
  }
  PointGrid g;
  g.per_axis = m;
  auto xs = sample_axis(s, m);
  g.points.reserve(xs.size());
  g.lattice.reserve(xs.size());
  for (int i = 0; i < m; ++i) {
    g.points.push_back({xs[i]});
    g.lattice.push_back({i});
  }
  return g;
}

// ---------------------------------------------------------------------------
// Residuals (pure; reports re-validate through these)
// ---------------------------------------------------------------------------

inline double point_distance(const Point& a, const Point& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline double idempotency_residual(const ContinuumSpec& s, const Point& x) {
  return point_distance(eval_raw(s, x, x), x);
}

/// | f(f(x,y),z) - f(f(x,z),f(y,z)) |
inline double distributivity_residual(const ContinuumSpec& s, const Point& x, const Point& y,
                                      const Point& z) {
  Point lhs = eval_raw(s, eval_raw(s, x, y), z);
  Point rhs = eval_raw(s, eval_raw(s, x, z), eval_raw(s, y, z));
  return point_distance(lhs, rhs);
}

/// | f(f(x,y),z) - f(f(x,z),y) |, the exchange form distributivity reduces to
/// when f(y,z) = y.
inline double exchange_residual(const ContinuumSpec& s, const Point& x, const Point& y,
                                const Point& z) {
  Point lhs = eval_raw(s, eval_raw(s, x, y), z);
  Point rhs = eval_raw(s, eval_raw(s, x, z), y);
  return point_distance(lhs, rhs);
}

inline double inverse_roundtrip_residual(const ContinuumSpec& s, const Point& x, const Point& y) {
  auto f = right_mul(s, y);
  auto g = right_mul_inverse(s, y);
  return point_distance(g(f(x)), x);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct VerificationReport {
  std::string axiom;
  std::string grid;
  double tolerance = 0.0;
  double max_residual = 0.0;
  std::vector<Point> witness;  // points realizing max_residual
  bool pass = false;
  std::vector<VerificationReport> cases;  // targeted subgrids, when applicable

  bool all_pass() const {
    if (!pass) return false;
    for (const auto& c : cases)
      if (!c.all_pass()) return false;
    return true;
  }
};

inline std::string grid_descr(const ContinuumSpec& s, int m, int arity) {
  return std::to_string(m) + "/axis ^" + std::to_string(arity) + " on " + spec_label(s);
}

// ---------------------------------------------------------------------------
// Idempotency
// ---------------------------------------------------------------------------

inline VerificationReport verify_idempotency(const ContinuumSpec& s, int m, double tol = 1e-9) {
  PointGrid g = sample_points(s, m);
  auto scan = parallel_max_scan(g.points.size(),
                                [&](std::size_t i) { return idempotency_residual(s, g.points[i]); });
  VerificationReport r;
  r.axiom = "idempotency";
  r.grid = grid_descr(s, m, 1);
  r.tolerance = tol;
  r.max_residual = scan.value;
  r.witness = {g.points[scan.index]};
  r.pass = scan.value <= tol;
  return r;
}

// ---------------------------------------------------------------------------
// Distributivity
// ---------------------------------------------------------------------------

namespace detail {

inline VerificationReport distributivity_sweep(const ContinuumSpec& s,
                                               const std::vector<Point>& xs,
                                               const std::vector<Point>& ys,
                                               const std::vector<Point>& zs, double tol,
                                               const std::string& name, const std::string& grid,
                                               bool exchange_form) {
  VerificationReport r;
  r.axiom = name;
  r.grid = grid;
  r.tolerance = tol;
  const std::size_t nx = xs.size(), ny = ys.size(), nz = zs.size();
  const std::size_t total = nx * ny * nz;
  if (total == 0) {
    r.pass = true;
    return r;
  }
  if (total > std::size_t(300000000)) {
    throw std::invalid_argument("distributivity sweep too large (" + std::to_string(total) +
                                " triples); reduce the grid");
  }
  auto scan = parallel_max_scan(total, [&](std::size_t i) {
    const Point& x = xs[i / (ny * nz)];
    const Point& y = ys[(i / nz) % ny];
    const Point& z = zs[i % nz];
    return exchange_form ? exchange_residual(s, x, y, z) : distributivity_residual(s, x, y, z);
  });
  r.max_residual = scan.value;
  r.witness = {xs[scan.index / (ny * nz)], ys[(scan.index / nz) % ny], zs[scan.index % nz]};
  r.pass = scan.value <= tol;
  return r;
}

}  // namespace detail

/// Exhaustive grid check of f(f(x,y),z) = f(f(x,z),f(y,z)). For single-seam
/// interval specs the four case families of the seam analysis are re-run as
/// targeted subgrids; the x-low/y-high case additionally checks the exchange
/// identity directly.
inline VerificationReport verify_distributivity(const ContinuumSpec& s, int m, double tol = 1e-9) {
  PointGrid g = sample_points(s, m);
  const std::string grid = grid_descr(s, m, 3);
  VerificationReport r = detail::distributivity_sweep(s, g.points, g.points, g.points, tol,
                                                      "distributivity", grid, false);

  const bool caseworthy = s.is<UnitInterval>() || s.is<ClosedInterval>();
  if (caseworthy) {
    auto range = axis_range(s);
    const double mid = 0.5 * (range->first + range->second);
    std::vector<Point> low, high, zlow, zhigh;
    for (const Point& p : g.points) {
      if (p[0] <= mid) low.push_back(p);
      if (p[0] >= mid) high.push_back(p);
      if (p[0] <= mid) zlow.push_back(p);
      if (p[0] > mid) zhigh.push_back(p);
    }
    const auto& all = g.points;
    r.cases.push_back(detail::distributivity_sweep(s, all, all, zlow, tol, "case z<=mid",
                                                   grid + " [z<=mid]", false));
    r.cases.push_back(detail::distributivity_sweep(s, high, high, zhigh, tol,
                                                   "case1 x,y>=mid", grid + " [case1]", false));
    r.cases.push_back(detail::distributivity_sweep(s, low, low, zhigh, tol, "case2 x,y<=mid",
                                                   grid + " [case2]", false));
    r.cases.push_back(detail::distributivity_sweep(s, high, low, zhigh, tol,
                                                   "case3 x>=mid,y<=mid", grid + " [case3]",
                                                   false));
    r.cases.push_back(detail::distributivity_sweep(s, low, high, zhigh, tol,
                                                   "case4 x<=mid,y>=mid", grid + " [case4]",
                                                   false));
    r.cases.push_back(detail::distributivity_sweep(s, low, high, zhigh, tol,
                                                   "case4 exchange identity",
                                                   grid + " [case4, f(f(x,y),z)=f(f(x,z),y)]",
                                                   true));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Homeomorphism checks for right multiplications
// ---------------------------------------------------------------------------

/// Monotonicity (1-d: strictly increasing samples; balls: along the first
/// coordinate within each slice of fixed remaining coordinates) plus endpoint
/// preservation on closed intervals. The residual is the worst monotonicity
/// violation / endpoint drift; 0 means the sampled map is a clean
/// orientation-preserving injection.
inline VerificationReport verify_homeomorphism(const ContinuumSpec& s, const Point& y, int m,
                                               double tol = 1e-9) {
  VerificationReport r;
  r.axiom = "homeomorphism of R_y";
  r.grid = grid_descr(s, m, 1);
  r.tolerance = tol;
  auto rm = right_mul(s, y);

  double worst = 0.0;
  std::vector<Point> witness = {y};

  if (dim(s) == 1) {
    auto xs = sample_axis(s, m);
    double prev = rm(Point{xs[0]})[0];
    for (std::size_t i = 1; i < xs.size(); ++i) {
      double cur = rm(Point{xs[i]})[0];
      double viol = prev - cur;  // must be strictly increasing
      if (viol > worst) {
        worst = viol;
        witness = {y, {xs[i - 1]}, {xs[i]}};
      }
      prev = cur;
    }
    if (!has_open_domain(s) && axis_range(s)) {
      auto [lo, hi] = *axis_range(s);
      double dlo = std::abs(rm(Point{lo})[0] - lo);
      double dhi = std::abs(rm(Point{hi})[0] - hi);
      if (dlo > worst) {
        worst = dlo;
        witness = {y, {lo}};
      }
      if (dhi > worst) {
        worst = dhi;
        witness = {y, {hi}};
      }
    }
  } else {
    PointGrid g = sample_points(s, m);
    // points are emitted with the last axis fastest, so iterate and group by
    // all-but-first lattice coordinates
    std::map<std::vector<int>, std::vector<std::size_t>> slices;
    for (std::size_t i = 0; i < g.points.size(); ++i) {
      std::vector<int> key(g.lattice[i].begin() + 1, g.lattice[i].end());
      slices[key].push_back(i);
    }
    for (auto& [key, idxs] : slices) {
      std::sort(idxs.begin(), idxs.end(), [&](std::size_t a, std::size_t b) {
        return g.points[a][0] < g.points[b][0];
      });
      bool have_prev = false;
      double prev = 0.0;
      Point prev_pt;
      for (std::size_t i : idxs) {
        Point img = rm(g.points[i]);
        for (std::size_t c = 1; c < img.size(); ++c) {
          double drift = std::abs(img[c] - g.points[i][c]);
          if (drift > worst) {
            worst = drift;
            witness = {y, g.points[i]};
          }
        }
        if (have_prev) {
          double viol = prev - img[0];
          if (viol > worst) {
            worst = viol;
            witness = {y, prev_pt, g.points[i]};
          }
        }
        prev = img[0];
        prev_pt = g.points[i];
        have_prev = true;
      }
    }
  }

  r.max_residual = worst;
  r.witness = std::move(witness);
  r.pass = worst <= tol;
  return r;
}

/// Worst verify_homeomorphism over a sampled set of y.
inline VerificationReport verify_homeomorphism_sweep(const ContinuumSpec& s, int m,
                                                     double tol = 1e-9) {
  PointGrid g = sample_points(s, m);
  VerificationReport worst;
  worst.axiom = "homeomorphism of R_y (swept over y)";
  worst.grid = grid_descr(s, m, 2);
  worst.tolerance = tol;
  worst.max_residual = -1.0;
  for (const Point& y : g.points) {
    VerificationReport r = verify_homeomorphism(s, y, m, tol);
    if (r.max_residual > worst.max_residual) {
      worst.max_residual = r.max_residual;
      worst.witness = r.witness;
    }
  }
  if (worst.max_residual < 0.0) worst.max_residual = 0.0;
  worst.pass = worst.max_residual <= tol;
  return worst;
}

}  // namespace qtop
