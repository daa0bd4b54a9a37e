#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qtop {

using Point = std::vector<double>;

// ---------------------------------------------------------------------------
// Spec variants
// ---------------------------------------------------------------------------

/// Quandle on [0,1]: f(x,y) = x for y <= 1/2 or x >= 1/2, and
/// f(x,y) = (1/2)(2x)^(1+eps) for y = 1/2 + eps, x <= 1/2.
struct UnitInterval {};

/// The same construction carried to [a,b]. The power-map exponent family
/// 1 + eps can be replaced by any continuous eps -> h(eps) for which
/// u -> u^h(eps) stays a homeomorphism of [0,1] (h > 0); h(0) must be 1 so
/// the seam at y = midpoint is continuous.
struct ClosedInterval {
  double a = 0.0;
  double b = 1.0;
  std::function<double(double)> exponent;  // null -> 1 + eps

  ClosedInterval() = default;
  ClosedInterval(double a_, double b_, std::function<double(double)> h = nullptr)
      : a(a_), b(b_), exponent(std::move(h)) {
    if (!(a < b)) throw std::invalid_argument("ClosedInterval: requires a < b");
  }
};

/// Quandle on the open interval (-1,1): f(x,y) = x for y <= 0 or x >= 0,
/// and f(x,y) = -1 + (x+1)^(1+y(1-y^2)) for y > 0, x < 0. The cubic factor
/// sends the exponent to 1 at both ends, so right multiplications fade to
/// the identity toward the boundary.
struct OpenInterval {};

/// Exponent rule for the ball operation.
///  - BoundaryDamped: exponent 1 + y1(1-|y|^2)(1-|x|^2). The (1-|x|^2)
///    factor damps the map to the identity at the boundary, keeping the
///    operation ball-closed, but it makes the exponent depend on the point
///    being moved; see the verifier results for what that does to
///    distributivity.
///  - InvariantExponent: the x-factor is 1 - sum_{i>=2} x_i^2, which the
///    operation leaves unchanged, so right multiplications commute and
///    distributivity holds identically.
enum class BallVariant { BoundaryDamped, InvariantExponent };

/// Quandle operation on an open ball of dimension dim, centered at `center`
/// with radius `radius` (transported from the unit ball by the affine chart).
struct Ball {
  int dim = 1;
  BallVariant variant = BallVariant::BoundaryDamped;
  Point center;  // defaults to origin
  double radius = 1.0;

  Ball() { center.assign(1, 0.0); }
  Ball(int dim_, BallVariant v, Point c = {}, double r = 1.0)
      : dim(dim_), variant(v), center(std::move(c)), radius(r) {
    if (dim < 1) throw std::invalid_argument("Ball: dim must be >= 1");
    if (!(radius > 0.0)) throw std::invalid_argument("Ball: radius must be positive");
    if (center.empty()) center.assign(dim, 0.0);
    if (static_cast<int>(center.size()) != dim) {
      throw std::invalid_argument("Ball: center dimension mismatch");
    }
  }
};

/// [a,b] split into n equal closed subintervals, each carrying the interval
/// quandle; pairs that do not share a subinterval act trivially. The trivial
/// locus has exactly n positive-length components (plus the isolated left
/// endpoint), which makes the family pairwise nonisomorphic.
struct IntervalFamily {
  int n = 1;
  double a = 0.0;
  double b = 1.0;

  IntervalFamily() = default;
  IntervalFamily(int n_, double a_, double b_) : n(n_), a(a_), b(b_) {
    if (n < 1) throw std::invalid_argument("IntervalFamily: n must be >= 1");
    if (!(a < b)) throw std::invalid_argument("IntervalFamily: requires a < b");
  }
};

/// Unit ball with n-1 disjoint small balls of radius 1/n centered at
/// (-1 + 2k/n, 0, ..., 0), k = 1..n-1, each carrying the ball operation;
/// everything else acts trivially. The nontrivial locus is n-1 open
/// half-balls (a homeomorphism invariant).
struct BallFamily {
  int n = 2;
  int dim = 2;
  BallVariant variant = BallVariant::BoundaryDamped;

  BallFamily() = default;
  BallFamily(int n_, int dim_, BallVariant v = BallVariant::BoundaryDamped)
      : n(n_), dim(dim_), variant(v) {
    if (n < 1) throw std::invalid_argument("BallFamily: n must be >= 1");
    if (dim < 1 || dim > 3) throw std::invalid_argument("BallFamily: dim must be in 1..3");
  }
};

/// Affine quandle on the real line: f_t(x,y) = t*x + (1-t)*y, t != 0.
struct AffineLine {
  double t = 2.0;

  AffineLine() = default;
  explicit AffineLine(double t_) : t(t_) {
    if (t == 0.0) throw std::invalid_argument("AffineLine: t must be nonzero");
  }
};

/// Nontrivial quandle on the real line obtained by transporting an interval
/// quandle on (-pi/2, pi/2) through arctan. Evaluated by its explicit
/// closed form; see chart_arctan() for the same structure built as a
/// ChartTransport.
struct RealLineArctan {};

struct ContinuumSpec;

/// Transport of an inner quandle through a chart: the operation is
/// inverse(f_inner(forward(x), forward(y))).
struct ChartTransport {
  std::shared_ptr<const ContinuumSpec> inner;
  std::function<Point(const Point&)> forward;
  std::function<Point(const Point&)> inverse;
  std::string chart_name;  // non-empty for built-in, serializable charts
};

using SpecVariant = std::variant<UnitInterval, ClosedInterval, OpenInterval, Ball, IntervalFamily,
                                 BallFamily, AffineLine, RealLineArctan, ChartTransport>;

struct ContinuumSpec {
  SpecVariant v;

  ContinuumSpec(UnitInterval s) : v(std::move(s)) {}
  ContinuumSpec(ClosedInterval s) : v(std::move(s)) {}
  ContinuumSpec(OpenInterval s) : v(std::move(s)) {}
  ContinuumSpec(Ball s) : v(std::move(s)) {}
  ContinuumSpec(IntervalFamily s) : v(std::move(s)) {}
  ContinuumSpec(BallFamily s) : v(std::move(s)) {}
  ContinuumSpec(AffineLine s) : v(std::move(s)) {}
  ContinuumSpec(RealLineArctan s) : v(std::move(s)) {}
  ContinuumSpec(ChartTransport s) : v(std::move(s)) {}

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(v);
  }
};

// ---------------------------------------------------------------------------
// Dimensions, domains, labels
// ---------------------------------------------------------------------------

inline int dim(const ContinuumSpec& s);

namespace detail {
struct DimVisitor {
  int operator()(const UnitInterval&) const { return 1; }
  int operator()(const ClosedInterval&) const { return 1; }
  int operator()(const OpenInterval&) const { return 1; }
  int operator()(const Ball& b) const { return b.dim; }
  int operator()(const IntervalFamily&) const { return 1; }
  int operator()(const BallFamily& b) const { return b.dim; }
  int operator()(const AffineLine&) const { return 1; }
  int operator()(const RealLineArctan&) const { return 1; }
  int operator()(const ChartTransport& c) const { return dim(*c.inner); }
};
}  // namespace detail

inline int dim(const ContinuumSpec& s) { return std::visit(detail::DimVisitor{}, s.v); }

/// Closed 1-d domains report their exact range; unbounded line specs report
/// nothing (samplers fall back to a default box).
inline std::optional<std::pair<double, double>> axis_range(const ContinuumSpec& s) {
  if (s.is<UnitInterval>()) return std::make_pair(0.0, 1.0);
  if (const auto* ci = s.get_if<ClosedInterval>()) return std::make_pair(ci->a, ci->b);
  if (s.is<OpenInterval>()) return std::make_pair(-1.0, 1.0);
  if (const auto* f = s.get_if<IntervalFamily>()) return std::make_pair(f->a, f->b);
  if (const auto* b = s.get_if<Ball>()) {
    if (b->dim == 1) return std::make_pair(b->center[0] - b->radius, b->center[0] + b->radius);
  }
  if (const auto* b = s.get_if<BallFamily>()) {
    if (b->dim == 1) return std::make_pair(-1.0, 1.0);
  }
  return std::nullopt;
}

inline bool has_open_domain(const ContinuumSpec& s) {
  return s.is<OpenInterval>() || s.is<Ball>() || s.is<BallFamily>();
}

inline bool in_domain(const ContinuumSpec& s, const Point& x);

namespace detail {

inline double sq_dist(const Point& x, const Point& c) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double t = x[i] - c[i];
    d += t * t;
  }
  return d;
}

struct DomainVisitor {
  const Point& x;
  bool operator()(const UnitInterval&) const { return x[0] >= 0.0 && x[0] <= 1.0; }
  bool operator()(const ClosedInterval& ci) const { return x[0] >= ci.a && x[0] <= ci.b; }
  bool operator()(const OpenInterval&) const { return x[0] > -1.0 && x[0] < 1.0; }
  bool operator()(const Ball& b) const {
    return sq_dist(x, b.center) < b.radius * b.radius;  // open ball
  }
  bool operator()(const IntervalFamily& f) const { return x[0] >= f.a && x[0] <= f.b; }
  bool operator()(const BallFamily&) const {
    double d = 0.0;
    for (double v : x) d += v * v;
    return d < 1.0;
  }
  bool operator()(const AffineLine&) const { return std::isfinite(x[0]); }
  bool operator()(const RealLineArctan&) const { return std::isfinite(x[0]); }
  bool operator()(const ChartTransport& c) const { return in_domain(*c.inner, c.forward(x)); }
};

}  // namespace detail

inline bool in_domain(const ContinuumSpec& s, const Point& x) {
  if (static_cast<int>(x.size()) != dim(s)) return false;
  return std::visit(detail::DomainVisitor{x}, s.v);
}

inline std::string spec_label(const ContinuumSpec& s);

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace detail {

inline double interval_eval(double a, double b, const std::function<double(double)>& h, double x,
                            double y) {
  const double mid = 0.5 * (a + b);
  if (y <= mid || x >= mid) return x;
  const double eps = y - mid;
  const double e = h ? h(eps) : 1.0 + eps;
  const double u = (x - a) * (2.0 / (b - a));
  return a + 0.5 * (b - a) * std::pow(u, e);
}

inline double interval_rmul_inverse(double a, double b, const std::function<double(double)>& h,
                                    double z, double y) {
  const double mid = 0.5 * (a + b);
  if (y <= mid || z >= mid) return z;
  const double eps = y - mid;
  const double e = h ? h(eps) : 1.0 + eps;
  const double u = (z - a) * (2.0 / (b - a));
  return a + 0.5 * (b - a) * std::pow(u, 1.0 / e);
}

// Subinterval bookkeeping for IntervalFamily. A point on a shared breakpoint
// belongs to two subintervals; the operation value is the same either way,
// so returning the first common index is safe.
inline std::optional<int> family_common_interval(const IntervalFamily& f, double x, double y) {
  const double w = (f.b - f.a) / f.n;
  auto candidates = [&](double p, int (&out)[2]) {
    int m = 0;
    int k = static_cast<int>(std::floor((p - f.a) / w));
    if (k > f.n - 1) k = f.n - 1;
    if (k < 0) k = 0;
    out[m++] = k;
    if (k >= 1 && p == f.a + k * w) out[m++] = k - 1;
    return m;
  };
  int cx[2], cy[2];
  int nx = candidates(x, cx), ny = candidates(y, cy);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      if (cx[i] == cy[j]) return cx[i];
  return std::nullopt;
}

inline double family_eval(const IntervalFamily& f, double x, double y) {
  auto k = family_common_interval(f, x, y);
  if (!k) return x;
  const double w = (f.b - f.a) / f.n;
  return interval_eval(f.a + *k * w, f.a + (*k + 1) * w, nullptr, x, y);
}

inline double ball_exponent(const Ball& b, const Point& u, const Point& v) {
  double ssq_v = 0.0;
  for (double t : v) ssq_v += t * t;
  double xfactor;
  if (b.variant == BallVariant::BoundaryDamped) {
    double ssq_u = 0.0;
    for (double t : u) ssq_u += t * t;
    xfactor = 1.0 - ssq_u;
  } else {
    double rest = 0.0;
    for (std::size_t i = 1; i < u.size(); ++i) rest += u[i] * u[i];
    xfactor = 1.0 - rest;
  }
  return 1.0 + v[0] * (1.0 - ssq_v) * xfactor;
}

// Operation in unit-ball coordinates. Total for u1, v1 in (-1, 1).
inline Point ball_eval_local(const Ball& b, Point u, const Point& v) {
  if (v[0] <= 0.0 || u[0] >= 0.0) return u;
  const double e = ball_exponent(b, u, v);
  u[0] = -1.0 + std::pow(u[0] + 1.0, e);
  return u;
}

inline Point ball_to_local(const Ball& b, const Point& x) {
  Point u(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) u[i] = (x[i] - b.center[i]) / b.radius;
  return u;
}

inline Point ball_from_local(const Ball& b, const Point& u) {
  Point x(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) x[i] = b.center[i] + b.radius * u[i];
  return x;
}

inline Point ball_eval(const Ball& b, const Point& x, const Point& y) {
  return ball_from_local(b, ball_eval_local(b, ball_to_local(b, x), ball_to_local(b, y)));
}

// Root of g(u0) = (u0+1)^(1 + c*(1 - u0^2 - rest)) - (z0+1) on (-1, 0],
// used to invert the boundary-damped ball map (no closed form: the exponent
// depends on the preimage). g is continuous and brackets the target.
inline double ball_damped_invert_first(double z0, double c, double rest) {
  auto g = [&](double u0) { return std::pow(u0 + 1.0, 1.0 + c * (1.0 - u0 * u0 - rest)) - (z0 + 1.0); };
  double lo = -1.0, hi = 0.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline Point ball_rmul_inverse(const Ball& b, const Point& z, const Point& y) {
  Point w = ball_to_local(b, z);
  Point v = ball_to_local(b, y);
  if (v[0] <= 0.0 || w[0] >= 0.0) return z;
  if (b.variant == BallVariant::InvariantExponent) {
    const double e = ball_exponent(b, w, v);  // x-factor depends only on unchanged coords
    w[0] = -1.0 + std::pow(w[0] + 1.0, 1.0 / e);
  } else {
    double ssq_v = 0.0;
    for (double t : v) ssq_v += t * t;
    double rest = 0.0;
    for (std::size_t i = 1; i < w.size(); ++i) rest += w[i] * w[i];
    w[0] = ball_damped_invert_first(w[0], v[0] * (1.0 - ssq_v), rest);
  }
  return ball_from_local(b, w);
}

inline std::optional<int> ball_family_ball_index(const BallFamily& f, const Point& x) {
  const double r = 1.0 / f.n;
  // centers at x1 = -1 + 2k/n, k = 1..n-1; the open balls are disjoint
  int k = static_cast<int>(std::lround((x[0] + 1.0) * f.n / 2.0));
  for (int kk = k - 1; kk <= k + 1; ++kk) {
    if (kk < 1 || kk > f.n - 1) continue;
    double d = 0.0;
    double dx0 = x[0] - (-1.0 + 2.0 * kk / f.n);
    d += dx0 * dx0;
    for (std::size_t i = 1; i < x.size(); ++i) d += x[i] * x[i];
    if (d < r * r) return kk;
  }
  return std::nullopt;
}

inline Ball ball_family_member(const BallFamily& f, int k) {
  Point c(f.dim, 0.0);
  c[0] = -1.0 + 2.0 * k / f.n;
  return Ball(f.dim, f.variant, std::move(c), 1.0 / f.n);
}

inline constexpr double kPi = std::numbers::pi;

inline double arctan_line_eval(double x, double y) {
  if (!(x < 0.0 && y >= 0.0)) return x;
  const double alpha = std::atan(x);
  const double beta = std::atan(y);  // in [0, pi/2)
  const double h = beta <= kPi / 4 ? 1.0 + beta : 1.0 + kPi / 2 - beta;
  const double u = (2.0 / kPi) * (alpha + kPi / 2);
  return std::tan(-kPi / 2 + (kPi / 2) * std::pow(u, h));
}

inline double arctan_line_rmul_inverse(double z, double y) {
  if (!(z < 0.0 && y >= 0.0)) return z;
  const double beta = std::atan(y);
  const double h = beta <= kPi / 4 ? 1.0 + beta : 1.0 + kPi / 2 - beta;
  const double u = (2.0 / kPi) * (std::atan(z) + kPi / 2);
  return std::tan(-kPi / 2 + (kPi / 2) * std::pow(u, 1.0 / h));
}

}  // namespace detail

/// Evaluate f(x, y) without domain validation. The formulas are total on the
/// natural carrier extension (for balls, the slab |x1| < 1), which is what
/// composed expressions in the verifiers evaluate through.
inline Point eval_raw(const ContinuumSpec& s, const Point& x, const Point& y) {
  using namespace detail;
  return std::visit(
      [&](const auto& spec) -> Point {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, UnitInterval>) {
          if (y[0] <= 0.5 || x[0] >= 0.5) return x;
          return {0.5 * std::pow(2.0 * x[0], 1.0 + (y[0] - 0.5))};
        } else if constexpr (std::is_same_v<T, ClosedInterval>) {
          return {interval_eval(spec.a, spec.b, spec.exponent, x[0], y[0])};
        } else if constexpr (std::is_same_v<T, OpenInterval>) {
          if (y[0] <= 0.0 || x[0] >= 0.0) return x;
          return {-1.0 + std::pow(x[0] + 1.0, 1.0 + y[0] * (1.0 - y[0] * y[0]))};
        } else if constexpr (std::is_same_v<T, Ball>) {
          return ball_eval(spec, x, y);
        } else if constexpr (std::is_same_v<T, IntervalFamily>) {
          return {family_eval(spec, x[0], y[0])};
        } else if constexpr (std::is_same_v<T, BallFamily>) {
          auto kx = ball_family_ball_index(spec, x);
          if (!kx) return x;
          auto ky = ball_family_ball_index(spec, y);
          if (!ky || *kx != *ky) return x;
          return ball_eval(ball_family_member(spec, *kx), x, y);
        } else if constexpr (std::is_same_v<T, AffineLine>) {
          return {spec.t * x[0] + (1.0 - spec.t) * y[0]};
        } else if constexpr (std::is_same_v<T, RealLineArctan>) {
          return {arctan_line_eval(x[0], y[0])};
        } else {  // ChartTransport
          return spec.inverse(eval_raw(*spec.inner, spec.forward(x), spec.forward(y)));
        }
      },
      s.v);
}

/// Evaluate f(x, y), rejecting points outside the spec's domain.
inline Point eval(const ContinuumSpec& s, const Point& x, const Point& y) {
  if (!in_domain(s, x)) throw std::domain_error("eval: x outside domain of " + spec_label(s));
  if (!in_domain(s, y)) throw std::domain_error("eval: y outside domain of " + spec_label(s));
  return eval_raw(s, x, y);
}

/// Scalar conveniences for 1-d specs.
inline double eval_raw1(const ContinuumSpec& s, double x, double y) {
  return eval_raw(s, Point{x}, Point{y})[0];
}
inline double eval1(const ContinuumSpec& s, double x, double y) {
  return eval(s, Point{x}, Point{y})[0];
}

// ---------------------------------------------------------------------------
// Right multiplications
// ---------------------------------------------------------------------------

/// R_y as a callable; R_y(x) = f(x, y).
inline std::function<Point(const Point&)> right_mul(const ContinuumSpec& s, const Point& y) {
  if (!in_domain(s, y)) throw std::domain_error("right_mul: y outside domain");
  return [s, y](const Point& x) { return eval_raw(s, x, y); };
}

/// Exact inverse of R_y. Power maps invert through the reciprocal exponent,
/// affine maps linearly; the boundary-damped ball map is inverted by
/// bisection (its exponent depends on the preimage).
inline std::function<Point(const Point&)> right_mul_inverse(const ContinuumSpec& s,
                                                            const Point& y) {
  using namespace detail;
  if (!in_domain(s, y)) throw std::domain_error("right_mul_inverse: y outside domain");
  return std::visit(
      [&](const auto& spec) -> std::function<Point(const Point&)> {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, UnitInterval>) {
          double yy = y[0];
          return [yy](const Point& z) -> Point {
            if (yy <= 0.5 || z[0] >= 0.5) return z;
            return {0.5 * std::pow(2.0 * z[0], 1.0 / (1.0 + (yy - 0.5)))};
          };
        } else if constexpr (std::is_same_v<T, ClosedInterval>) {
          return [spec, yy = y[0]](const Point& z) -> Point {
            return {interval_rmul_inverse(spec.a, spec.b, spec.exponent, z[0], yy)};
          };
        } else if constexpr (std::is_same_v<T, OpenInterval>) {
          return [yy = y[0]](const Point& z) -> Point {
            if (yy <= 0.0 || z[0] >= 0.0) return z;
            return {-1.0 + std::pow(z[0] + 1.0, 1.0 / (1.0 + yy * (1.0 - yy * yy)))};
          };
        } else if constexpr (std::is_same_v<T, Ball>) {
          return [spec, y](const Point& z) { return ball_rmul_inverse(spec, z, y); };
        } else if constexpr (std::is_same_v<T, IntervalFamily>) {
          return [spec, yy = y[0]](const Point& z) -> Point {
            auto k = family_common_interval(spec, z[0], yy);
            if (!k) return z;
            const double w = (spec.b - spec.a) / spec.n;
            return {interval_rmul_inverse(spec.a + *k * w, spec.a + (*k + 1) * w, nullptr, z[0],
                                          yy)};
          };
        } else if constexpr (std::is_same_v<T, BallFamily>) {
          return [spec, y](const Point& z) -> Point {
            auto kz = ball_family_ball_index(spec, z);
            if (!kz) return z;
            auto ky = ball_family_ball_index(spec, y);
            if (!ky || *kz != *ky) return z;
            return ball_rmul_inverse(ball_family_member(spec, *kz), z, y);
          };
        } else if constexpr (std::is_same_v<T, AffineLine>) {
          return [t = spec.t, yy = y[0]](const Point& z) -> Point {
            return {(z[0] - (1.0 - t) * yy) / t};
          };
        } else if constexpr (std::is_same_v<T, RealLineArctan>) {
          return [yy = y[0]](const Point& z) -> Point {
            return {arctan_line_rmul_inverse(z[0], yy)};
          };
        } else {  // ChartTransport
          ChartTransport c = spec;
          Point fy = c.forward(y);
          auto inner_inv = right_mul_inverse(*c.inner, fy);
          return [c, inner_inv](const Point& z) { return c.inverse(inner_inv(c.forward(z))); };
        }
      },
      s.v);
}

// ---------------------------------------------------------------------------
// Built-in chart: arctan transport of the (-pi/2, pi/2) interval quandle
// ---------------------------------------------------------------------------

/// Validating factory for chart transports: checks inverse(forward(x)) = x
/// on sampled points of [sample_lo, sample_hi].
inline ContinuumSpec make_chart(ContinuumSpec inner, std::function<Point(const Point&)> forward,
                                std::function<Point(const Point&)> inverse, std::string name,
                                double sample_lo = -10.0, double sample_hi = 10.0,
                                double tol = 1e-9) {
  constexpr int kSamples = 64;
  for (int i = 0; i < kSamples; ++i) {
    double x = sample_lo + (sample_hi - sample_lo) * i / (kSamples - 1);
    Point p{x};
    Point r = inverse(forward(p));
    if (std::abs(r[0] - x) > tol * std::max(1.0, std::abs(x))) {
      throw std::invalid_argument("make_chart: forward/inverse do not round-trip at x = " +
                                  std::to_string(x));
    }
  }
  ChartTransport c;
  c.inner = std::make_shared<const ContinuumSpec>(std::move(inner));
  c.forward = std::move(forward);
  c.inverse = std::move(inverse);
  c.chart_name = std::move(name);
  return ContinuumSpec(std::move(c));
}

/// The real-line quandle of RealLineArctan, assembled as a chart transport:
/// inner carrier [-pi/2, pi/2] with the tent exponent h(eps) =
/// 1 + min(eps, pi/2 - eps), forward = arctan, inverse = tan. The tent sends
/// the exponent back to 1 at the open end so the transported operation stays
/// continuous on the whole line.
inline ContinuumSpec chart_arctan() {
  using detail::kPi;
  auto tent = [](double eps) { return 1.0 + std::min(eps, kPi / 2 - eps); };
  ClosedInterval inner(-kPi / 2, kPi / 2, tent);
  return make_chart(ContinuumSpec(inner), [](const Point& p) -> Point { return {std::atan(p[0])}; },
                    [](const Point& p) -> Point { return {std::tan(p[0])}; }, "arctan");
}

inline std::string spec_label(const ContinuumSpec& s) {
  return std::visit(
      [](const auto& spec) -> std::string {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, UnitInterval>) {
          return "unit-interval";
        } else if constexpr (std::is_same_v<T, ClosedInterval>) {
          return "interval[" + std::to_string(spec.a) + "," + std::to_string(spec.b) + "]" +
                 (spec.exponent ? " (custom exponent)" : "");
        } else if constexpr (std::is_same_v<T, OpenInterval>) {
          return "open-interval(-1,1)";
        } else if constexpr (std::is_same_v<T, Ball>) {
          return std::string("ball dim ") + std::to_string(spec.dim) +
                 (spec.variant == BallVariant::BoundaryDamped ? " (boundary-damped)"
                                                              : " (invariant-exponent)");
        } else if constexpr (std::is_same_v<T, IntervalFamily>) {
          return "interval-family n=" + std::to_string(spec.n) + " on [" + std::to_string(spec.a) +
                 "," + std::to_string(spec.b) + "]";
        } else if constexpr (std::is_same_v<T, BallFamily>) {
          return "ball-family n=" + std::to_string(spec.n) + " dim " + std::to_string(spec.dim);
        } else if constexpr (std::is_same_v<T, AffineLine>) {
          return "affine-line t=" + std::to_string(spec.t);
        } else if constexpr (std::is_same_v<T, RealLineArctan>) {
          return "real-line-arctan";
        } else {
          return "chart(" + (spec.chart_name.empty() ? std::string("custom") : spec.chart_name) +
                 ")";
        }
      },
      s.v);
}

}  // namespace qtop
