#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtop {

using Rational = boost::multiprecision::cpp_rational;

/// Bivariate polynomial sum a_ij x^i y^j with exact rational coefficients.
/// Zero coefficients are never stored, so structural equality is semantic
/// equality. Degrees are capped at kMaxDegree (root counting on the
/// derivative gets expensive beyond that).
class BivariatePoly {
 public:
  static constexpr int kMaxDegree = 32;
  using CoeffMap = std::map<std::pair<int, int>, Rational>;

  BivariatePoly() = default;
  explicit BivariatePoly(CoeffMap coeffs) {
    for (auto& [ij, c] : coeffs) {
      if (c != 0) set(ij.first, ij.second, c);
    }
  }

  void set(int i, int j, const Rational& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("BivariatePoly: negative exponent");
    if (i > kMaxDegree || j > kMaxDegree) {
      throw std::invalid_argument("BivariatePoly: degree exceeds cap of " +
                                  std::to_string(kMaxDegree));
    }
    if (c == 0) {
      coeffs_.erase({i, j});
    } else {
      coeffs_[{i, j}] = c;
    }
  }

  static BivariatePoly identity_x() {
    BivariatePoly p;
    p.set(1, 0, 1);
    return p;
  }

  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// True iff the polynomial is literally x.
  bool is_x() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == std::make_pair(1, 0) &&
           coeffs_.begin()->second == 1;
  }

  Rational coeff(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  int degree_x() const {
    int d = -1;
    for (const auto& [ij, c] : coeffs_) d = std::max(d, ij.first);
    return d;
  }
  int degree_y() const {
    int d = -1;
    for (const auto& [ij, c] : coeffs_) d = std::max(d, ij.second);
    return d;
  }

  Rational eval(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    for (const auto& [ij, c] : coeffs_) {
      Rational term = c;
      for (int k = 0; k < ij.first; ++k) term *= x;
      for (int k = 0; k < ij.second; ++k) term *= y;
      acc += term;
    }
    return acc;
  }

  double eval_double(double x, double y) const {
    double acc = 0.0;
    for (const auto& [ij, c] : coeffs_) {
      double term = static_cast<double>(c);
      for (int k = 0; k < ij.first; ++k) term *= x;
      for (int k = 0; k < ij.second; ++k) term *= y;
      acc += term;
    }
    return acc;
  }

  bool operator==(const BivariatePoly& o) const { return coeffs_ == o.coeffs_; }

 private:
  CoeffMap coeffs_;
};

// ---------------------------------------------------------------------------
// Univariate helpers (dense, index = power) and Sturm root counting
// ---------------------------------------------------------------------------

using UniPoly = std::vector<Rational>;

namespace upoly {

inline void trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool is_zero(const UniPoly& p) { return p.empty(); }

inline int degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UniPoly derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
  trim(d);
  return d;
}

inline Rational eval(const UniPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

/// Remainder of a by b (b nonzero).
inline UniPoly rem(UniPoly a, const UniPoly& b) {
  trim(a);
  while (!a.empty() && a.size() >= b.size()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

inline UniPoly monic(UniPoly p) {
  trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline UniPoly gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = rem(a, b);
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

inline int sign(const Rational& r) { return r == 0 ? 0 : (r < 0 ? -1 : 1); }

/// Exact quotient p / g when g divides p (used for the square-free part).
inline UniPoly quotient(UniPoly p, const UniPoly& g) {
  UniPoly q(p.size(), Rational(0));
  trim(p);
  while (!p.empty() && p.size() >= g.size()) {
    Rational c = p.back() / g.back();
    std::size_t shift = p.size() - g.size();
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) p[shift + i] -= c * g[i];
    trim(p);
  }
  trim(q);
  return q;
}

/// Number of distinct real roots of p in the open interval (0, 1), by Sturm's
/// theorem on the square-free part.
inline int count_roots_open01(const UniPoly& p_in) {
  UniPoly p = p_in;
  trim(p);
  if (p.empty()) throw std::invalid_argument("count_roots_open01: zero polynomial");
  if (degree(p) == 0) return 0;

  UniPoly g = gcd(p, derivative(p));
  if (degree(g) > 0) p = monic(quotient(p, g));

  std::vector<UniPoly> chain;
  chain.push_back(p);
  chain.push_back(derivative(p));
  trim(chain.back());
  while (!chain.back().empty() && degree(chain.back()) > 0) {
    UniPoly r = rem(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    trim(r);
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }

  auto variations = [&](const Rational& t) {
    int v = 0, prev = 0;
    for (const auto& q : chain) {
      if (q.empty()) continue;
      int s = sign(eval(q, t));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };

  int roots_half_open = variations(Rational(0)) - variations(Rational(1));  // roots in (0, 1]
  if (eval(p, Rational(1)) == 0) --roots_half_open;
  return roots_half_open;
}

}  // namespace upoly

// ---------------------------------------------------------------------------
// Quandle checker
// ---------------------------------------------------------------------------

/// Outcome of the endpoint-constraint pipeline for a candidate polynomial
/// quandle operation on [0,1]. `forced_trivial` holds exactly when every
/// constraint is satisfied, which pins the polynomial to f(x,y) = x.
struct QuandleVerdict {
  bool forced_trivial = false;
  int failed_step = 0;  // 0 if passed, else 1..4
  std::string violation;
  std::vector<std::string> trace;
};

/// Constraint pipeline for "is this polynomial a quandle operation on [0,1]":
///   1. f(0,0) = 0, so the constant coefficient vanishes.
///   2. Right multiplications fix 0: f(0,y) = 0 identically, so every a_0j
///      vanishes.
///   3. Right multiplications fix 1: f(1,y) = 1 identically (the column sums
///      over x-powers are 1 for y^0 and 0 for y^j, j >= 1), and the operation
///      is left as a polynomial in x alone (every a_ij with j >= 1 vanishes).
///   4. f(x,x) = x: the diagonal collapse equals x coefficient-wise.
/// Any polynomial surviving all four constraints is literally x.
inline QuandleVerdict check_polynomial_quandle(const BivariatePoly& p) {
  QuandleVerdict v;

  // step 1
  if (Rational c00 = p.coeff(0, 0); c00 != 0) {
    v.failed_step = 1;
    v.violation = "f(0,0) != 0: a_{0,0} = " + c00.str();
    return v;
  }
  v.trace.push_back("step 1: f(0,0) = 0 (constant coefficient vanishes)");

  // step 2
  for (const auto& [ij, c] : p.coeffs()) {
    if (ij.first == 0) {
      v.failed_step = 2;
      v.violation = "f(0,y) != 0: a_{0," + std::to_string(ij.second) + "} = " + c.str() + " != 0";
      return v;
    }
  }
  v.trace.push_back("step 2: f(0,y) = 0 identically (all a_{0,j} vanish)");

  // step 3: f(1,y) = 1 identically ...
  std::map<int, Rational> col_sums;  // y-degree -> sum over x-powers
  for (const auto& [ij, c] : p.coeffs()) col_sums[ij.second] += c;
  if (Rational s0 = col_sums.count(0) ? col_sums[0] : Rational(0); s0 != 1) {
    v.failed_step = 3;
    v.violation = "f(1,y) != 1: sum_i a_{i,0} = " + s0.str() + " != 1";
    return v;
  }
  for (const auto& [j, s] : col_sums) {
    if (j >= 1 && s != 0) {
      v.failed_step = 3;
      v.violation = "f(1,y) != 1: sum_i a_{i," + std::to_string(j) + "} = " + s.str() + " != 0";
      return v;
    }
  }
  // ... and the operation collapses to a single-variable polynomial. (The
  // endpoint identities alone do not force this; it is a separate constraint,
  // and polynomials like x + x(1-x)(y-x) fail here and nowhere earlier.)
  for (const auto& [ij, c] : p.coeffs()) {
    if (ij.second >= 1) {
      v.failed_step = 3;
      v.violation = "f depends on y: a_{" + std::to_string(ij.first) + "," +
                    std::to_string(ij.second) + "} = " + c.str() + " != 0";
      return v;
    }
  }
  v.trace.push_back("step 3: f(1,y) = 1 identically and f is a polynomial in x only");

  // step 4: f(x,x) = x
  std::map<int, Rational> diag;  // total degree -> anti-diagonal sum
  for (const auto& [ij, c] : p.coeffs()) diag[ij.first + ij.second] += c;
  for (const auto& [d, s] : diag) {
    Rational want = d == 1 ? 1 : 0;
    if (s != want) {
      v.failed_step = 4;
      v.violation = "f(x,x) != x: degree-" + std::to_string(d) + " diagonal coefficient = " +
                    s.str() + " != " + want.str();
      return v;
    }
  }
  if (diag.find(1) == diag.end()) {
    v.failed_step = 4;
    v.violation = "f(x,x) != x: degree-1 diagonal coefficient = 0 != 1";
    return v;
  }
  v.trace.push_back("step 4: f(x,x) = x (diagonal collapse is the identity)");

  v.forced_trivial = true;
  return v;
}

// ---------------------------------------------------------------------------
// Rack checker
// ---------------------------------------------------------------------------

struct RackVerdict {
  bool valid = false;
  bool decreasing = false;  // endpoint-swapping bijection (allowed for racks)
  std::string reason;
};

/// Decides whether the polynomial is a single-variable map f(x,y) = u(x)
/// restricting to a bijection [0,1] -> [0,1]:
///   - y-degree must be 0;
///   - {u(0), u(1)} = {0, 1} (racks may swap the endpoints);
///   - u' has no real root in (0,1), certified by exact Sturm counting, so u
///     is strictly monotone. This is deliberately conservative: bijections
///     whose derivative has an interior zero of even multiplicity are
///     rejected.
inline RackVerdict check_polynomial_rack(const BivariatePoly& p) {
  RackVerdict v;
  if (p.degree_y() >= 1) {
    v.reason = "depends on y (y-degree " + std::to_string(p.degree_y()) + ")";
    return v;
  }
  UniPoly u(p.degree_x() + 1, Rational(0));
  for (const auto& [ij, c] : p.coeffs()) u[ij.first] = c;
  upoly::trim(u);
  if (upoly::is_zero(u) || upoly::degree(u) == 0) {
    v.reason = "constant map cannot be a bijection of [0,1]";
    return v;
  }

  Rational u0 = upoly::eval(u, Rational(0));
  Rational u1 = upoly::eval(u, Rational(1));
  if (!((u0 == 0 && u1 == 1) || (u0 == 1 && u1 == 0))) {
    v.reason = "endpoint values {u(0), u(1)} = {" + u0.str() + ", " + u1.str() + "} != {0, 1}";
    return v;
  }
  v.decreasing = u0 == 1;

  UniPoly du = upoly::derivative(u);
  int interior_roots = upoly::count_roots_open01(du);
  if (interior_roots != 0) {
    v.reason = "derivative has " + std::to_string(interior_roots) +
               " root(s) in (0,1); strict monotonicity not certified";
    return v;
  }
  v.valid = true;
  v.reason = v.decreasing ? "strictly decreasing bijection of [0,1] (endpoints swapped)"
                          : "strictly increasing bijection of [0,1]";
  return v;
}

}  // namespace qtop
