#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtop/group.hpp"

namespace qtop {

/// Finite rack/quandle as an n x n operation table over {0,...,n-1}.
/// Orientation: op(a, b) = a > b, so the right multiplication R_b is the
/// column map a -> op(a, b). Construction validates well-formedness only;
/// the axioms themselves are checked by check_rack / check_quandle.
class FiniteQuandle {
 public:
  FiniteQuandle(int n, std::vector<int> table, std::string label = "")
      : n_(n), table_(std::move(table)), label_(std::move(label)) {
    if (n_ <= 0) throw std::invalid_argument("FiniteQuandle: size must be positive");
    if (table_.size() != static_cast<std::size_t>(n_) * n_) {
      throw std::invalid_argument("FiniteQuandle: table must be n*n");
    }
    for (int v : table_) {
      if (v < 0 || v >= n_) throw std::invalid_argument("FiniteQuandle: entry out of range");
    }
  }

  int size() const { return n_; }
  int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  const std::string& label() const { return label_; }
  const std::vector<int>& raw_table() const { return table_; }

  /// Column permutation R_b (a -> a > b).
  std::vector<int> column(int b) const {
    std::vector<int> col(n_);
    for (int a = 0; a < n_; ++a) col[a] = op(a, b);
    return col;
  }

  bool column_is_permutation(int b) const {
    std::vector<char> seen(n_, 0);
    for (int a = 0; a < n_; ++a) {
      int v = op(a, b);
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  /// Inverse of R_b; throws if the column is not a permutation.
  std::vector<int> column_inverse(int b) const {
    std::vector<int> inv(n_, -1);
    for (int a = 0; a < n_; ++a) {
      int v = op(a, b);
      if (inv[v] != -1) {
        throw std::invalid_argument("FiniteQuandle: column " + std::to_string(b) +
                                    " is not a bijection");
      }
      inv[v] = a;
    }
    return inv;
  }

  bool operator==(const FiniteQuandle& o) const { return n_ == o.n_ && table_ == o.table_; }

 private:
  int n_;
  std::vector<int> table_;
  std::string label_;
};

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

inline FiniteQuandle make_trivial(int n) {
  if (n <= 0) throw std::invalid_argument("make_trivial: n must be positive");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = a;
  return FiniteQuandle(n, std::move(t), "trivial:" + std::to_string(n));
}

/// Dihedral quandle R_n on Z_n: i > j = 2j - i (mod n).
inline FiniteQuandle make_dihedral(int n) {
  if (n <= 0) throw std::invalid_argument("make_dihedral: n must be positive");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t[static_cast<std::size_t>(a) * n + b] = ((2 * b - a) % n + n) % n;
    }
  return FiniteQuandle(n, std::move(t), "dihedral:" + std::to_string(n));
}

/// Alexander quandle on Z_n: a > b = t*a + (1-t)*b (mod n). Requires
/// gcd(t, n) = 1 so that every right multiplication is a bijection.
inline FiniteQuandle make_alexander(int n, int t) {
  if (n <= 0) throw std::invalid_argument("make_alexander: n must be positive");
  int tm = ((t % n) + n) % n;
  if (std::gcd(tm, n) != 1) {
    throw std::invalid_argument("make_alexander: gcd(t, n) = " +
                                std::to_string(std::gcd(tm, n)) +
                                " != 1, right multiplications would not be bijective");
  }
  std::vector<int> tab(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      long long v = (static_cast<long long>(tm) * a + static_cast<long long>(1 - tm) * b) % n;
      tab[static_cast<std::size_t>(a) * n + b] = static_cast<int>((v + n) % n);
    }
  return FiniteQuandle(n, std::move(tab),
                       "alexander:" + std::to_string(n) + "," + std::to_string(t));
}

/// Conjugation quandle on a group: a > b = b^-1 a b.
inline FiniteQuandle make_conj(const GroupTable& g) {
  const int n = g.size();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t[static_cast<std::size_t>(a) * n + b] = g.mul(g.mul(g.inv(b), a), b);
    }
  return FiniteQuandle(n, std::move(t), "conj:" + g.label());
}

/// Core quandle on a group: a > b = b a^-1 b.
inline FiniteQuandle make_core(const GroupTable& g) {
  const int n = g.size();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t[static_cast<std::size_t>(a) * n + b] = g.mul(g.mul(b, g.inv(a)), b);
    }
  return FiniteQuandle(n, std::move(t), "core:" + g.label());
}

// ---------------------------------------------------------------------------
// Axiom checks
// ---------------------------------------------------------------------------

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::optional<std::array<int, 3>> witness;  // first violating triple
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const AxiomCheck* find(const std::string& axiom) const {
    for (const auto& c : checks)
      if (c.axiom == axiom) return &c;
    return nullptr;
  }
};

/// Axiom II (every column is a permutation) and axiom III (right
/// self-distributivity), exhaustive over all n^3 triples.
inline AxiomReport check_rack(const FiniteQuandle& q) {
  const int n = q.size();
  AxiomReport report;

  AxiomCheck ii{"II (right multiplications bijective)", true, std::nullopt, ""};
  for (int b = 0; b < n && ii.pass; ++b) {
    std::vector<int> first(n, -1);
    for (int a = 0; a < n; ++a) {
      int v = q.op(a, b);
      if (first[v] != -1) {
        ii.pass = false;
        ii.witness = {{first[v], a, b}};
        ii.detail = std::to_string(first[v]) + ">" + std::to_string(b) + " = " +
                    std::to_string(a) + ">" + std::to_string(b) + " = " + std::to_string(v);
        break;
      }
      first[v] = a;
    }
  }
  report.checks.push_back(ii);

  AxiomCheck iii{"III (right self-distributivity)", true, std::nullopt, ""};
  for (int a = 0; a < n && iii.pass; ++a)
    for (int b = 0; b < n && iii.pass; ++b)
      for (int c = 0; c < n; ++c) {
        int lhs = q.op(q.op(a, b), c);
        int rhs = q.op(q.op(a, c), q.op(b, c));
        if (lhs != rhs) {
          iii.pass = false;
          iii.witness = {{a, b, c}};
          iii.detail = "(a>b)>c = " + std::to_string(lhs) + " but (a>c)>(b>c) = " +
                       std::to_string(rhs);
          break;
        }
      }
  report.checks.push_back(iii);
  return report;
}

/// check_rack plus axiom I (idempotency of the diagonal).
inline AxiomReport check_quandle(const FiniteQuandle& q) {
  AxiomReport report;
  AxiomCheck i{"I (idempotency)", true, std::nullopt, ""};
  for (int a = 0; a < q.size(); ++a) {
    if (q.op(a, a) != a) {
      i.pass = false;
      i.witness = {{a, a, a}};
      i.detail = "a>a = " + std::to_string(q.op(a, a)) + " for a = " + std::to_string(a);
      break;
    }
  }
  report.checks.push_back(i);
  AxiomReport rack = check_rack(q);
  for (auto& c : rack.checks) report.checks.push_back(std::move(c));
  return report;
}

}  // namespace qtop
