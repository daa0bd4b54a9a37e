// Acceptance suite: exercises the full stack end to end and prints one
// PASS/FAIL line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qtop/braid.hpp"
#include "qtop/io.hpp"
#include "qtop/iso.hpp"
#include "qtop/locus.hpp"
#include "qtop/perm.hpp"
#include "qtop/poly.hpp"
#include "qtop/verify.hpp"

using namespace qtop;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    pass = false;
    if (!note.empty()) note += "; ";
    note += why;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// --------------------------------------------------------------------------
// 1. Finite constructors pass exhaustive axiom checks
// --------------------------------------------------------------------------
Outcome criterion1() {
  Outcome out;
  auto t0 = Clock::now();

  for (int n = 1; n <= 24; ++n) {
    if (!check_quandle(make_trivial(n)).pass()) out.fail("trivial:" + std::to_string(n));
    if (!check_quandle(make_dihedral(n)).pass()) out.fail("dihedral:" + std::to_string(n));
    for (int t = 1; t <= n; ++t) {
      if (std::gcd(t, n) != 1) continue;
      if (!check_quandle(make_alexander(n, t)).pass()) {
        out.fail("alexander:" + std::to_string(n) + "," + std::to_string(t));
      }
    }
  }

  std::vector<GroupTable> groups;
  for (int n = 1; n <= 12; ++n) groups.push_back(GroupTable::cyclic(n));
  for (int n = 1; n <= 6; ++n) groups.push_back(GroupTable::dihedral(n));  // order 2n <= 12
  groups.push_back(GroupTable::symmetric(3));
  for (const auto& g : groups) {
    if (!check_quandle(make_conj(g)).pass()) out.fail("conj:" + g.label());
    if (!check_quandle(make_core(g)).pass()) out.fail("core:" + g.label());
  }

  double dt = seconds_since(t0);
  if (dt >= 5.0) out.fail("runtime " + std::to_string(dt) + "s >= 5s");
  out.note += (out.note.empty() ? "" : "; ") + std::to_string(dt).substr(0, 5) + "s";
  return out;
}

// --------------------------------------------------------------------------
// 2. Unit-interval quandle verified on a 101-per-axis grid
// --------------------------------------------------------------------------
Outcome criterion2() {
  Outcome out;
  auto t0 = Clock::now();
  ContinuumSpec unit{UnitInterval{}};

  auto idem = verify_idempotency(unit, 101, 1e-9);
  if (!idem.pass) out.fail("idempotency residual " + format_double(idem.max_residual));

  auto dist = verify_distributivity(unit, 101, 1e-9);
  if (!dist.pass) out.fail("distributivity residual " + format_double(dist.max_residual));
  if (dist.cases.size() != 6) {
    out.fail("expected 6 targeted case subgrids, got " + std::to_string(dist.cases.size()));
  }
  bool exchange_seen = false;
  for (const auto& c : dist.cases) {
    if (!c.pass) out.fail(c.axiom + " residual " + format_double(c.max_residual));
    if (c.axiom.find("exchange") != std::string::npos) exchange_seen = true;
  }
  if (!exchange_seen) out.fail("case-4 exchange identity was not checked");

  auto homeo = verify_homeomorphism_sweep(unit, 101, 1e-9);
  if (!homeo.pass) out.fail("homeomorphism residual " + format_double(homeo.max_residual));

  double dt = seconds_since(t0);
  if (dt >= 30.0) out.fail("runtime " + std::to_string(dt) + "s >= 30s");
  out.note += (out.note.empty() ? "" : "; ") + std::to_string(dt).substr(0, 5) + "s";
  return out;
}

// --------------------------------------------------------------------------
// 3. Interval-family locus counts and pairwise nonisomorphism
// --------------------------------------------------------------------------
Outcome criterion3() {
  Outcome out;
  std::vector<LocusReport> reports;
  for (int n = 1; n <= 8; ++n) {
    auto rep = trivial_locus(ContinuumSpec{IntervalFamily(n, 0.0, 1.0)}, 2001, 1e-9);
    if (static_cast<int>(rep.intervals.size()) != n) {
      out.fail("family n=" + std::to_string(n) + " has " +
               std::to_string(rep.intervals.size()) + " components");
    }
    reports.push_back(std::move(rep));
  }
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      if (m == n) continue;
      auto cert = nonisomorphism_certificate(reports[m - 1], reports[n - 1]);
      if (cert.verdict != CertVerdict::Nonisomorphic) {
        out.fail("certificate inconclusive for m=" + std::to_string(m) +
                 ", n=" + std::to_string(n));
      }
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// 4. Braid fixed-point counts, cross-checked independently
// --------------------------------------------------------------------------

// Independent enumerator: applies the crossing map (a,b) -> (b, 2b-a mod n)
// letter by letter over all tuples, sharing no code with the braid module.
long long dihedral_fixed_count(int n, int strands, const std::vector<int>& letters) {
  std::vector<int> tuple(strands, 0);
  long long count = 0;
  for (;;) {
    std::vector<int> im = tuple;
    for (int l : letters) {
      int s = std::abs(l) - 1;
      int a = im[s], b = im[s + 1];
      if (l > 0) {
        im[s] = b;
        im[s + 1] = ((2 * b - a) % n + n) % n;
      } else {
        im[s] = ((2 * a - b) % n + n) % n;  // solve c > a = b for the dihedral table
        im[s + 1] = a;
      }
    }
    if (im == tuple) ++count;
    int k = strands - 1;
    while (k >= 0 && ++tuple[k] == n) tuple[k--] = 0;
    if (k < 0) break;
  }
  return count;
}

Outcome criterion4() {
  Outcome out;
  struct Case {
    int n;
    std::vector<int> letters;
    long long expect;
    const char* what;
  };
  const std::vector<Case> cases = {{3, {1, 1, 1}, 9, "trefoil over R_3"},
                                   {5, {1, 1, 1}, 5, "trefoil over R_5"},
                                   {3, {1}, 3, "unknot over R_3"}};
  for (const auto& c : cases) {
    long long got = fixed_points(make_dihedral(c.n), BraidWord(2, c.letters)).count;
    long long oracle = dihedral_fixed_count(c.n, 2, c.letters);
    if (got != c.expect) {
      out.fail(std::string(c.what) + ": got " + std::to_string(got) + ", expected " +
               std::to_string(c.expect));
    }
    if (got != oracle) {
      out.fail(std::string(c.what) + ": brute-force oracle disagrees (" +
               std::to_string(oracle) + ")");
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// 5. Markov invariance over 100 random cases
// --------------------------------------------------------------------------
Outcome criterion5() {
  Outcome out;
  std::mt19937 rng(905);
  std::vector<FiniteQuandle> pool = {make_trivial(2),      make_trivial(4),
                                     make_dihedral(3),     make_dihedral(4),
                                     make_dihedral(5),     make_alexander(5, 2),
                                     make_alexander(5, 3), make_core(GroupTable::cyclic(4)),
                                     make_core(GroupTable::cyclic(5))};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& q = pool[pick(rng)];
    std::uniform_int_distribution<int> strands_d(2, 4);
    const int strands = strands_d(rng);
    std::uniform_int_distribution<int> len_d(0, 6);
    std::uniform_int_distribution<int> letter(1, strands - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    auto rand_word = [&](int len) {
      std::vector<int> ls;
      for (int i = 0; i < len; ++i) ls.push_back(letter(rng) * (sign(rng) ? 1 : -1));
      return BraidWord(strands, ls);
    };

    BraidWord w = rand_word(len_d(rng));
    const long long base = fixed_points(q, w).count;

    BraidWord alpha = rand_word(len_d(rng));
    if (fixed_points(q, alpha.concat(w).concat(alpha.inverse())).count != base) {
      out.fail("conjugation changed |J| at trial " + std::to_string(trial));
      break;
    }

    std::vector<int> stab = w.letters;
    stab.push_back(strands);
    if (fixed_points(q, BraidWord(strands + 1, stab)).count != base) {
      out.fail("stabilization changed |J| at trial " + std::to_string(trial));
      break;
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// 6. Polynomial proposition: forced trivial iff literally x
// --------------------------------------------------------------------------
Outcome criterion6() {
  Outcome out;
  std::mt19937 rng(3301);
  std::uniform_int_distribution<int> deg(0, 6);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> n_terms(1, 8);
  std::uniform_int_distribution<int> mode(0, 19);

  int false_accepts = 0, missed_trivials = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    BivariatePoly p;
    const int m = mode(rng);
    if (m < 14) {
      for (int t = n_terms(rng); t > 0; --t) {
        int i = deg(rng), j = deg(rng);
        p.set(i, j, p.coeff(i, j) + Rational(num(rng), den(rng)));
      }
    } else if (m < 17) {
      // single-variable polynomials with f(1) = 1: deep pipeline exercise
      Rational sum = 0;
      for (int t = n_terms(rng); t > 0; --t) {
        int i = deg(rng);
        Rational c(num(rng), den(rng));
        p.set(i, 0, p.coeff(i, 0) + c);
        sum += c;
      }
      p.set(1, 0, p.coeff(1, 0) + (1 - sum));
    } else if (m < 19) {
      // x + x(1-x)(y-x) q(x,y): fixes both endpoint rows and the diagonal
      BivariatePoly q;
      q.set(deg(rng) / 3, deg(rng) / 3, Rational(num(rng), den(rng)));
      p.set(1, 0, 1);
      for (const auto& [ij, c] : q.coeffs()) {
        // x(1-x)(y-x) = xy - x^2 - x^2 y + x^3, shifted by q's exponents
        p.set(ij.first + 1, ij.second + 1, p.coeff(ij.first + 1, ij.second + 1) + c);
        p.set(ij.first + 2, ij.second, p.coeff(ij.first + 2, ij.second) - c);
        p.set(ij.first + 2, ij.second + 1, p.coeff(ij.first + 2, ij.second + 1) - c);
        p.set(ij.first + 3, ij.second, p.coeff(ij.first + 3, ij.second) + c);
      }
    } else {
      p = BivariatePoly::identity_x();
    }

    const bool verdict = check_polynomial_quandle(p).forced_trivial;
    if (verdict && !p.is_x()) ++false_accepts;
    if (!verdict && p.is_x()) ++missed_trivials;
  }
  if (false_accepts > 0) out.fail(std::to_string(false_accepts) + " false accepts");
  if (missed_trivials > 0) out.fail(std::to_string(missed_trivials) + " missed trivials");
  return out;
}

// --------------------------------------------------------------------------
// 7. Chart transport reproduces the closed-form real-line quandle
// --------------------------------------------------------------------------
Outcome criterion7() {
  Outcome out;
  ContinuumSpec direct{RealLineArctan{}};
  ContinuumSpec chart = chart_arctan();
  auto xs = sample_axis(direct, 201);
  double worst = 0.0;
  for (double x : xs) {
    for (double y : xs) {
      worst = std::max(worst, std::abs(eval_raw1(chart, x, y) - eval_raw1(direct, x, y)));
    }
  }
  if (worst > 1e-9) out.fail("max deviation " + format_double(worst));
  out.note = "max deviation " + format_double(worst);
  return out;
}

// --------------------------------------------------------------------------
// 8. Ball operation: measured outcomes for both exponent rules
// --------------------------------------------------------------------------
Outcome criterion8() {
  Outcome out;

  ContinuumSpec damped{Ball(2, BallVariant::BoundaryDamped)};
  auto rd = verify_distributivity(damped, 21, 1e-9);
  if (rd.pass) {
    out.note = "boundary-damped: residual " + format_double(rd.max_residual) + " (confirmed)";
  } else {
    if (rd.witness.size() != 3) {
      out.fail("boundary-damped: no witness triple reported");
    } else {
      double again = distributivity_residual(damped, rd.witness[0], rd.witness[1], rd.witness[2]);
      if (again != rd.max_residual) {
        out.fail("boundary-damped: witness does not reproduce (" + format_double(again) +
                 " vs " + format_double(rd.max_residual) + ")");
      } else {
        std::ostringstream w;
        w << "boundary-damped: refuted with reproducible witness, residual "
          << format_double(rd.max_residual);
        out.note = w.str();
      }
    }
  }

  ContinuumSpec invariant{Ball(2, BallVariant::InvariantExponent)};
  auto ri = verify_distributivity(invariant, 21, 1e-9);
  if (!ri.pass) {
    out.fail("invariant-exponent: residual " + format_double(ri.max_residual) + " > 1e-9");
  } else {
    out.note += "; invariant-exponent: residual " + format_double(ri.max_residual);
  }
  return out;
}

// --------------------------------------------------------------------------
// 9. Right-multiplication curve CSV
// --------------------------------------------------------------------------
Outcome criterion9() {
  Outcome out;
  std::string a = curves_csv({0.1, 0.3, 0.5}, 200);
  std::string b = curves_csv({0.1, 0.3, 0.5}, 200);
  if (a != b) out.fail("CSV differs between runs");

  std::istringstream in(a);
  std::string line;
  std::getline(in, line);
  if (line != "x,epsilon,value") out.fail("bad header '" + line + "'");
  std::map<double, std::vector<double>> columns;
  while (std::getline(in, line)) {
    auto parts = detail_io::split(line, ',');
    columns[std::stod(parts[1])].push_back(std::stod(parts[2]));
  }
  if (columns.size() != 3) out.fail("expected 3 epsilon columns");
  for (const auto& [eps, vals] : columns) {
    if (vals.size() != 200) out.fail("column has " + std::to_string(vals.size()) + " samples");
    if (vals.front() != 0.0) out.fail("column does not fix 0");
    if (vals.back() != 0.5) out.fail("column does not fix 1/2");
    for (std::size_t i = 1; i < vals.size(); ++i) {
      if (!(vals[i] > vals[i - 1])) {
        out.fail("column for eps=" + format_double(eps) + " not strictly increasing");
        break;
      }
    }
  }
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Entry> criteria = {
      {"finite constructors pass exhaustive axiom checks (< 5 s)", criterion1},
      {"unit-interval quandle verified at 101/axis with proof-case subgrids (< 30 s)",
       criterion2},
      {"interval families: n locus components and pairwise nonisomorphism", criterion3},
      {"braid invariant: trefoil/unknot counts with independent cross-check", criterion4},
      {"Markov conjugation and stabilization leave |J| unchanged (100 cases)", criterion5},
      {"polynomial pipeline: forced trivial iff literally x (1000 cases)", criterion6},
      {"arctan chart transport matches the closed form at 201^2", criterion7},
      {"ball operation: boundary-damped investigated, invariant-exponent passes", criterion8},
      {"curve CSV: deterministic, monotone, fixes 0 and 1/2", criterion9},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %zu: %s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, o.note.empty() ? "" : " -- ", o.note.c_str());
    if (!o.pass) ++failures;
  }
  return failures;
}
