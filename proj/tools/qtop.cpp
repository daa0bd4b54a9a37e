// qtop: construct quandles, verify their axioms exactly (finite) or on grids
// (continuum), analyze trivial loci, count braid-action fixed points, check
// polynomial candidates, and emit right-multiplication curve data.
//
// Exit codes: 0 success, 1 verification finding, 2 usage/input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qtop/io.hpp"

namespace {

using qtop::json;

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write to '" + out_path + "'");
    f << text;
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write to '" + out_path + "'");
    f << text;
  }
}

std::vector<int> parse_word(const std::string& csv) {
  std::vector<int> letters;
  for (const auto& part : qtop::detail_io::split(csv, ',')) {
    letters.push_back(qtop::detail_io::parse_int(part));
  }
  return letters;
}

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> vals;
  for (const auto& part : qtop::detail_io::split(csv, ',')) {
    vals.push_back(qtop::detail_io::parse_double(part));
  }
  return vals;
}

int run_finite(const std::string& quandle_str, const std::string& iso_str,
               const std::string& out_path) {
  qtop::FiniteQuandle q = qtop::parse_quandle_string(quandle_str);
  qtop::AxiomReport report = qtop::check_quandle(q);
  json out{{"label", q.label()}, {"n", q.size()}, {"quandle_check", qtop::to_json(report)}};

  const auto* axiom_ii = report.find("II (right multiplications bijective)");
  if (axiom_ii && axiom_ii->pass) {
    auto inner = qtop::inner_group(q);
    out["inner_group"] = qtop::to_json(inner);
    out["connected"] = inner.orbits.size() == 1;
  }
  if (!iso_str.empty()) {
    qtop::FiniteQuandle other = qtop::parse_quandle_string(iso_str);
    auto iso = qtop::are_isomorphic(q, other);
    json jiso{{"other", other.label()}};
    switch (iso.status) {
      case qtop::IsoStatus::Isomorphic:
        jiso["status"] = "isomorphic";
        jiso["bijection"] = *iso.map;
        break;
      case qtop::IsoStatus::NotIsomorphic:
        jiso["status"] = "not_isomorphic";
        break;
      case qtop::IsoStatus::BoundExceeded:
        jiso["status"] = "bound_exceeded";
        break;
    }
    out["isomorphism"] = std::move(jiso);
  }
  emit(out, out_path);
  return report.pass() ? 0 : 1;
}

int run_verify(const std::string& spec_str, int grid, double tol, const std::string& out_path) {
  qtop::ContinuumSpec spec = qtop::parse_spec_string(spec_str);
  std::vector<qtop::VerificationReport> reports;
  reports.push_back(qtop::verify_idempotency(spec, grid, tol));
  reports.push_back(qtop::verify_distributivity(spec, grid, tol));
  reports.push_back(qtop::verify_homeomorphism_sweep(spec, grid, tol));

  bool pass = true;
  json jr = json::array();
  for (const auto& r : reports) {
    pass = pass && r.all_pass();
    jr.push_back(qtop::to_json(r));
  }
  json out{{"spec", qtop::spec_label(spec)},
           {"grid", grid},
           {"tolerance", tol},
           {"pass", pass},
           {"reports", std::move(jr)}};
  emit(out, out_path);
  return pass ? 0 : 1;
}

int run_locus(std::string spec_str, int family_n, const std::string& versus_str, int grid,
              double tol, const std::string& out_path) {
  if (spec_str.empty() && family_n <= 0) {
    throw std::invalid_argument("locus: provide --spec or --family-n");
  }
  if (!spec_str.empty() && family_n > 0) {
    throw std::invalid_argument("locus: --spec and --family-n are mutually exclusive");
  }
  if (family_n > 0) spec_str = "family:" + std::to_string(family_n);
  qtop::ContinuumSpec spec = qtop::parse_spec_string(spec_str);
  qtop::LocusReport report = qtop::trivial_locus(spec, grid, tol);
  json out{{"locus", qtop::to_json(report)}};
  if (!versus_str.empty()) {
    qtop::ContinuumSpec other = qtop::parse_spec_string(versus_str);
    qtop::LocusReport other_report = qtop::trivial_locus(other, grid, tol);
    out["versus_locus"] = qtop::to_json(other_report);
    out["certificate"] = qtop::to_json(qtop::nonisomorphism_certificate(report, other_report));
  }
  emit(out, out_path);
  return 0;
}

int run_braid(const std::string& quandle_str, int strands, const std::string& word_csv,
              long long bound, int tuple_cap, const std::string& out_path) {
  qtop::FiniteQuandle q = qtop::parse_quandle_string(quandle_str);
  qtop::BraidWord w(strands, parse_word(word_csv));
  qtop::FixedPointSet fixed =
      qtop::fixed_points(q, w, bound, static_cast<std::size_t>(tuple_cap));
  json out = qtop::to_json(fixed);
  out["quandle"] = q.label();
  out["strands"] = strands;
  out["word"] = w.letters;
  emit(out, out_path);
  return 0;
}

int run_poly(const std::string& in_path, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw std::invalid_argument("cannot open polynomial file '" + in_path + "'");
  json j;
  in >> j;
  qtop::BivariatePoly p = qtop::poly_from_json(j);
  json out{{"polynomial", qtop::poly_to_json(p)},
           {"quandle", qtop::to_json(qtop::check_polynomial_quandle(p))},
           {"rack", qtop::to_json(qtop::check_polynomial_rack(p))}};
  emit(out, out_path);
  return 0;
}

int run_curves(const std::string& epsilons_csv, int samples, const std::string& out_path) {
  emit_text(qtop::curves_csv(parse_doubles(epsilons_csv), samples), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quandle constructions on finite carriers, intervals, balls and charts"};
  app.require_subcommand(1);

  std::string quandle_str, iso_str, out_path;
  auto* finite = app.add_subcommand("finite", "construct a finite quandle and check its axioms");
  finite->add_option("--quandle", quandle_str,
                     "trivial:N | dihedral:N | alexander:N,T | conj:G | core:G | file.json")
      ->required();
  finite->add_option("--iso", iso_str, "second quandle to test for isomorphism");
  finite->add_option("--out", out_path, "write JSON report to file");

  std::string spec_str;
  int grid = 101;
  double tol = 1e-9;
  auto* verify = app.add_subcommand("verify", "grid-verify the axioms of a continuum quandle");
  verify->add_option("--spec", spec_str, "continuum spec (e.g. unit-interval, ball:2,damped)")
      ->required();
  verify->add_option("--grid", grid, "points per axis (default 101)");
  verify->add_option("--tol", tol, "residual tolerance (default 1e-9)");
  verify->add_option("--out", out_path, "write JSON report to file");

  std::string locus_spec, versus_str;
  int family_n = 0;
  int locus_grid = 2001;
  double locus_tol = 1e-9;
  auto* locus = app.add_subcommand("locus", "trivial-locus analysis and nonisomorphism certificate");
  locus->add_option("--spec", locus_spec, "continuum spec");
  locus->add_option("--family-n", family_n, "shorthand for --spec family:N on [0,1]");
  locus->add_option("--versus", versus_str, "second spec; adds a nonisomorphism certificate");
  locus->add_option("--grid", locus_grid, "points per axis (default 2001)");
  locus->add_option("--tol", locus_tol, "triviality tolerance (default 1e-9)");
  locus->add_option("--out", out_path, "write JSON report to file");

  std::string braid_quandle, word_csv;
  int strands = 2;
  long long bound = 10000000;
  int tuple_cap = 512;
  auto* braid = app.add_subcommand("braid", "fixed points of a braid word acting on tuples");
  braid->add_option("--quandle", braid_quandle, "finite quandle (same syntax as finite)")
      ->required();
  braid->add_option("--strands", strands, "strand count")->required();
  braid->add_option("--word", word_csv, "comma-separated signed generator indices, e.g. 1,1,1")
      ->required();
  braid->add_option("--bound", bound, "refuse enumeration beyond |Q|^strands > bound");
  braid->add_option("--tuple-cap", tuple_cap, "suppress tuple list above this count");
  braid->add_option("--out", out_path, "write JSON report to file");

  std::string poly_path;
  auto* poly = app.add_subcommand("poly", "check a rational bivariate polynomial");
  poly->add_option("input", poly_path, "JSON file: [{\"i\",\"j\",\"num\",\"den\"},...]")
      ->required();
  poly->add_option("--out", out_path, "write JSON report to file");

  std::string epsilons_csv = "0.1,0.3,0.5";
  int samples = 200;
  auto* curves = app.add_subcommand("curves", "CSV of right-multiplication curves on [0,1/2]");
  curves->add_option("--epsilons", epsilons_csv, "comma-separated epsilon values in (0, 0.5]");
  curves->add_option("--samples", samples, "sample count per curve (default 200)");
  curves->add_option("--out", out_path, "write CSV to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (finite->parsed()) return run_finite(quandle_str, iso_str, out_path);
    if (verify->parsed()) return run_verify(spec_str, grid, tol, out_path);
    if (locus->parsed()) {
      return run_locus(locus_spec, family_n, versus_str, locus_grid, locus_tol, out_path);
    }
    if (braid->parsed()) {
      return run_braid(braid_quandle, strands, word_csv, bound, tuple_cap, out_path);
    }
    if (poly->parsed()) return run_poly(poly_path, out_path);
    if (curves->parsed()) return run_curves(epsilons_csv, samples, out_path);
  } catch (const qtop::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
