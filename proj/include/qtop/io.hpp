#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtop/braid.hpp"
#include "qtop/continuum.hpp"
#include "qtop/finite.hpp"
#include "qtop/group.hpp"
#include "qtop/iso.hpp"
#include "qtop/locus.hpp"
#include "qtop/perm.hpp"
#include "qtop/poly.hpp"
#include "qtop/verify.hpp"

namespace qtop {

using nlohmann::json;

/// Shortest representation that round-trips the double exactly.
inline std::string format_double(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

namespace detail_io {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline double parse_double(const std::string& s) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("expected a number, got '" + s + "'");
  }
}

inline int parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("expected an integer, got '" + s + "'");
  }
}

}  // namespace detail_io

// ---------------------------------------------------------------------------
// Finite quandles: {"n": int, "table": [[int,...],...], "label": string}
// ---------------------------------------------------------------------------

inline json to_json(const FiniteQuandle& q) {
  json table = json::array();
  for (int a = 0; a < q.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < q.size(); ++b) row.push_back(q.op(a, b));
    table.push_back(std::move(row));
  }
  return json{{"n", q.size()}, {"table", std::move(table)}, {"label", q.label()}};
}

inline FiniteQuandle quandle_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("table")) {
    throw std::invalid_argument("quandle JSON must be {\"n\", \"table\", \"label\"}");
  }
  int n = j.at("n").get<int>();
  const json& table = j.at("table");
  if (!table.is_array() || static_cast<int>(table.size()) != n) {
    throw std::invalid_argument("quandle JSON: table must have n rows");
  }
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : table) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("quandle JSON: each row must have n entries");
    }
    for (const auto& v : row) flat.push_back(v.get<int>());
  }
  std::string label = j.value("label", "");
  return FiniteQuandle(n, std::move(flat), std::move(label));
}

/// Quandle spec strings: trivial:N | dihedral:N | alexander:N,T |
/// conj:GROUP | core:GROUP | path.json, with GROUP one of zN, dN, sN.
inline GroupTable parse_group_string(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("unknown group '" + s + "'");
  int n = detail_io::parse_int(s.substr(1));
  switch (s[0]) {
    case 'z':
      return GroupTable::cyclic(n);
    case 'd':
      return GroupTable::dihedral(n);
    case 's':
      return GroupTable::symmetric(n);
    default:
      throw std::invalid_argument("unknown group '" + s + "' (expected zN, dN or sN)");
  }
}

inline FiniteQuandle parse_quandle_string(const std::string& s) {
  if (s.size() > 5 && s.substr(s.size() - 5) == ".json") {
    std::ifstream in(s);
    if (!in) throw std::invalid_argument("cannot open quandle file '" + s + "'");
    json j;
    in >> j;
    return quandle_from_json(j);
  }
  auto parts = detail_io::split(s, ':');
  const std::string& kind = parts[0];
  if (kind == "trivial" && parts.size() == 2) {
    return make_trivial(detail_io::parse_int(parts[1]));
  }
  if (kind == "dihedral" && parts.size() == 2) {
    return make_dihedral(detail_io::parse_int(parts[1]));
  }
  if (kind == "alexander" && parts.size() == 2) {
    auto args = detail_io::split(parts[1], ',');
    if (args.size() != 2) throw std::invalid_argument("alexander:N,T expects two parameters");
    return make_alexander(detail_io::parse_int(args[0]), detail_io::parse_int(args[1]));
  }
  if (kind == "conj" && parts.size() == 2) return make_conj(parse_group_string(parts[1]));
  if (kind == "core" && parts.size() == 2) return make_core(parse_group_string(parts[1]));
  throw std::invalid_argument("unknown quandle '" + s + "'");
}

// ---------------------------------------------------------------------------
// Continuum specs
// ---------------------------------------------------------------------------

inline std::string ball_variant_name(BallVariant v) {
  return v == BallVariant::BoundaryDamped ? "boundary_damped" : "invariant_exponent";
}

inline BallVariant ball_variant_from_name(const std::string& s) {
  if (s == "boundary_damped" || s == "damped") return BallVariant::BoundaryDamped;
  if (s == "invariant_exponent" || s == "invariant") return BallVariant::InvariantExponent;
  throw std::invalid_argument("unknown ball variant '" + s + "'");
}

inline json spec_to_json(const ContinuumSpec& s) {
  return std::visit(
      [](const auto& spec) -> json {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, UnitInterval>) {
          return json{{"type", "unit_interval"}};
        } else if constexpr (std::is_same_v<T, ClosedInterval>) {
          if (spec.exponent) {
            throw std::invalid_argument(
                "spec_to_json: custom interval exponents are not serializable");
          }
          return json{{"type", "interval"}, {"a", spec.a}, {"b", spec.b}};
        } else if constexpr (std::is_same_v<T, OpenInterval>) {
          return json{{"type", "open_interval"}};
        } else if constexpr (std::is_same_v<T, Ball>) {
          return json{{"type", "ball"},
                      {"dim", spec.dim},
                      {"variant", ball_variant_name(spec.variant)},
                      {"center", spec.center},
                      {"radius", spec.radius}};
        } else if constexpr (std::is_same_v<T, IntervalFamily>) {
          return json{{"type", "interval_family"}, {"n", spec.n}, {"a", spec.a}, {"b", spec.b}};
        } else if constexpr (std::is_same_v<T, BallFamily>) {
          return json{{"type", "ball_family"},
                      {"n", spec.n},
                      {"dim", spec.dim},
                      {"variant", ball_variant_name(spec.variant)}};
        } else if constexpr (std::is_same_v<T, AffineLine>) {
          return json{{"type", "affine_line"}, {"t", spec.t}};
        } else if constexpr (std::is_same_v<T, RealLineArctan>) {
          return json{{"type", "real_line_arctan"}};
        } else {
          if (spec.chart_name.empty()) {
            throw std::invalid_argument("spec_to_json: custom charts are not serializable");
          }
          return json{{"type", "chart"}, {"chart", spec.chart_name}};
        }
      },
      s.v);
}

inline ContinuumSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type")) {
    throw std::invalid_argument("spec JSON must be an object with a \"type\"");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "unit_interval") return ContinuumSpec(UnitInterval{});
  if (type == "interval") {
    return ContinuumSpec(ClosedInterval(j.at("a").get<double>(), j.at("b").get<double>()));
  }
  if (type == "open_interval") return ContinuumSpec(OpenInterval{});
  if (type == "ball") {
    Point center = j.value("center", Point{});
    double radius = j.value("radius", 1.0);
    return ContinuumSpec(Ball(j.at("dim").get<int>(),
                              ball_variant_from_name(j.at("variant").get<std::string>()),
                              std::move(center), radius));
  }
  if (type == "interval_family") {
    return ContinuumSpec(
        IntervalFamily(j.at("n").get<int>(), j.at("a").get<double>(), j.at("b").get<double>()));
  }
  if (type == "ball_family") {
    BallVariant v = j.contains("variant")
                        ? ball_variant_from_name(j.at("variant").get<std::string>())
                        : BallVariant::BoundaryDamped;
    return ContinuumSpec(BallFamily(j.at("n").get<int>(), j.at("dim").get<int>(), v));
  }
  if (type == "affine_line") return ContinuumSpec(AffineLine(j.at("t").get<double>()));
  if (type == "real_line_arctan") return ContinuumSpec(RealLineArctan{});
  if (type == "chart") {
    const std::string chart = j.at("chart").get<std::string>();
    if (chart == "arctan") return chart_arctan();
    throw std::invalid_argument("unknown chart '" + chart + "'");
  }
  throw std::invalid_argument("unknown spec type '" + type + "'");
}

/// CLI spec strings: unit-interval | interval:a,b | open-interval |
/// ball:DIM,VARIANT | family:N[,a,b] | ball-family:N,DIM[,VARIANT] |
/// affine:T | arctan-line | chart-arctan | path.json.
inline ContinuumSpec parse_spec_string(const std::string& s) {
  using namespace detail_io;
  if (s.size() > 5 && s.substr(s.size() - 5) == ".json") {
    std::ifstream in(s);
    if (!in) throw std::invalid_argument("cannot open spec file '" + s + "'");
    json j;
    in >> j;
    return spec_from_json(j);
  }
  auto parts = split(s, ':');
  const std::string& kind = parts[0];
  std::vector<std::string> args;
  if (parts.size() == 2) args = split(parts[1], ',');
  if (parts.size() > 2) throw std::invalid_argument("malformed spec '" + s + "'");

  if (kind == "unit-interval" && args.empty()) return ContinuumSpec(UnitInterval{});
  if (kind == "interval" && args.size() == 2) {
    return ContinuumSpec(ClosedInterval(parse_double(args[0]), parse_double(args[1])));
  }
  if (kind == "open-interval" && args.empty()) return ContinuumSpec(OpenInterval{});
  if (kind == "ball" && (args.size() == 1 || args.size() == 2)) {
    BallVariant v = args.size() == 2 ? ball_variant_from_name(args[1])
                                     : BallVariant::BoundaryDamped;
    return ContinuumSpec(Ball(parse_int(args[0]), v));
  }
  if (kind == "family" && (args.size() == 1 || args.size() == 3)) {
    double a = args.size() == 3 ? parse_double(args[1]) : 0.0;
    double b = args.size() == 3 ? parse_double(args[2]) : 1.0;
    return ContinuumSpec(IntervalFamily(parse_int(args[0]), a, b));
  }
  if (kind == "ball-family" && (args.size() == 2 || args.size() == 3)) {
    BallVariant v = args.size() == 3 ? ball_variant_from_name(args[2])
                                     : BallVariant::BoundaryDamped;
    return ContinuumSpec(BallFamily(parse_int(args[0]), parse_int(args[1]), v));
  }
  if (kind == "affine" && args.size() == 1) {
    return ContinuumSpec(AffineLine(parse_double(args[0])));
  }
  if (kind == "arctan-line" && args.empty()) return ContinuumSpec(RealLineArctan{});
  if (kind == "chart-arctan" && args.empty()) return chart_arctan();
  throw std::invalid_argument("unknown spec '" + s + "'");
}

// ---------------------------------------------------------------------------
// Polynomials: [{"i": int, "j": int, "num": int, "den": int}, ...]
// ---------------------------------------------------------------------------

inline BivariatePoly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  auto as_bigint = [](const json& v) -> boost::multiprecision::cpp_int {
    if (v.is_number_integer()) return boost::multiprecision::cpp_int(v.get<std::int64_t>());
    if (v.is_string()) return boost::multiprecision::cpp_int(v.get<std::string>());
    throw std::invalid_argument("polynomial num/den must be integers or integer strings");
  };
  BivariatePoly p;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("i") || !term.contains("j") ||
        !term.contains("num") || !term.contains("den")) {
      throw std::invalid_argument("polynomial term must be {\"i\",\"j\",\"num\",\"den\"}");
    }
    auto den = as_bigint(term.at("den"));
    if (den == 0) throw std::invalid_argument("polynomial term with zero denominator");
    Rational c(as_bigint(term.at("num")), den);
    const int i = term.at("i").get<int>();
    const int jj = term.at("j").get<int>();
    p.set(i, jj, p.coeff(i, jj) + c);  // duplicate cells accumulate
  }
  return p;
}

inline json poly_to_json(const BivariatePoly& p) {
  json out = json::array();
  for (const auto& [ij, c] : p.coeffs()) {
    out.push_back(json{{"i", ij.first},
                       {"j", ij.second},
                       {"num", boost::multiprecision::numerator(c).str()},
                       {"den", boost::multiprecision::denominator(c).str()}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline json point_to_json(const Point& p) {
  if (p.size() == 1) return json(p[0]);
  return json(p);
}

inline Point point_from_json(const json& j) {
  if (j.is_number()) return Point{j.get<double>()};
  return j.get<Point>();
}

inline json to_json(const VerificationReport& r) {
  json out{{"axiom", r.axiom},          {"grid", r.grid},
           {"tolerance", r.tolerance},  {"max_residual", r.max_residual},
           {"pass", r.pass}};
  json w = json::array();
  for (const auto& p : r.witness) w.push_back(point_to_json(p));
  out["witness"] = std::move(w);
  if (!r.cases.empty()) {
    json cs = json::array();
    for (const auto& c : r.cases) cs.push_back(to_json(c));
    out["cases"] = std::move(cs);
  }
  return out;
}

inline json to_json(const LocusReport& r) {
  json intervals = json::array();
  for (const auto& iv : r.intervals) intervals.push_back(json{{"lo", iv.lo}, {"hi", iv.hi}});
  json out{{"domain", r.domain},
           {"grid", r.grid},
           {"tolerance", r.tol},
           {"intervals", std::move(intervals)},
           {"isolated_points", r.isolated},
           {"covers_domain", r.covers_domain}};
  if (r.nontrivial_components >= 0) out["nontrivial_components"] = r.nontrivial_components;
  return out;
}

inline json to_json(const Certificate& c) {
  return json{{"verdict", c.verdict == CertVerdict::Nonisomorphic ? "nonisomorphic"
                                                                  : "inconclusive"},
              {"components", json::array({c.components1, c.components2})},
              {"covers_domain", json::array({c.covers1, c.covers2})},
              {"reason", c.reason}};
}

inline json to_json(const AxiomReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc{{"axiom", c.axiom}, {"pass", c.pass}};
    if (c.witness) jc["witness"] = json::array({(*c.witness)[0], (*c.witness)[1], (*c.witness)[2]});
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  return json{{"pass", r.pass()}, {"checks", std::move(checks)}};
}

inline json to_json(const PermGroupSummary& s) {
  return json{{"order", s.order}, {"orbits", s.orbits}};
}

inline json to_json(const FixedPointSet& f) {
  json out{{"count", f.count}};
  if (f.tuples_complete) out["tuples"] = f.tuples;
  return out;
}

inline json to_json(const QuandleVerdict& v) {
  json out{{"forced_trivial", v.forced_trivial}, {"trace", v.trace}};
  if (!v.forced_trivial) {
    out["failed_step"] = v.failed_step;
    out["violation"] = v.violation;
  }
  return out;
}

inline json to_json(const RackVerdict& v) {
  return json{{"valid", v.valid}, {"decreasing", v.decreasing}, {"reason", v.reason}};
}

// ---------------------------------------------------------------------------
// Right-multiplication curve CSV
// ---------------------------------------------------------------------------

/// CSV of the unit-interval right-multiplication curves x -> (1/2)(2x)^(1+eps)
/// sampled on [0, 1/2]. Columns x,epsilon,value; rows ordered
/// lexicographically by (x, epsilon); LF line endings; '.' decimals.
inline std::string curves_csv(std::vector<double> epsilons, int samples) {
  if (samples < 2) throw std::invalid_argument("curves_csv: need at least 2 samples");
  if (epsilons.empty()) throw std::invalid_argument("curves_csv: need at least one epsilon");
  for (double e : epsilons) {
    if (!(e > 0.0 && e <= 0.5)) {
      throw std::invalid_argument("curves_csv: epsilon must lie in (0, 0.5], got " +
                                  format_double(e));
    }
  }
  std::sort(epsilons.begin(), epsilons.end());
  ContinuumSpec unit{UnitInterval{}};
  std::string out = "x,epsilon,value\n";
  for (int i = 0; i < samples; ++i) {
    double x = 0.5 * i / (samples - 1);
    for (double eps : epsilons) {
      double value = eval_raw1(unit, x, 0.5 + eps);
      out += format_double(x);
      out += ',';
      out += format_double(eps);
      out += ',';
      out += format_double(value);
      out += '\n';
    }
  }
  return out;
}

}  // namespace qtop
