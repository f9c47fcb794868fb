// Copyright 2026 The symsect Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "symsect/busemann.hpp"
#include "symsect/chessboard.hpp"
#include "symsect/projections.hpp"
#include "symsect/rademacher.hpp"
#include "symsect/representation.hpp"
#include "symsect/sections.hpp"
#include "verify.hpp"

namespace symsect::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string join(std::span<const double> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i]);
  return s;
}

std::string join(std::span<const Rational> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

Json rationals_json(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

struct ParsedVector {
  std::vector<double> values;
  RationalVector exact;
  /// True when some entry was written as num/den.
  bool rational = false;
};

ParsedVector parse_vector(const std::string& text, const std::string& what) {
  ParsedVector pv;
  for (const auto& tok : split(text, ',')) {
    if (tok.empty()) throw UsageError(what + ": empty entry in '" + text + "'");
    try {
      pv.exact.push_back(parse_rational(tok));
    } catch (const std::exception&) {
      throw UsageError(what + ": cannot parse '" + tok + "'");
    }
    if (tok.find('/') != std::string::npos) {
      pv.rational = true;
      pv.values.push_back(to_double(pv.exact.back()));
    } else {
      pv.values.push_back(std::strtod(tok.c_str(), nullptr));
    }
  }
  if (pv.values.empty()) throw UsageError(what + ": empty vector");
  return pv;
}

Json exact_number(const Rational& r) { return Json{{"value", to_double(r)}, {"mode", "exact"}, {"exact", to_string(r)}}; }
Json float_number(double v) { return Json{{"value", v}, {"mode", "float"}}; }
Json mc_number(double v, double se, std::uint64_t seed, std::int64_t samples) {
  return Json{{"value", v}, {"mode", "mc"}, {"std_error", se}, {"seed", seed}, {"samples", samples}};
}

Json evaluation_json(const Evaluation& e, bool exact_input, const McPolicy& policy) {
  if (e.mode == SectionMode::MonteCarlo) return mc_number(e.value, e.std_error, policy.seed, policy.samples);
  if (exact_input && e.exact) return exact_number(*e.exact);
  return float_number(e.value);
}

std::string plain_evaluation(const Evaluation& e, bool exact_input, std::uint64_t seed) {
  if (e.mode == SectionMode::MonteCarlo) {
    return fmt(e.value) + " +- " + fmt(e.std_error) + " (mc, seed " + std::to_string(seed) + ")";
  }
  if (exact_input && e.exact) return to_string(*e.exact);
  return fmt(e.value);
}

struct Options {
  std::string format = "plain";
  std::optional<std::uint64_t> seed;
  std::string body = "cube";
  std::string region = "unit";
  double body_p = 2.0;
  std::optional<std::size_t> n;
  std::int64_t samples = 0;
  double slab = 0.01;
  std::string method = "auto";
  std::string vec;
  std::string vectors;
  std::string laws;
  double p = 1.0;
  bool exact = false;
  int trials = 0;
  std::size_t min_dim = 1;
  std::size_t max_dim = 8;
  std::optional<double> tolerance;
  std::size_t N = 1;
  std::string offset = "0";
  std::string sizes;
  std::string strategy = "all";
  std::string function = "phi";
  std::string box;
  double q = 1.0;
  bool no_hessian = false;
  std::string set_file;
  std::vector<int> only;
};

struct Result {
  Json json;
  std::string plain;
  std::optional<std::string> csv;
  int code = kExitOk;
};

std::uint64_t need_seed(const Options& o, const std::string& cmd) {
  if (!o.seed) throw UsageError(cmd + ": this command is stochastic and needs an explicit --seed");
  return *o.seed;
}

Body make_body(const std::string& name, double p, std::size_t n) {
  if (name == "cube") return Body::cube(n);
  if (name == "cross") return Body::cross_polytope(n);
  if (name == "lp") return Body::lp_ball(n, p);
  throw UsageError("unknown body '" + name + "'");
}

Body make_body(const Options& o, std::size_t n) { return make_body(o.body, o.body_p, n); }

std::string resolved_method(const Options& o) {
  if (o.method != "auto") return o.method;
  return o.body == "cube" ? "exact" : "mc";
}

/// Backend for norm, V, beta and suites; the Monte Carlo dimension is `n`.
SectionBackend make_backend(const Options& o, std::size_t n, const std::string& cmd, McPolicy& policy) {
  const std::string method = resolved_method(o);
  if (method == "exact") {
    if (o.body != "cube") throw UsageError(cmd + ": exact mode is available for --body cube only");
    return SectionBackend::exact_cube();
  }
  if (method != "mc") throw UsageError(cmd + ": --method must be auto, exact or mc");
  policy.samples = o.samples > 0 ? o.samples : 200000;
  policy.slab_halfwidth = o.slab;
  policy.seed = need_seed(o, cmd);
  return SectionBackend::monte_carlo(make_body(o, n), policy);
}

Box parse_box(const std::string& text, std::size_t n, double lo, double hi) {
  if (!text.empty()) {
    const auto v = parse_vector(text, "--box").values;
    if (v.size() != 2) throw UsageError("--box expects lo,hi");
    lo = v[0];
    hi = v[1];
  }
  return Box::cube(n, lo, hi);
}

std::size_t need_n(const Options& o, const std::string& cmd) {
  if (!o.n) throw UsageError(cmd + ": --n is required");
  return *o.n;
}

// Commands.

Result section_volume(const Options& o) {
  const auto a = parse_vector(o.vec, "--a");
  const std::size_t n = a.values.size();
  std::string method = o.method == "auto" ? (o.body == "cube" ? "exact" : "mc") : o.method;
  Result r;
  r.json = Json{{"command", "section-volume"}, {"body", make_body(o, n).name()}, {"a", a.values}};
  if (method == "exact") {
    if (o.body != "cube") throw UsageError("section-volume: exact mode is available for --body cube only");
    if (a.rational) {
      const double v = cube_section_volume(std::span<const Rational>(a.exact));
      r.json["section"] = {{"value", v}, {"mode", "exact"}, {"exact_squared", to_string(cube_section_volume_squared(a.exact))}};
      r.plain = fmt(v);
    } else {
      const double v = cube_section_volume(CoeffVector(a.values));
      r.json["section"] = float_number(v);
      r.plain = fmt(v);
    }
    return r;
  }
  const std::uint64_t seed = need_seed(o, "section-volume");
  EstimateWithCI e;
  if (method == "mc") {
    e = mc_section_volume(make_body(o, n), CoeffVector(a.values), o.slab, o.samples > 0 ? o.samples : 200000, seed);
  } else if (method == "sphere") {
    if (o.body != "cube") throw UsageError("section-volume: --method sphere computes cube sections only");
    double len = 0.0;
    for (double c : a.values) len += c * c;
    len = std::sqrt(len);
    if (!(len > 0.0)) throw UsageError("section-volume: direction must be nonzero");
    std::vector<double> unit(a.values);
    for (auto& c : unit) c /= len;
    e = sphere_sum_negative_moment(CoeffVector(unit), 1.0, o.samples > 0 ? o.samples : 1000000, seed);
  } else {
    throw UsageError("section-volume: --method must be auto, exact, mc or sphere");
  }
  r.json["method"] = method;
  r.json["section"] = mc_number(e.value, e.std_error, seed, e.samples);
  r.plain = fmt(e.value) + " +- " + fmt(e.std_error) + " (mc, seed " + std::to_string(seed) + ")";
  return r;
}

Result norm_or_v(const Options& o, bool norm) {
  const std::string cmd = norm ? "busemann-norm" : "v";
  const auto x = parse_vector(o.vec, norm ? "--x" : "--a");
  McPolicy policy;
  const auto backend = make_backend(o, x.values.size(), cmd, policy);
  Evaluation e;
  if (backend.mode() == SectionMode::Exact && x.rational) {
    const Rational v = norm ? cube_busemann_norm(x.exact) : cube_v_functional(x.exact);
    e = Evaluation{to_double(v), 0.0, SectionMode::Exact, v};
  } else {
    e = norm ? busemann_norm(backend, CoeffVector(x.values)) : v_functional(backend, CoeffVector(x.values));
  }
  Result r;
  r.json = Json{{"command", cmd}, {"backend", backend.name()}, {norm ? "x" : "a", x.values},
                {norm ? "norm" : "v", evaluation_json(e, x.rational, policy)}};
  r.plain = plain_evaluation(e, x.rational, policy.seed);
  return r;
}

Result beta_cmd(const Options& o) {
  const std::size_t n = need_n(o, "beta");
  McPolicy policy;
  const auto backend = make_backend(o, n, "beta", policy);
  const auto e = beta(backend, n);
  Result r;
  r.json = Json{{"command", "beta"}, {"backend", backend.name()}, {"n", n}, {"beta", evaluation_json(e, true, policy)}};
  r.plain = e.mode == SectionMode::Exact ? fmt(e.value) : plain_evaluation(e, false, policy.seed);
  return r;
}

Result suite_cmd(const Options& o, const std::string& cmd) {
  SuiteOptions opt;
  opt.seed = need_seed(o, cmd);
  opt.min_dim = o.min_dim;
  opt.max_dim = o.max_dim;
  if (o.tolerance) opt.tolerance = *o.tolerance;
  opt.trials = o.trials > 0 ? o.trials : (cmd == "triangle-suite" ? 1000 : 500);
  McPolicy policy;
  const std::size_t n = resolved_method(o) == "mc" ? need_n(o, cmd) : 0;
  const auto backend = make_backend(o, n, cmd, policy);
  PropertySuiteReport report;
  if (cmd == "schur-suite") {
    report = schur_concavity_suite(backend, opt);
  } else if (cmd == "triangle-suite") {
    report = triangle_suite(backend, opt);
  } else {
    report = coordinate_monotonicity_suite(backend, opt);
  }
  Result r;
  r.json = Json{{"command", cmd},
                {"backend", backend.name()},
                {"mode", backend.mode() == SectionMode::Exact ? "exact" : "mc"},
                {"report", Json::parse(report.to_json())}};
  std::ostringstream s;
  s << report.suite << ": trials=" << report.trials << " violations=" << report.violations
    << " worst_margin=" << fmt(report.worst_margin) << " tolerance=" << fmt(report.tolerance)
    << " seed=" << report.seed;
  if (cmd == "monotonicity-suite" && report.grid_points > 0) {
    s << " grid_points=" << report.grid_points << " grid_max=" << fmt(report.grid_max)
      << " corner=" << fmt(report.corner_value) << " grid_at_corner=" << (report.grid_at_corner ? "yes" : "no");
  }
  r.plain = s.str();
  r.code = report.violations > 0 || !report.grid_at_corner ? kExitViolation : kExitOk;
  return r;
}

Result radem_moment(const Options& o) {
  const auto x = parse_vector(o.vec, "--x");
  const MomentOrder p(o.p);
  Result r;
  r.json = Json{{"command", "radem-moment"}, {"x", x.values}, {"p", o.p}};
  if (o.exact && !p.is_integer()) throw UsageError("radem-moment: --exact needs an integer --p");
  if ((o.exact || x.rational) && p.is_integer()) {
    const auto m = abs_moment(std::span<const Rational>(x.exact), p);
    r.json["moment"] = exact_number(*m.exact);
    r.plain = to_string(*m.exact);
  } else {
    const double v = abs_moment(CoeffVector(x.values), p).value;
    r.json["moment"] = float_number(v);
    r.plain = fmt(v);
  }
  return r;
}

Result phi_cmd(const Options& o) {
  const auto t = parse_vector(o.vec, "--t");
  const double v = phi(CoeffVector(t.values), MomentOrder(o.p));
  Result r;
  r.json = Json{{"command", "phi"}, {"t", t.values}, {"p", o.p}, {"phi", float_number(v)}};
  r.plain = fmt(v);
  return r;
}

Result dual_witness(const Options& o) {
  const auto t = parse_vector(o.vec, "--t");
  const auto c = dual_witness_correlations(CoeffVector(t.values), MomentOrder(o.p));
  Result r;
  r.json = Json{{"command", "dual-witness"}, {"t", t.values}, {"p", o.p},
                {"correlations", {{"values", c.vec()}, {"mode", "float"}}}};
  r.plain = join(c.values());
  return r;
}

Result hilbert_moment(const Options& o) {
  const auto t = parse_vector(o.vec, "--t");
  std::vector<CoeffVector> vs;
  for (const auto& part : split(o.vectors, ';')) vs.emplace_back(parse_vector(part, "--vectors").values);
  const double v = hilbert_abs_moment(vs, CoeffVector(t.values), MomentOrder(o.p));
  Result r;
  r.json = Json{{"command", "hilbert-moment"}, {"t", t.values}, {"p", o.p}, {"moment", float_number(v)}};
  r.plain = fmt(v);
  return r;
}

Result mixture_moment(const Options& o) {
  const auto t = parse_vector(o.vec, "--t");
  std::vector<DiscreteSymmetricLaw> laws;
  for (const auto& part : split(o.laws, ';')) {
    DiscreteSymmetricLaw law;
    for (const auto& atom : split(part, ',')) {
      const auto mp = split(atom, ':');
      if (mp.empty() || mp.size() > 2 || mp[0].empty()) throw UsageError("--laws: atoms are magnitude[:probability]");
      const double m = parse_vector(mp[0], "--laws").values[0];
      const double pr = mp.size() == 2 ? parse_vector(mp[1], "--laws").values[0] : 1.0;
      law.atoms.push_back({m, pr});
    }
    laws.push_back(std::move(law));
  }
  const double v = symmetric_mixture_abs_moment(laws, CoeffVector(t.values), MomentOrder(o.p));
  Result r;
  r.json = Json{{"command", "mixture-moment"}, {"t", t.values}, {"p", o.p}, {"moment", float_number(v)}};
  r.plain = fmt(v);
  return r;
}

Result repr_build(const Options& o) {
  const auto set = build_representation_set(need_n(o, "repr-build"));
  Result r;
  Json members = Json::array();
  for (const auto& m : set.members()) members.push_back(rationals_json(m));
  r.json = Json{{"command", "repr-build"}, {"n", set.n()}, {"size", set.size()}, {"mode", "exact"}, {"members", members}};
  r.plain = set.serialize();
  return r;
}

Result repr_eval(const Options& o) {
  const auto x = parse_vector(o.vec, "--x");
  RepresentationSet set = [&] {
    if (o.set_file.empty()) return build_representation_set(x.exact.size());
    std::ifstream in(o.set_file);
    if (!in) throw UsageError("repr-eval: cannot read " + o.set_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return RepresentationSet::parse(buf.str());
  }();
  if (set.n() != x.exact.size()) throw UsageError("repr-eval: set dimension does not match --x");
  const Rational v = full_representation(x.exact, set);
  Result r;
  r.json = Json{{"command", "repr-eval"}, {"x", rationals_json(x.exact)}, {"set_size", set.size()}, {"value", exact_number(v)}};
  r.plain = to_string(v);
  return r;
}

LatticeSpec lattice(const Options& o, std::size_t n) {
  LatticeSpec spec{o.N, n, std::nullopt};
  if (o.region != "unit") spec.body = make_body(o.region, o.body_p, n);
  return spec;
}

Json hyperplane_json(const Hyperplane& h) {
  return Json{{"normal", rationals_json(h.normal)}, {"offset", to_string(h.offset)}};
}

Result chessboard_count(const Options& o) {
  const auto a = parse_vector(o.vec, "--normal");
  Rational t;
  try {
    t = parse_rational(o.offset);
  } catch (const std::exception&) {
    throw UsageError("--offset: cannot parse '" + o.offset + "'");
  }
  const auto spec = lattice(o, a.exact.size());
  const auto c = count_cut_cells(spec, Hyperplane{a.exact, t});
  Result r;
  r.json = Json{{"command", "chessboard-count"}, {"lattice", spec.name()}, {"hyperplane", hyperplane_json(c.hyperplane)},
                {"count", {{"value", c.count}, {"mode", "exact"}}}, {"cells_in_body", c.cells_in_body}};
  r.plain = std::to_string(c.count);
  return r;
}

Result chessboard_sweep(const Options& o) {
  const auto a = parse_vector(o.vec, "--direction");
  const auto spec = lattice(o, a.exact.size());
  const auto c = offset_sweep_max(spec, a.exact);
  Result r;
  r.json = Json{{"command", "chessboard-sweep"}, {"lattice", spec.name()}, {"hyperplane", hyperplane_json(c.hyperplane)},
                {"count", {{"value", c.count}, {"mode", "exact"}}}, {"cells_in_body", c.cells_in_body}};
  r.plain = std::to_string(c.count) + " at <" + join(c.hyperplane.normal) + ", x> = " + to_string(c.hyperplane.offset);
  return r;
}

Result chessboard_search(const Options& o) {
  const std::size_t n = need_n(o, "chessboard-search");
  const auto strategy = parse_strategy(o.strategy);
  Result r;
  if (o.sizes.empty()) {
    const auto s = direction_search(lattice(o, n), strategy);
    r.json = Json{{"command", "chessboard-search"},
                  {"lattice", lattice(o, n).name()},
                  {"strategy", to_string(strategy)},
                  {"count", {{"value", s.best.count}, {"mode", "exact"}}},
                  {"hyperplane", hyperplane_json(s.best.hyperplane)},
                  {"candidates", s.candidates},
                  {"exhaustive", s.exhaustive},
                  {"max_candidate_count", s.max_candidate_count}};
    r.plain = std::to_string(s.best.count) + (s.exhaustive ? " (exhaustive)" : " (lower bound)");
    return r;
  }
  std::vector<std::size_t> sizes;
  for (const auto& tok : split(o.sizes, ',')) {
    std::size_t v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || v == 0) throw UsageError("--sizes: bad entry '" + tok + "'");
    sizes.push_back(v);
  }
  const bool cube_like = o.region == "unit" || o.region == "cube";
  const std::uint64_t seed = cube_like ? o.seed.value_or(0) : need_seed(o, "chessboard-search");
  const auto rows = asymptotic_report(lattice(o, n), sizes, strategy, seed);
  Json jr = Json::array();
  for (const auto& row : rows) {
    jr.push_back(Json{{"N", row.N},
                      {"count", row.count},
                      {"normalized", row.normalized},
                      {"beta", {{"value", row.beta}, {"mode", cube_like ? "exact" : "mc"}}},
                      {"ratio", row.ratio},
                      {"hyperplane", hyperplane_json(row.best.hyperplane)}});
  }
  r.json = Json{{"command", "chessboard-search"}, {"lattice", lattice(o, n).name()}, {"strategy", to_string(strategy)}, {"rows", jr}};
  if (!cube_like) r.json["seed"] = seed;
  r.csv = chessboard_csv(rows);
  r.plain = *r.csv;
  return r;
}

Result proj_volume(const Options& o) {
  const auto t = parse_vector(o.vec, "--t");
  const double v = cauchy_projection_volume(CoeffVector(t.values));
  Result r;
  r.json = Json{{"command", "proj-volume"}, {"t", t.values}, {"constant", cauchy_constant(t.values.size())},
                {"volume", float_number(v)}};
  r.plain = fmt(v);
  return r;
}

Result proj_hull(const Options& o) {
  const auto t = parse_vector(o.vec, "--t");
  const double v = hull_projection_volume(CoeffVector(t.values));
  Result r;
  r.json = Json{{"command", "proj-hull"}, {"t", t.values}, {"area", float_number(v)}};
  r.plain = fmt(v);
  return r;
}

Json convexity_json(const ConvexityReport& c) {
  return Json{{"points_tested", c.points_tested},
              {"midpoint_violations", c.midpoint_violations},
              {"worst_violation", c.worst_violation},
              {"hessian_violations", c.hessian_violations},
              {"min_hessian_eigenvalue", c.min_hessian_eigenvalue},
              {"skipped", c.skipped},
              {"hessian_filtered", c.hessian_filtered},
              {"tolerance", c.tolerance},
              {"seed", c.seed}};
}

Result convexity_check(const Options& o) {
  const std::size_t n = need_n(o, "convexity-check");
  const std::uint64_t seed = need_seed(o, "convexity-check");
  const int segments = o.trials > 0 ? o.trials : 200;
  const double tol = o.tolerance.value_or(1e-10);
  Result r;
  ConvexityReport c;
  if (o.function == "phi") {
    const Box box = parse_box(o.box, n, -3.0, 3.0);
    const MomentOrder p(o.p);
    ConvexityProbeOptions opt;
    opt.trials = segments;
    opt.tolerance = tol;
    opt.hessian = !o.no_hessian;
    opt.seed = seed;
    opt.hessian_filter = [step = opt.fd_step](const CoeffVector& t) { return sign_margin(t) >= 10.0 * std::expm1(step); };
    c = convexity_probe([p](const CoeffVector& t) { return phi(t, p); }, box, opt);
    r.json = Json{{"command", "convexity-check"}, {"function", "phi"}, {"n", n}, {"p", o.p}, {"report", convexity_json(c)}};
  } else if (o.function == "proj") {
    const Box box = parse_box(o.box, n, -2.0, 2.0);
    const auto s = saroglou_convexity_check(box, segments, seed, tol);
    c = s.convexity;
    r.json = Json{{"command", "convexity-check"},
                  {"function", "proj"},
                  {"n", n},
                  {"report", convexity_json(c)},
                  {"max_reflection_gap", s.max_reflection_gap},
                  {"max_representation_gap", s.max_representation_gap},
                  {"representation_points", s.representation_points}};
  } else {
    throw UsageError("convexity-check: --function must be phi or proj");
  }
  std::ostringstream s;
  s << o.function << ": segments=" << c.points_tested << " midpoint_violations=" << c.midpoint_violations
    << " worst=" << fmt(c.worst_violation) << " hessian_violations=" << c.hessian_violations
    << " min_eigenvalue=" << fmt(c.min_hessian_eigenvalue) << " seed=" << c.seed;
  r.plain = s.str();
  r.code = c.midpoint_violations > 0 || c.hessian_violations > 0 ? kExitViolation : kExitOk;
  return r;
}

Result logbm_probe(const Options& o) {
  const std::size_t n = need_n(o, "logbm-probe");
  const std::uint64_t seed = need_seed(o, "logbm-probe");
  const auto rep = logbm_convexity_probe(o.q, parse_box(o.box, n, -1.0, 1.0), o.trials > 0 ? o.trials : 20,
                                         o.samples > 0 ? o.samples : 20000, seed);
  Result r;
  Json segs = Json::array();
  for (const auto& s : rep.segments) {
    segs.push_back(Json{{"u", s.u}, {"v", s.v}, {"gap", {{"value", s.gap}, {"mode", "mc"}, {"std_error", s.std_error}}}, {"z", s.z}});
  }
  r.json = Json{{"command", "logbm-probe"}, {"q", rep.q}, {"n", rep.n}, {"samples_per_point", rep.samples_per_point},
                {"seed", rep.seed}, {"above_3se", rep.violations}, {"segments", segs}};
  r.csv = rep.to_csv();
  r.plain = *r.csv;
  return r;
}

Result verify_paper(const Options& o) {
  const std::uint64_t seed = need_seed(o, "verify-paper");
  const auto results = verify::run_acceptance(seed, o.only);
  Result r;
  Json arr = Json::array();
  std::string lines;
  int passed = 0;
  for (const auto& c : results) {
    passed += c.passed ? 1 : 0;
    arr.push_back(Json{{"statement", c.label}, {"passed", c.passed}, {"detail", c.detail}});
    lines += std::string(c.passed ? "PASS" : "FAIL") + "  " + c.label + ": " + c.detail + "\n";
  }
  lines += std::to_string(passed) + "/" + std::to_string(results.size()) + " checks passed (seed " + std::to_string(seed) + ")";
  r.json = Json{{"command", "verify-paper"}, {"seed", seed}, {"checks", arr}, {"passed", passed}, {"total", results.size()}};
  r.plain = lines;
  r.code = passed == static_cast<int>(results.size()) ? kExitOk : kExitViolation;
  return r;
}

void emit(const Result& r, const std::string& format, const std::string& cmd, std::ostream& out) {
  if (format == "json") {
    out << r.json.dump(2) << '\n';
  } else if (format == "csv") {
    if (!r.csv) throw UsageError(cmd + ": csv output is not available for this command");
    out << *r.csv;
    if (!r.csv->empty() && r.csv->back() != '\n') out << '\n';
  } else {
    out << r.plain;
    if (r.plain.empty() || r.plain.back() != '\n') out << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sections of symmetric convex bodies, Rademacher sums and chessboard cutting.", "symsect"};
  app.require_subcommand(1, 1);
  Options o;
  std::map<std::string, std::function<Result(const Options&)>> handlers;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  };
  auto stochastic = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "Random seed (required when sampling)"); };
  auto body_opts = [&](CLI::App* sub, bool lattice_region) {
    if (lattice_region) {
      sub->add_option("--body", o.region, "Region: unit=[0,1]^n, cube=[-1/2,1/2]^n, cross or lp")
          ->check(CLI::IsMember({"unit", "cube", "cross", "lp"}));
    } else {
      sub->add_option("--body", o.body, "Body: cube, cross or lp")->check(CLI::IsMember({"cube", "cross", "lp"}));
    }
    sub->add_option("--body-p", o.body_p, "Exponent of the lp ball");
  };
  auto mc_opts = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "auto, exact or mc");
    sub->add_option("--samples", o.samples, "Monte Carlo samples");
    sub->add_option("--slab", o.slab, "Slab half-width for section estimates");
    stochastic(sub);
  };
  auto add = [&](const std::string& name, const std::string& help, std::function<Result(const Options&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    handlers[name] = std::move(fn);
    return sub;
  };

  {
    auto* s = add("section-volume", "Central section volume vol(K ∩ a⊥)", section_volume);
    s->add_option("--a", o.vec, "Normal vector")->required();
    body_opts(s, false);
    mc_opts(s);
    s->get_option("--method")->description("auto, exact, mc, or sphere (cube via the sphere-sum formula)");
  }
  {
    auto* s = add("busemann-norm", "Busemann norm |x| / vol(K ∩ x⊥)", [](const Options& o) { return norm_or_v(o, true); });
    s->add_option("--x", o.vec, "Vector")->required();
    body_opts(s, false);
    mc_opts(s);
  }
  {
    auto* s = add("v", "Section functional V(a) = (‖a‖₁/|a|) vol(K ∩ a⊥)", [](const Options& o) { return norm_or_v(o, false); });
    s->add_option("--a", o.vec, "Vector")->required();
    body_opts(s, false);
    mc_opts(s);
  }
  {
    auto* s = add("beta", "beta_K = V_K(1, ..., 1)", beta_cmd);
    s->add_option("--n", o.n, "Dimension")->required();
    body_opts(s, false);
    mc_opts(s);
  }
  for (const std::string name : {"schur-suite", "triangle-suite", "monotonicity-suite"}) {
    auto* s = add(name, "Property suite", [name](const Options& o) { return suite_cmd(o, name); });
    body_opts(s, false);
    mc_opts(s);
    s->add_option("--n", o.n, "Dimension (Monte Carlo backends)");
    s->add_option("--trials", o.trials, "Number of trials");
    s->add_option("--min-dim", o.min_dim, "Smallest dimension");
    s->add_option("--max-dim", o.max_dim, "Largest dimension");
    s->add_option("--tolerance", o.tolerance, "Tolerance in exact mode");
  }
  {
    auto* s = add("radem-moment", "E|Σ x_j ε_j|^p", radem_moment);
    s->add_option("--x", o.vec, "Coefficients")->required();
    s->add_option("--p", o.p, "Moment order >= 1");
    s->add_flag("--exact", o.exact, "Exact rational result (integer p)");
  }
  {
    auto* s = add("phi", "log E|Σ e^{t_j} ε_j|^p", phi_cmd);
    s->add_option("--t", o.vec, "Exponents")->required();
    s->add_option("--p", o.p, "Moment order >= 1");
  }
  {
    auto* s = add("dual-witness", "Correlations E[Y ε_j] of the Hölder-extremal Y", dual_witness);
    s->add_option("--t", o.vec, "Exponents")->required();
    s->add_option("--p", o.p, "Moment order >= 1");
  }
  {
    auto* s = add("hilbert-moment", "E‖Σ e^{t_j} ε_j v_j‖^p", hilbert_moment);
    s->add_option("--t", o.vec, "Exponents")->required();
    s->add_option("--vectors", o.vectors, "Vectors v_j, ';'-separated")->required();
    s->add_option("--p", o.p, "Moment order >= 1");
  }
  {
    auto* s = add("mixture-moment", "E|Σ e^{t_j} X_j|^p for symmetric discrete X_j", mixture_moment);
    s->add_option("--t", o.vec, "Exponents")->required();
    s->add_option("--laws", o.laws, "Laws of |X_j|: 'm:prob,...' per variable, ';'-separated")->required();
    s->add_option("--p", o.p, "Moment order >= 1");
  }
  {
    auto* s = add("repr-build", "Finite set A_n with E|Σ x_j ε_j| = max <a, x> on the cone", repr_build);
    s->add_option("--n", o.n, "Dimension")->required();
  }
  {
    auto* s = add("repr-eval", "Evaluate E|Σ x_j ε_j| through A_n", repr_eval);
    s->add_option("--x", o.vec, "Nonnegative vector")->required();
    s->add_option("--set", o.set_file, "Serialized set (default: build A_n)");
  }
  {
    auto* s = add("chessboard-count", "Cells of the (1/N) lattice cut by one hyperplane", chessboard_count);
    s->add_option("--N", o.N, "Lattice resolution")->required();
    s->add_option("--normal", o.vec, "Hyperplane normal")->required();
    s->add_option("--offset", o.offset, "Hyperplane offset")->required();
    body_opts(s, true);
  }
  {
    auto* s = add("chessboard-sweep", "Best offset for one direction", chessboard_sweep);
    s->add_option("--N", o.N, "Lattice resolution")->required();
    s->add_option("--direction", o.vec, "Hyperplane normal")->required();
    body_opts(s, true);
  }
  {
    auto* s = add("chessboard-search", "Direction search; with --sizes, the asymptotic report", chessboard_search);
    s->add_option("--n", o.n, "Dimension")->required();
    s->add_option("--N", o.N, "Lattice resolution");
    s->add_option("--sizes", o.sizes, "Comma-separated resolutions for the report");
    s->add_option("--strategy", o.strategy, "diagonal, diagonal-perturb, axis, pairs or all");
    body_opts(s, true);
    stochastic(s);
  }
  {
    auto* s = add("proj-volume", "vol(P_t) from the Rademacher L1 moment", proj_volume);
    s->add_option("--t", o.vec, "Exponents")->required();
  }
  {
    auto* s = add("proj-hull", "Planar hull area of P_t (n = 3)", proj_hull);
    s->add_option("--t", o.vec, "Exponents")->required();
  }
  {
    auto* s = add("convexity-check", "Midpoint convexity of phi or of log vol(P_t)", convexity_check);
    s->add_option("--function", o.function, "phi or proj")->check(CLI::IsMember({"phi", "proj"}));
    s->add_option("--n", o.n, "Dimension")->required();
    s->add_option("--p", o.p, "Moment order for phi");
    s->add_option("--segments", o.trials, "Random segments");
    s->add_option("--box", o.box, "lo,hi for every coordinate");
    s->add_option("--tolerance", o.tolerance, "Midpoint tolerance");
    s->add_flag("--no-hessian", o.no_hessian, "Skip the finite-difference Hessian");
    stochastic(s);
  }
  {
    auto* s = add("logbm-probe", "Monte Carlo midpoint probe of g(t) = -log E|Σ e^{t_j} ξ_j|^{-q}", logbm_probe);
    s->add_option("--q", o.q, "Exponent in (0, 1]");
    s->add_option("--n", o.n, "Dimension")->required();
    s->add_option("--segments", o.trials, "Random segments");
    s->add_option("--samples", o.samples, "Samples per point");
    s->add_option("--box", o.box, "lo,hi for every coordinate");
    stochastic(s);
  }
  {
    auto* s = add("verify-paper", "Run every acceptance check", verify_paper);
    s->add_option("--only", o.only, "Restrict to these check ids");
    stochastic(s);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const Result r = handlers.at(cmd)(o);
    emit(r, o.format, cmd, out);
    return r.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace symsect::cli
