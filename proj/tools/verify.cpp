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

#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cli.hpp"
#include "symsect/busemann.hpp"
#include "symsect/chessboard.hpp"
#include "symsect/projections.hpp"
#include "symsect/rademacher.hpp"
#include "symsect/random.hpp"
#include "symsect/representation.hpp"
#include "symsect/sections.hpp"

namespace symsect::verify {
namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

std::string g(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

// Oracles independent of the library's Gray-code enumeration.

Rational brute_abs_moment(const RationalVector& x) {
  const std::size_t n = x.size();
  Rational total(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Rational s(0);
    for (std::size_t j = 0; j < n; ++j) s += ((mask >> j) & 1U) ? Rational(-x[j]) : x[j];
    total += abs(s);
  }
  return total / Rational(Integer(1) << static_cast<unsigned>(n));
}

Rational max_form(const std::vector<RationalVector>& forms, const RationalVector& x) {
  Rational best;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    Rational d(0);
    for (std::size_t j = 0; j < x.size(); ++j) d += forms[i][j] * x[j];
    if (i == 0 || d > best) best = d;
  }
  return best;
}

RationalVector random_cone_point(Rng& rng, std::size_t n) {
  RationalVector x(n);
  Rational acc(0);
  for (std::size_t j = n; j-- > 0;) {
    acc += Rational(rng.uniform_int(0, 6), rng.uniform_int(1, 4));
    x[j] = acc;
  }
  return x;
}

std::vector<double> random_unit(Rng& rng, std::size_t n) {
  std::vector<double> a(n);
  double len = 0.0;
  do {
    len = 0.0;
    for (auto& c : a) {
      c = rng.normal();
      len += c * c;
    }
  } while (len == 0.0);
  for (auto& c : a) c /= std::sqrt(len);
  return a;
}

Outcome rademacher_exact(std::uint64_t seed) {
  Outcome o;
  const auto m1 = abs_moment(RationalVector{1, 1, 1}, MomentOrder(1));
  const auto m2 = abs_moment(RationalVector{2, 1}, MomentOrder(1));
  o.require(m1.exact && *m1.exact == Rational(3, 2) && brute_abs_moment({1, 1, 1}) == Rational(3, 2), "E|e1+e2+e3| = 3/2");
  o.require(m2.exact && *m2.exact == Rational(2) && brute_abs_moment({2, 1}) == Rational(2), "E|2e1+e2| = 2");
  Rng rng(derive_seed(seed, 1));
  int ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    RationalVector x(static_cast<std::size_t>(rng.uniform_int(1, 12)));
    Rational sq(0);
    for (auto& c : x) {
      c = Rational(rng.uniform_int(-50, 50), rng.uniform_int(1, 30));
      sq += c * c;
    }
    const auto m = abs_moment(x, MomentOrder(2));
    ok += (m.exact && *m.exact == sq) ? 1 : 0;
  }
  o.require(ok == 100, "Parseval");
  o.detail << "E|e1+e2+e3| = " << to_string(*m1.exact) << ", E|2e1+e2| = " << to_string(*m2.exact)
           << ", E|sum x_j e_j|^2 = |x|^2 exactly on " << ok << "/100 random rational x";
  return o;
}

constexpr double kHessianStep = 1e-3;

Outcome log_convexity(std::uint64_t seed) {
  Outcome o;
  std::int64_t segments = 0, violations = 0, hess_points = 0, redrawn = 0;
  double worst = -INFINITY, min_eig = INFINITY;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (double pv : {1.0, 1.5, 2.0, 3.0}) {
      const MomentOrder p(pv);
      auto f = [p](const CoeffVector& t) { return phi(t, p); };
      const std::uint64_t s = derive_seed(seed, 100 * n + static_cast<std::uint64_t>(2 * pv));
      ConvexityProbeOptions mid;
      mid.trials = 200;
      mid.tolerance = 1e-10;
      mid.hessian = false;
      mid.seed = s;
      const auto r = convexity_probe(f, Box::cube(n, -3.0, 3.0), mid);
      segments += r.points_tested;
      violations += r.midpoint_violations;
      worst = std::max(worst, r.worst_violation);
      // Hessian points are redrawn while the stencil could cross the set
      // where some Σ ±e^{t_j} vanishes; phi is not C² there.
      Rng rng(derive_seed(s, 1));
      for (int got = 0; got < 100;) {
        std::vector<double> t(n);
        for (auto& c : t) c = rng.uniform(-3.0, 3.0);
        if (sign_margin(CoeffVector(t)) < 10.0 * std::expm1(kHessianStep)) {
          ++redrawn;
          continue;
        }
        ++got;
        ++hess_points;
        min_eig = std::min(min_eig, fd_hessian_eigen_range(f, CoeffVector(t), kHessianStep).min);
      }
    }
  }
  o.require(segments == 4000 && hess_points == 2000, "all points evaluated");
  o.require(violations == 0, "midpoint convexity");
  o.require(min_eig >= -1e-6, "Hessian eigenvalues");
  o.detail << segments << " segments in [-3,3]^n, n=2..6, p in {1,1.5,2,3}: " << violations
           << " midpoint violations (largest gap " << g(worst) << "); min Hessian eigenvalue " << g(min_eig) << " over "
           << hess_points << " points (step " << g(kHessianStep) << ", " << redrawn
           << " draws too close to a zero of some sum e^{t_1} +- ... +- e^{t_n} redrawn)";
  return o;
}

Outcome dual_witness(std::uint64_t seed) {
  Outcome o;
  Rng rng(derive_seed(seed, 3));
  double worst = INFINITY;
  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> t(static_cast<std::size_t>(rng.uniform_int(1, 8)));
    for (auto& c : t) c = rng.uniform(-3.0, 3.0);
    const double p = rng.uniform(1.0, 4.0);
    const auto c = dual_witness_correlations(CoeffVector(t), MomentOrder(p));
    for (double v : c) {
      worst = std::min(worst, v);
      bad += v < -1e-12 ? 1 : 0;
    }
  }
  o.require(bad == 0, "correlations >= -1e-12");
  o.detail << "100 random (t, p), n <= 8: smallest correlation " << g(worst) << ", " << bad << " below -1e-12";
  return o;
}

Outcome representation(std::uint64_t seed) {
  Outcome o;
  Rng rng(derive_seed(seed, 4));
  int checked = 0, mismatches = 0;
  std::ostringstream sizes;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto set = build_representation_set(n);
    sizes << (n > 1 ? "," : "") << set.size();
    for (int trial = 0; trial < 1000; ++trial) {
      const auto x = random_cone_point(rng, n);
      mismatches += evaluate_representation(x, set) == *abs_moment(x, MomentOrder(1)).exact ? 0 : 1;
      RationalVector y(n);
      for (auto& c : y) c = Rational(rng.uniform_int(0, 30), rng.uniform_int(1, 6));
      mismatches += full_representation(y, set) == brute_abs_moment(y) ? 0 : 1;
      checked += 2;
    }
  }
  o.require(mismatches == 0, "exact agreement with E|sum x_j e_j|");

  // Low-dimensional listings, on random cone points and a dense grid.
  const std::vector<RationalVector> ref2{{1, 0}, {Rational(1, 2), Rational(1, 2)}};
  const std::vector<RationalVector> ref3{{1, 0, 0}, {Rational(1, 2), Rational(1, 2), Rational(1, 2)}};
  const auto a2 = build_representation_set(2);
  const auto a3 = build_representation_set(3);
  int listing_bad = 0, listing_points = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x2 = random_cone_point(rng, 2);
    const auto x3 = random_cone_point(rng, 3);
    listing_bad += evaluate_representation(x2, a2) == max_form(ref2, x2) ? 0 : 1;
    listing_bad += evaluate_representation(x3, a3) == max_form(ref3, x3) ? 0 : 1;
    listing_points += 2;
  }
  for (int i = 0; i <= 24; ++i) {
    for (int j = 0; j <= i; ++j) {
      const RationalVector x2{Rational(i, 8), Rational(j, 8)};
      listing_bad += evaluate_representation(x2, a2) == max_form(ref2, x2) ? 0 : 1;
      ++listing_points;
      for (int k = 0; k <= j; k += 2) {
        const RationalVector x3{Rational(i, 8), Rational(j, 8), Rational(k, 8)};
        listing_bad += evaluate_representation(x3, a3) == max_form(ref3, x3) ? 0 : 1;
        ++listing_points;
      }
    }
  }
  o.require(listing_bad == 0, "low-dimensional listings");
  o.detail << "|A_n| (n=1..5) = " << sizes.str() << "; " << checked - mismatches << "/" << checked
           << " exact matches; A_2 ~ {(1,0),(1/2,1/2)} and A_3 ~ {(1,0,0),(1/2,1/2,1/2)} on " << listing_points
           << " points, " << listing_bad << " mismatches";
  return o;
}

Outcome cube_sections(std::uint64_t seed) {
  Outcome o;
  const double v1 = cube_section_volume(CoeffVector({1.0, 0.0, 0.0}));
  const double v2 = cube_section_volume(CoeffVector({1.0, 1.0}));
  const double v3 = cube_section_volume(CoeffVector({1.0, 1.0, 1.0}));
  o.require(std::fabs(v1 - 1.0) <= 1e-12, "e_1");
  o.require(std::fabs(v2 - std::sqrt(2.0)) <= 1e-12, "(1,1)");
  o.require(std::fabs(v3 - 3.0 * std::sqrt(3.0) / 4.0) <= 1e-12, "(1,1,1)");
  Rng rng(derive_seed(seed, 5));
  int bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 10));
    RationalVector a(n);
    do {
      for (auto& c : a) c = Rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 6));
    } while (std::all_of(a.begin(), a.end(), [](const Rational& c) { return c == 0; }));
    const Rational ref = cube_section_volume_squared(a);
    RationalVector b = a;
    for (std::size_t i = n; i-- > 1;) std::swap(b[i], b[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i)))]);
    for (auto& c : b) {
      if (rng.bits() & 1U) c = -c;
    }
    RationalVector s = b;
    const Rational lambda(rng.uniform_int(1, 40) * (rng.bits() & 1U ? 1 : -1), rng.uniform_int(1, 17));
    for (auto& c : s) c *= lambda;
    bad += (cube_section_volume_squared(b) == ref && cube_section_volume_squared(s) == ref) ? 0 : 1;
  }
  o.require(bad == 0, "invariances");
  o.detail << "sections " << g(v1) << ", " << g(v2) << ", " << g(v3) << " (errors " << g(std::fabs(v2 - std::sqrt(2.0)))
           << ", " << g(std::fabs(v3 - 3.0 * std::sqrt(3.0) / 4.0)) << "); permutation, sign and scale invariance exact on "
           << 200 - bad << "/200 directions, n <= 10";
  return o;
}

Outcome sphere_formula(std::uint64_t seed) {
  Outcome o;
  Rng rng(derive_seed(seed, 6));
  double worst_z = 0.0;
  int bad = 0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 8);
    const CoeffVector a(random_unit(rng, n));
    const auto e = sphere_sum_negative_moment(a, 1.0, 1000000, derive_seed(seed, 600 + static_cast<std::uint64_t>(i)));
    const double err = std::fabs(e.value - cube_section_volume(a));
    // The estimator is exact (zero standard error) for n = 1 and, at q = 1,
    // for n = 2; allow for floating rounding there.
    if (err > 3.0 * e.std_error + 1e-12) ++bad;
    if (e.std_error > 0.0) worst_z = std::max(worst_z, err / e.std_error);
  }
  o.require(bad == 0, "within 3 standard errors");
  o.detail << "E|sum a_j xi_j|^-1 vs cube section on 20 unit directions, n=1..8, 10^6 samples: " << 20 - bad
           << "/20 within 3 SE (largest |z| " << g(worst_z) << ")";
  return o;
}

Outcome schur(std::uint64_t seed) {
  Outcome o;
  SuiteOptions opt;
  opt.trials = 500;
  opt.seed = derive_seed(seed, 7);
  opt.max_dim = 8;
  const auto r = schur_concavity_suite(SectionBackend::exact_cube(), opt);
  const Rational c1 = cube_v_functional(RationalVector{1, 1, 1});
  const Rational c2 = cube_v_functional(RationalVector{Rational(3, 2), Rational(3, 2), 0});
  const Rational c3 = cube_v_functional(RationalVector{3, 0, 0});
  o.require(r.violations == 0 && r.trials == 500, "Schur-concavity");
  o.require(c1 == Rational(9, 4) && c2 == Rational(2) && c3 == Rational(1), "chain");
  o.detail << r.trials << " majorized pairs, n <= 8: " << r.violations << " violations (tolerance " << g(r.tolerance)
           << "); V(1,1,1) = " << to_string(c1) << " >= V(3/2,3/2,0) = " << to_string(c2) << " >= V(3,0,0) = " << to_string(c3);
  return o;
}

Outcome triangle(std::uint64_t seed) {
  Outcome o;
  SuiteOptions opt;
  opt.trials = 1000;
  opt.seed = derive_seed(seed, 8);
  const auto r = triangle_suite(SectionBackend::exact_cube(), opt);
  o.require(r.violations == 0 && r.trials == 1000, "triangle inequality");
  o.detail << r.trials << " pairs, n <= 8: " << r.violations << " violations, smallest slack " << g(r.worst_margin);
  return o;
}

Outcome monotonicity(std::uint64_t seed) {
  Outcome o;
  const Rational a = cube_busemann_norm(RationalVector{1, 0, 0});
  const Rational b = cube_busemann_norm(RationalVector{1, 1, 0});
  const Rational c = cube_busemann_norm(RationalVector{1, 1, 1});
  o.require(a == 1 && b == 1 && c == Rational(4, 3), "exact norms");
  SuiteOptions opt;
  opt.trials = 500;
  opt.seed = derive_seed(seed, 9);
  opt.min_dim = 3;
  opt.max_dim = 3;
  const auto r = coordinate_monotonicity_suite(SectionBackend::exact_cube(), opt);
  o.require(r.violations == 0, "coordinate increases");
  o.require(r.grid_points == 125 && r.grid_at_corner, "grid maximum at the corner");
  o.detail << "N(1,0,0) = " << to_string(a) << " <= N(1,1,0) = " << to_string(b) << " <= N(1,1,1) = " << to_string(c)
           << "; grid max " << g(r.grid_max) << " over " << r.grid_points << " points "
           << (r.grid_at_corner ? "at" : "not at") << " the all-ones corner; " << r.violations << "/" << r.trials
           << " coordinate-increase violations";
  return o;
}

Outcome chessboard(std::uint64_t) {
  Outcome o;
  int planar_bad = 0;
  for (std::size_t N = 1; N <= 10; ++N) {
    const auto r = direction_search(LatticeSpec{N, 2, std::nullopt}, SearchStrategy::Pairs);
    const auto want = static_cast<std::int64_t>(2 * N - 1);
    if (!r.exhaustive || r.best.count != want || r.max_candidate_count != want) ++planar_bad;
  }
  o.require(planar_bad == 0, "planar 2N-1");
  const auto rows = asymptotic_report(LatticeSpec{1, 3, std::nullopt}, {10, 20, 40}, SearchStrategy::DiagonalPerturb);
  const double r20 = static_cast<double>(rows[1].count) / 400.0;
  o.require(r20 >= 2.0 && r20 <= 2.3, "N=20 ratio in [2.0, 2.3]");
  const double d10 = std::fabs(rows[0].normalized - 2.25), d20 = std::fabs(rows[1].normalized - 2.25),
               d40 = std::fabs(rows[2].normalized - 2.25);
  o.require(d10 > d20 && d20 > d40, "trend toward 9/4");
  o.detail << "planar exhaustive search = 2N-1 for N=1..10 (" << 10 - planar_bad << "/10); cube N=20: " << rows[1].count
           << " cells, count/N^2 = " << g(r20) << "; count/N^2 at N=10,20,40: " << g(rows[0].normalized) << ", "
           << g(rows[1].normalized) << ", " << g(rows[2].normalized) << " (beta = 2.25)";
  return o;
}

Outcome projections(std::uint64_t seed) {
  Outcome o;
  const double h0 = hull_projection_volume(CoeffVector({0.0, 0.0, 0.0}));
  o.require(std::fabs(h0 - std::sqrt(3.0)) <= 1e-12, "hexagon area");
  Rng rng(derive_seed(seed, 11));
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const CoeffVector t({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
    const double hull = hull_projection_volume(t);
    worst = std::max(worst, std::fabs(cauchy_projection_volume(t) - hull) / hull);
  }
  o.require(worst <= 1e-9, "Cauchy formula vs hull");
  const auto s = saroglou_convexity_check(Box::cube(3, -2.0, 2.0), 200, derive_seed(seed, 12));
  o.require(s.convexity.midpoint_violations == 0 && s.convexity.points_tested == 200, "log-convexity of vol(P_t)");
  o.require(s.max_reflection_gap <= 1e-12, "agreement with phi(-t, 1)");
  o.detail << "hexagon area " << g(h0) << " (error " << g(std::fabs(h0 - std::sqrt(3.0)))
           << "); c_3 = 2/sqrt(3) formula vs hull on 100 t in [-2,2]^3, worst relative gap " << g(worst) << "; "
           << s.convexity.points_tested << " segments, " << s.convexity.midpoint_violations
           << " violations; |log vol(P_t) - sum t - phi(-t,1) - log c_3| <= " << g(s.max_reflection_gap);
  return o;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  return out;
}

Outcome probes(std::uint64_t seed) {
  Outcome o;
  const std::uint64_t s = derive_seed(seed, 12);
  int malformed = 0, segments = 0;
  bool repeatable = true;
  for (double q : {1.0, 0.5}) {
    const auto r1 = logbm_convexity_probe(q, Box::cube(3, -1.0, 1.0), 10, 20000, s);
    const auto r2 = logbm_convexity_probe(q, Box::cube(3, -1.0, 1.0), 10, 20000, s);
    const std::string csv = r1.to_csv();
    repeatable = repeatable && csv == r2.to_csv();
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    if (line != "segment,u1,u2,u3,v1,v2,v3,gap,std_error,z") ++malformed;
    while (std::getline(in, line)) {
      ++segments;
      const auto f = split_csv_line(line);
      if (f.size() != 10) {
        ++malformed;
        continue;
      }
      for (const auto& field : f) {
        char* end = nullptr;
        const double v = std::strtod(field.c_str(), &end);
        if (end == field.c_str() || *end != '\0' || !std::isfinite(v)) ++malformed;
      }
      const double gap = std::strtod(f[7].c_str(), nullptr), se = std::strtod(f[8].c_str(), nullptr),
                   z = std::strtod(f[9].c_str(), nullptr);
      if (!(se > 0.0) || std::fabs(z - gap / se) > 1e-9 * (1.0 + std::fabs(z))) ++malformed;
    }
  }
  o.require(repeatable, "byte-identical reruns");
  o.require(malformed == 0 && segments == 20, "well-formed CSV");

  bool linear = true;
  for (double q : {1.0, 0.5}) {
    for (const auto& seg : logbm_convexity_probe(q, Box::cube(1, -2.0, 2.0), 20, 5000, s).segments) {
      linear = linear && seg.gap == 0.0 && seg.std_error == 0.0 && seg.z == 0.0;
    }
  }
  o.require(linear, "n = 1 control is linear");

  const auto g0 = logbm_functional(CoeffVector({0.0, 0.0, 0.0}), 1.0, 400000, derive_seed(seed, 13));
  const double target = -std::log(cube_section_volume(CoeffVector({1.0, 1.0, 1.0})) / std::sqrt(3.0));
  const double gap = std::fabs(g0.value - target);
  o.require(g0.std_error > 0.0 && gap <= 3.0 * g0.std_error, "calibration within 3 SE");
  o.detail << "probe CSV repeatable and well-formed (" << segments << " segments, q in {1, 1/2}); n=1 gaps exactly 0; g(0) at q=1, n=3: "
           << g(g0.value) << " vs " << g(target) << " (" << g(gap / g0.std_error) << " SE); no convexity claim made";
  return o;
}

Outcome determinism(std::uint64_t seed) {
  Outcome o;
  const std::string sd = std::to_string(seed);
  const std::vector<std::vector<std::string>> commands{
      {"section-volume", "--body", "cross", "--a", "1,2,0.5", "--seed", sd, "--format", "json"},
      {"section-volume", "--a", "1,1,1", "--method", "sphere", "--samples", "100000", "--seed", sd},
      {"busemann-norm", "--body", "lp", "--body-p", "3", "--x", "1,1", "--seed", sd, "--format", "json"},
      {"v", "--body", "cube", "--method", "mc", "--a", "1,1,1", "--seed", sd},
      {"beta", "--body", "cross", "--n", "3", "--seed", sd, "--format", "json"},
      {"schur-suite", "--trials", "50", "--seed", sd, "--format", "json"},
      {"triangle-suite", "--body", "cross", "--n", "3", "--trials", "4", "--seed", sd},
      {"monotonicity-suite", "--trials", "50", "--min-dim", "2", "--max-dim", "3", "--seed", sd},
      {"convexity-check", "--function", "phi", "--n", "3", "--p", "1.5", "--segments", "20", "--seed", sd},
      {"convexity-check", "--function", "proj", "--n", "3", "--segments", "20", "--seed", sd, "--format", "json"},
      {"logbm-probe", "--n", "2", "--q", "0.5", "--segments", "4", "--samples", "5000", "--seed", sd, "--format", "csv"},
      {"chessboard-search", "--n", "2", "--sizes", "3,4", "--strategy", "pairs", "--body", "cross", "--seed", sd},
  };
  int identical = 0;
  std::string failed;
  for (const auto& args : commands) {
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::run_cli(args, out1, err1);
    const int c2 = cli::run_cli(args, out2, err2);
    const bool same = c1 == c2 && out1.str() == out2.str() && err1.str() == err2.str() && !out1.str().empty() &&
                      c1 != cli::kExitUsage;
    if (same) {
      ++identical;
    } else {
      failed += " " + args.front();
    }
  }
  o.require(identical == static_cast<int>(commands.size()), "identical output:" + failed);
  o.detail << identical << "/" << commands.size() << " stochastic commands byte-identical across reruns with seed " << seed;
  return o;
}

struct Criterion {
  int id;
  const char* label;
  Outcome (*run)(std::uint64_t);
  std::optional<double> time_limit;
};

const Criterion kAll[] = {
    {1, "Rademacher moments are exact rationals", rademacher_exact, std::nullopt},
    {2, "t -> log E|sum e^{t_j} eps_j|^p is convex", log_convexity, 60.0},
    {3, "the extremal dual witness has nonnegative sign correlations", dual_witness, std::nullopt},
    {4, "E|sum x_j eps_j| is a maximum of finitely many linear forms", representation, std::nullopt},
    {5, "cube sections: known values and symmetries", cube_sections, std::nullopt},
    {6, "cube sections equal E|sum a_j xi_j|^-1 for xi_j uniform on S^2", sphere_formula, 120.0},
    {7, "the cube section functional V is Schur-concave", schur, std::nullopt},
    {8, "the cube Busemann norm satisfies the triangle inequality", triangle, std::nullopt},
    {9, "the cube Busemann norm increases in each coordinate on R_+^n", monotonicity, std::nullopt},
    {10, "one line cuts at most 2N-1 squares; cube cutting grows like (9/4)N^2", chessboard, 180.0},
    {11, "vol(P_t) via the Rademacher L1 moment, and its log-convexity", projections, std::nullopt},
    {12, "log-Brunn-Minkowski probes are reproducible and calibrated", probes, std::nullopt},
    {13, "stochastic commands are deterministic under a fixed seed", determinism, std::nullopt},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& only,
                                            const ResultCallback& on_result) {
  std::vector<CriterionResult> results;
  for (const auto& c : kAll) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    CriterionResult r;
    r.id = c.id;
    r.label = c.label;
    r.time_limit = c.time_limit;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = c.run(seed);
      r.passed = o.passed;
      r.detail = o.detail.str();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.time_limit && r.seconds > *r.time_limit) {
      r.passed = false;
      r.detail += " [failed: runtime limit " + g(*r.time_limit) + " s exceeded]";
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace symsect::verify
