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

#include "symsect/busemann.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "symsect/core.hpp"
#include "symsect/random.hpp"

namespace symsect {

namespace {

constexpr std::int64_t kMinMcSamples = 200000;

bool all_zero(std::span<const double> x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; });
}

bool all_zero(std::span<const Rational> x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; });
}

double euclid(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

double l1(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += std::fabs(v);
  return s;
}

std::uint64_t hash_bits(std::span<const double> x) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double v : x) {
    h ^= std::bit_cast<std::uint64_t>(v == 0.0 ? 0.0 : v);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::size_t nonzero_count(std::span<const double> x) {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](double v) { return v != 0.0; }));
}

Evaluation exact_eval(const Rational& r) { return {to_double(r), 0.0, SectionMode::Exact, r}; }

}  // namespace

SectionBackend SectionBackend::exact_cube() { return SectionBackend(); }

SectionBackend SectionBackend::monte_carlo(Body body, McPolicy policy, bool allow_small_budget) {
  if (!allow_small_budget && policy.samples < kMinMcSamples) {
    throw std::invalid_argument("SectionBackend: Monte Carlo budget must be at least 200000 samples per evaluation");
  }
  if (policy.samples < 1) throw std::invalid_argument("SectionBackend: samples must be positive");
  if (!(policy.slab_halfwidth > 0.0)) throw std::invalid_argument("SectionBackend: slab half-width must be positive");
  SectionBackend b;
  b.mode_ = SectionMode::MonteCarlo;
  b.body_ = std::move(body);
  b.policy_ = policy;
  return b;
}

std::optional<std::size_t> SectionBackend::dim() const noexcept {
  if (body_) return body_->dim();
  return std::nullopt;
}

bool SectionBackend::one_symmetric() const noexcept { return !body_ || body_->one_symmetric(); }

std::string SectionBackend::name() const { return body_ ? "mc:" + body_->name() : std::string("exact:cube"); }

Evaluation SectionBackend::section(const CoeffVector& x) const {
  if (all_zero(x.values())) throw std::invalid_argument("section: direction must be nonzero");
  if (mode_ == SectionMode::Exact) return {cube_section_volume(x), 0.0, SectionMode::Exact, std::nullopt};
  if (x.dim() != body_->dim()) throw std::invalid_argument("section: dimension mismatch with backend body");
  const auto est = mc_section_volume(*body_, x, policy_.slab_halfwidth, policy_.samples,
                                     derive_seed(policy_.seed, hash_bits(x.values())));
  if (!(est.value > 0.0)) throw std::logic_error("section: estimated section volume is zero; raise the sample budget");
  return {est.value, est.std_error, SectionMode::MonteCarlo, std::nullopt};
}

Rational cube_busemann_norm(std::span<const Rational> x) {
  if (all_zero(x)) return Rational(0);
  return Rational(1) / cube_density_at_zero(x);
}

Rational cube_v_functional(std::span<const Rational> a) {
  if (all_zero(a)) throw std::invalid_argument("v_functional: direction must be nonzero");
  Rational norm1(0);
  for (const auto& v : a) norm1 += abs(v);
  return norm1 * cube_density_at_zero(a);
}

Evaluation busemann_norm(const SectionBackend& backend, const CoeffVector& x) {
  if (all_zero(x.values())) return exact_eval(Rational(0));
  if (backend.mode() == SectionMode::Exact && nonzero_count(x.values()) <= kMaxExactCubeTerms) {
    return exact_eval(cube_busemann_norm(exact_rational(x.values())));
  }
  const auto s = backend.section(x);
  const double len = euclid(x.values());
  return {len / s.value, len * s.std_error / (s.value * s.value), s.mode, std::nullopt};
}

Evaluation v_functional(const SectionBackend& backend, const CoeffVector& a) {
  if (all_zero(a.values())) throw std::invalid_argument("v_functional: direction must be nonzero");
  if (backend.mode() == SectionMode::Exact && nonzero_count(a.values()) <= kMaxExactCubeTerms) {
    return exact_eval(cube_v_functional(exact_rational(a.values())));
  }
  const auto s = backend.section(a);
  const double ratio = l1(a.values()) / euclid(a.values());
  return {ratio * s.value, ratio * s.std_error, s.mode, std::nullopt};
}

Evaluation beta(const SectionBackend& backend, std::size_t n) {
  if (!backend.one_symmetric()) throw std::invalid_argument("beta: body is not flagged 1-symmetric");
  if (n == 0) throw std::invalid_argument("beta: dimension must be positive");
  if (backend.dim() && *backend.dim() != n) throw std::invalid_argument("beta: dimension mismatch with backend body");
  return v_functional(backend, CoeffVector(std::vector<double>(n, 1.0)));
}

std::string PropertySuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["trials"] = trials;
  j["violations"] = violations;
  j["worst_margin"] = worst_margin;
  j["seed"] = seed;
  j["tolerance"] = tolerance;
  if (grid_points > 0) {
    j["grid_points"] = grid_points;
    j["grid_max"] = grid_max;
    j["corner_value"] = corner_value;
    j["grid_at_corner"] = grid_at_corner;
  }
  return j.dump();
}

namespace {

// Evaluates on rational points: exactly for the cube backend, through the
// backend otherwise.
class SuiteRunner {
 public:
  SuiteRunner(const SectionBackend& backend, const SuiteOptions& options, std::string name)
      : backend_(backend), options_(options) {
    if (options.trials < 0) throw std::invalid_argument("suite: trials must be nonnegative");
    if (options.min_dim == 0 || options.min_dim > options.max_dim) {
      throw std::invalid_argument("suite: need 1 <= min_dim <= max_dim");
    }
    report_.suite = std::move(name);
    report_.seed = options.seed;
    report_.tolerance = backend.mode() == SectionMode::Exact ? options.tolerance : 0.0;
    report_.worst_margin = std::numeric_limits<double>::infinity();
  }

  bool exact() const { return backend_.mode() == SectionMode::Exact; }

  std::size_t draw_dim(Rng& rng) const {
    if (backend_.dim()) return *backend_.dim();
    return static_cast<std::size_t>(
        rng.uniform_int(static_cast<std::int64_t>(options_.min_dim), static_cast<std::int64_t>(options_.max_dim)));
  }

  Evaluation norm(const RationalVector& x) const {
    if (exact()) return exact_eval(cube_busemann_norm(x));
    return busemann_norm(backend_, CoeffVector(to_double(x)));
  }

  Evaluation v(const RationalVector& x) const {
    if (exact()) return exact_eval(cube_v_functional(x));
    return v_functional(backend_, CoeffVector(to_double(x)));
  }

  // Records slack = lhs - rhs where lhs >= rhs is the claim.
  // Returns whether the claim held within tolerance.
  bool record(const Evaluation& lhs, const Evaluation& rhs) {
    double slack;
    double tol;
    if (lhs.exact && rhs.exact) {
      slack = to_double(*lhs.exact - *rhs.exact);
      tol = options_.tolerance;
    } else {
      slack = lhs.value - rhs.value;
      tol = 3.0 * std::hypot(lhs.std_error, rhs.std_error);
      report_.tolerance = std::max(report_.tolerance, tol);
    }
    report_.worst_margin = std::min(report_.worst_margin, slack);
    if (slack < -tol) {
      ++pending_violation_;
      return false;
    }
    return true;
  }

  void end_trial() {
    ++report_.trials;
    if (pending_violation_ > 0) ++report_.violations;
    pending_violation_ = 0;
  }

  void discard_pending() { pending_violation_ = 0; }

  PropertySuiteReport finish() {
    if (!std::isfinite(report_.worst_margin)) report_.worst_margin = 0.0;
    return report_;
  }

  PropertySuiteReport& report() { return report_; }
  const SuiteOptions& options() const { return options_; }

 private:
  const SectionBackend& backend_;
  const SuiteOptions& options_;
  PropertySuiteReport report_;
  int pending_violation_ = 0;
};

Rational small_rational(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
  return Rational(rng.uniform_int(lo, hi), rng.uniform_int(1, max_den));
}

Evaluation sum(const Evaluation& a, const Evaluation& b) {
  Evaluation out{a.value + b.value, std::hypot(a.std_error, b.std_error), a.mode, std::nullopt};
  if (a.exact && b.exact) out.exact = *a.exact + *b.exact;
  return out;
}

Evaluation scaled(const Evaluation& a, const Rational& s) {
  Evaluation out{a.value * to_double(s), a.std_error * std::fabs(to_double(s)), a.mode, std::nullopt};
  if (a.exact) out.exact = *a.exact * s;
  return out;
}

Evaluation negated(const Evaluation& a) { return scaled(a, Rational(-1)); }

}  // namespace

PropertySuiteReport schur_concavity_suite(const SectionBackend& backend, const SuiteOptions& options) {
  if (!backend.one_symmetric()) throw std::invalid_argument("schur_concavity_suite: body is not flagged 1-symmetric");
  SuiteRunner run(backend, options, "schur_concavity");
  for (int trial = 0; trial < options.trials; ++trial) {
    Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(trial)));
    const std::size_t n = run.draw_dim(rng);
    RationalVector y(n);
    do {
      for (auto& c : y) c = small_rational(rng, 0, 12, 3);
    } while (all_zero(y));
    RationalVector x = y;
    if (rng.uniform_int(0, 9) != 0) x = robin_hood_transfers(y, static_cast<int>(rng.uniform_int(1, 5)), rng);
    if (!majorizes(x, y)) throw std::logic_error("schur_concavity_suite: generated pair is not majorized");
    run.record(run.v(x), run.v(y));
    run.end_trial();
  }
  return run.finish();
}

PropertySuiteReport triangle_suite(const SectionBackend& backend, const SuiteOptions& options) {
  SuiteRunner run(backend, options, "triangle");
  for (int trial = 0; trial < options.trials; ++trial) {
    Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(trial)));
    const std::size_t n = run.draw_dim(rng);
    RationalVector x(n), y(n), xy(n), lx(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = small_rational(rng, -10, 10, 4);
      y[j] = small_rational(rng, -10, 10, 4);
      xy[j] = x[j] + y[j];
    }
    Rational lambda(0);
    while (lambda == 0) lambda = small_rational(rng, -20, 20, 5);
    for (std::size_t j = 0; j < n; ++j) lx[j] = lambda * x[j];
    const auto nx = run.norm(x);
    const auto ny = run.norm(y);
    run.record(sum(nx, ny), run.norm(xy));
    // Homogeneity as two one-sided checks.
    const auto nlx = run.norm(lx);
    const auto expect = scaled(nx, abs(lambda));
    run.record(nlx, expect);
    run.record(negated(nlx), negated(expect));
    run.end_trial();
  }
  return run.finish();
}

PropertySuiteReport coordinate_monotonicity_suite(const SectionBackend& backend, const SuiteOptions& options) {
  if (!backend.one_symmetric()) {
    throw std::invalid_argument("coordinate_monotonicity_suite: body is not flagged 1-symmetric");
  }
  SuiteRunner run(backend, options, "coordinate_monotonicity");
  for (int trial = 0; trial < options.trials; ++trial) {
    Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(trial)));
    const std::size_t n = run.draw_dim(rng);
    RationalVector x(n);
    for (auto& c : x) c = Rational(rng.uniform_int(0, 8), 8);
    RationalVector up = x;
    up[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1))] += Rational(rng.uniform_int(1, 8), 8);
    run.record(run.norm(up), run.norm(x));
    run.end_trial();
  }

  // Grid {0, 1/4, ..., 1}^n for each n <= 4 in range.
  const std::size_t lo = backend.dim() ? *backend.dim() : options.min_dim;
  const std::size_t hi = backend.dim() ? *backend.dim() : options.max_dim;
  auto& report = run.report();
  for (std::size_t n = lo; n <= std::min<std::size_t>(hi, 4); ++n) {
    const auto corner = run.norm(RationalVector(n, Rational(1)));
    Evaluation best = exact_eval(Rational(0));
    std::vector<int> idx(n, 0);
    for (;;) {
      RationalVector x(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = Rational(idx[j], 4);
      const auto v = run.norm(x);
      ++report.grid_points;
      if (v.value > best.value) best = v;
      std::size_t j = 0;
      while (j < n && ++idx[j] == 5) idx[j++] = 0;
      if (j == n) break;
    }
    report.grid_max = best.value;
    report.corner_value = corner.value;
    if (!run.record(corner, best)) report.grid_at_corner = false;
  }
  run.discard_pending();
  return run.finish();
}

}  // namespace symsect
