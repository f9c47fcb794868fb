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

#include "symsect/rademacher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "sign_sums.hpp"
#include "symsect/random.hpp"

namespace symsect {

namespace {

using detail::CompensatedSum;

double abs_pow(double s, double p) {
  const double a = std::fabs(s);
  if (p == 1.0) return a;
  if (p == 2.0) return a * a;
  if (p == 3.0) return a * a * a;
  return std::pow(a, p);
}

// sgn(s) |s|^{p-1}.
double odd_pow(double s, double p) {
  if (s == 0.0) return 0.0;
  const double mag = p == 1.0 ? 1.0 : std::pow(std::fabs(s), p - 1.0);
  return s > 0 ? mag : -mag;
}

Rational pow_int(const Rational& base, unsigned e) {
  Rational result(1);
  Rational b = base;
  while (e) {
    if (e & 1U) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

double half_count(std::size_t n) { return std::ldexp(1.0, static_cast<int>(n) - 1); }

double float_moment(std::span<const double> x, double p) {
  CompensatedSum acc;
  detail::for_each_signed_sum(x, [&](double s, std::uint64_t) { acc.add(abs_pow(s, p)); });
  return acc.value() / half_count(x.size());
}

std::vector<double> shifted_exp(const CoeffVector& t, double& shift) {
  shift = *std::max_element(t.begin(), t.end());
  std::vector<double> x(t.dim());
  for (std::size_t j = 0; j < t.dim(); ++j) x[j] = std::exp(t[j] - shift);
  return x;
}

}  // namespace

MomentOrder::MomentOrder(double p) : p_(p) {
  if (!std::isfinite(p) || p < 1.0) throw std::invalid_argument("moment order p must satisfy p >= 1");
}

bool MomentOrder::is_integer() const noexcept { return p_ == std::floor(p_) && p_ <= 64.0; }

MomentResult abs_moment(const CoeffVector& x, MomentOrder p) {
  detail::check_sign_budget(x.dim(), "abs_moment");
  return {float_moment(x.values(), p.value()), std::nullopt};
}

MomentResult abs_moment(std::span<const Rational> x, MomentOrder p) {
  detail::check_sign_budget(x.size(), "abs_moment");
  if (!p.is_integer()) return abs_moment(CoeffVector(to_double(x)), p);
  const auto e = static_cast<unsigned>(p.value());
  Rational acc(0);
  detail::for_each_signed_sum(x, [&](const Rational& s, std::uint64_t) { acc += pow_int(abs(s), e); });
  acc /= Rational(Integer(1) << static_cast<unsigned>(x.size() - 1));
  return {to_double(acc), acc};
}

double phi(const CoeffVector& t, MomentOrder p) {
  detail::check_sign_budget(t.dim(), "phi");
  double shift = 0.0;
  const auto x = shifted_exp(t, shift);
  return p.value() * shift + std::log(float_moment(x, p.value()));
}

double sign_margin(const CoeffVector& t) {
  detail::check_sign_budget(t.dim(), "sign_margin");
  double shift = 0.0;
  const auto x = shifted_exp(t, shift);
  CompensatedSum total;
  for (double c : x) total.add(c);
  double best = std::numeric_limits<double>::infinity();
  detail::for_each_signed_sum(std::span<const double>(x), [&](double s, std::uint64_t) { best = std::min(best, std::fabs(s)); });
  return best / total.value();
}

CoeffVector dual_witness_correlations(const CoeffVector& t, MomentOrder p) {
  detail::check_sign_budget(t.dim(), "dual_witness_correlations");
  const std::size_t n = t.dim();
  // Correlations are 0-homogeneous in the coefficients, so a common factor
  // can be dropped.
  double shift = 0.0;
  const auto x = shifted_exp(t, shift);
  const double pv = p.value();
  CompensatedSum moment;
  std::vector<CompensatedSum> corr(n);
  detail::for_each_signed_sum(std::span<const double>(x), [&](double s, std::uint64_t mask) {
    moment.add(abs_pow(s, pv));
    const double f = odd_pow(s, pv);
    if (f == 0.0) return;
    for (std::size_t j = 0; j < n; ++j) corr[j].add(detail::sign_of(mask, j) > 0 ? f : -f);
  });
  const double count = half_count(n);
  const double norm_p = std::pow(moment.value() / count, 1.0 / pv);
  const double scale = pv == 1.0 ? 1.0 : std::pow(norm_p, pv - 1.0);
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = corr[j].value() / count / scale;
  return CoeffVector(std::move(out));
}

double hilbert_abs_moment(std::span<const CoeffVector> vectors, const CoeffVector& t, MomentOrder p) {
  if (vectors.size() != t.dim()) throw std::invalid_argument("hilbert_abs_moment: need one vector per coefficient");
  detail::check_sign_budget(t.dim(), "hilbert_abs_moment");
  const std::size_t d = vectors.front().dim();
  double shift = 0.0;
  const auto scale = shifted_exp(t, shift);
  std::vector<Eigen::VectorXd> x;
  x.reserve(vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].dim() != d) throw std::invalid_argument("hilbert_abs_moment: vectors differ in dimension");
    x.emplace_back(Eigen::Map<const Eigen::VectorXd>(vectors[j].values().data(), static_cast<Eigen::Index>(d)) *
                   scale[j]);
  }
  const double pv = p.value();
  CompensatedSum acc;
  detail::for_each_signed_sum(std::span<const Eigen::VectorXd>(x), [&](const Eigen::VectorXd& s, std::uint64_t) {
    acc.add(abs_pow(s.norm(), pv));
  });
  return std::exp(pv * shift) * acc.value() / half_count(t.dim());
}

void DiscreteSymmetricLaw::validate() const {
  if (atoms.empty()) throw std::invalid_argument("DiscreteSymmetricLaw: no atoms");
  double total = 0.0;
  for (const auto& a : atoms) {
    if (!(a.magnitude >= 0.0) || !std::isfinite(a.magnitude) || !(a.probability >= 0.0)) {
      throw std::invalid_argument("DiscreteSymmetricLaw: magnitudes and probabilities must be nonnegative");
    }
    total += a.probability;
  }
  if (std::fabs(total - 1.0) > 1e-12) throw std::invalid_argument("DiscreteSymmetricLaw: probabilities must sum to 1");
}

double symmetric_mixture_abs_moment(std::span<const DiscreteSymmetricLaw> laws, const CoeffVector& t,
                                    MomentOrder p) {
  const std::size_t n = t.dim();
  if (laws.size() != n) throw std::invalid_argument("symmetric_mixture_abs_moment: need one law per coefficient");
  detail::check_sign_budget(n, "symmetric_mixture_abs_moment");
  // Budget: grid size times 2^n must stay below 2^30.
  double log2_work = static_cast<double>(n);
  for (const auto& law : laws) {
    law.validate();
    log2_work += std::log2(static_cast<double>(law.atoms.size()));
  }
  if (log2_work > 30.0 + 1e-9) throw BudgetExceeded("symmetric_mixture_abs_moment: magnitude grid exceeds 2^30 budget");

  double shift = 0.0;
  const auto scale = shifted_exp(t, shift);
  const double pv = p.value();
  std::vector<std::size_t> index(n, 0);
  std::vector<double> coeffs(n);
  CompensatedSum acc;
  for (;;) {
    double weight = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& atom = laws[j].atoms[index[j]];
      weight *= atom.probability;
      coeffs[j] = scale[j] * atom.magnitude;
    }
    if (weight > 0.0) acc.add(weight * float_moment(coeffs, pv));
    std::size_t j = 0;
    while (j < n && ++index[j] == laws[j].atoms.size()) index[j++] = 0;
    if (j == n) break;
  }
  return std::exp(pv * shift) * acc.value();
}

EigenRange fd_hessian_eigen_range(const ScalarField& f, const CoeffVector& x, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("fd_hessian_eigen_range: step must be positive");
  const std::size_t n = x.dim();
  const double h = step;
  std::vector<double> q = x.vec();
  auto eval = [&]() { return f(CoeffVector(q)); };
  const double f0 = eval();
  Eigen::MatrixXd hess(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = x[i] + h;
    const double fp = eval();
    q[i] = x[i] - h;
    const double fmn = eval();
    q[i] = x[i];
    hess(i, i) = (fp - 2.0 * f0 + fmn) / (h * h);
    for (std::size_t k = i + 1; k < n; ++k) {
      // Half steps along e_i ± e_k keep the mixed stencil's truncation
      // error consistent with the diagonal one.
      double acc = 0.0;
      for (int si : {1, -1}) {
        for (int sk : {1, -1}) {
          q[i] = x[i] + si * 0.5 * h;
          q[k] = x[k] + sk * 0.5 * h;
          acc += si * sk * eval();
        }
      }
      q[i] = x[i];
      q[k] = x[k];
      hess(i, k) = hess(k, i) = acc / (h * h);
    }
  }
  if (!hess.allFinite()) return {std::nan(""), std::nan("")};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hess, Eigen::EigenvaluesOnly);
  return {solver.eigenvalues().minCoeff(), solver.eigenvalues().maxCoeff()};
}

ConvexityReport convexity_probe(const ScalarField& f, const Box& box, const ConvexityProbeOptions& options) {
  box.validate();
  if (options.trials < 1) throw std::invalid_argument("convexity_probe: trials must be >= 1");
  if (!(options.fd_step > 0.0)) throw std::invalid_argument("convexity_probe: fd_step must be positive");
  const std::size_t n = box.dim();
  Rng rng(options.seed);
  ConvexityReport report;
  report.seed = options.seed;
  report.tolerance = options.tolerance;
  report.worst_violation = -std::numeric_limits<double>::infinity();
  report.min_hessian_eigenvalue = std::numeric_limits<double>::infinity();

  auto eval = [&](const std::vector<double>& pt) { return f(CoeffVector(pt)); };
  std::vector<double> u(n), v(n), m(n);
  for (int trial = 0; trial < options.trials; ++trial) {
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = rng.uniform(box.low[i], box.high[i]);
      v[i] = rng.uniform(box.low[i], box.high[i]);
      m[i] = 0.5 * (u[i] + v[i]);
    }
    const double fu = eval(u), fv = eval(v), fm = eval(m);
    if (!std::isfinite(fu) || !std::isfinite(fv) || !std::isfinite(fm)) {
      ++report.skipped;
      continue;
    }
    ++report.points_tested;
    const double gap = fm - 0.5 * (fu + fv);
    report.worst_violation = std::max(report.worst_violation, gap);
    if (gap > options.tolerance) ++report.midpoint_violations;

    if (!options.hessian) continue;
    if (options.hessian_filter && !options.hessian_filter(CoeffVector(m))) {
      ++report.hessian_filtered;
      continue;
    }
    const auto range = fd_hessian_eigen_range(f, CoeffVector(m), options.fd_step);
    if (!std::isfinite(range.min) || !std::isfinite(range.max)) {
      ++report.skipped;
      continue;
    }
    const double lo = range.min, hi = range.max;
    report.min_hessian_eigenvalue = std::min(report.min_hessian_eigenvalue, lo);
    if (lo < -1e-6 * (1.0 + std::fabs(hi))) ++report.hessian_violations;
  }
  if (report.points_tested == 0) report.worst_violation = 0.0;
  if (!options.hessian || report.points_tested == 0) report.min_hessian_eigenvalue = 0.0;
  return report;
}

}  // namespace symsect
