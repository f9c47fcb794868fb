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

#include "symsect/projections.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "symsect/random.hpp"
#include "symsect/representation.hpp"

namespace symsect {
namespace {

void check_dim(std::size_t n, std::size_t cap, const char* where) {
  if (n == 0 || n > cap) {
    throw std::invalid_argument(std::string(where) + ": dimension must be in [1, " + std::to_string(cap) + "]");
  }
}

double log_cauchy_constant(std::size_t n) {
  const double dn = static_cast<double>(n);
  return (dn - 1.0) * std::log(2.0) - 0.5 * std::log(dn) - std::lgamma(dn);
}

using Point = std::array<double, 2>;

double cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

std::vector<std::vector<double>> helmert_basis(std::size_t n) {
  check_dim(n, kMaxProjectionDim, "helmert_basis");
  std::vector<std::vector<double>> rows;
  for (std::size_t k = 1; k < n; ++k) {
    const double s = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
    std::vector<double> u(n, 0.0);
    for (std::size_t j = 0; j < k; ++j) u[j] = s;
    u[k] = -static_cast<double>(k) * s;
    rows.push_back(std::move(u));
  }
  return rows;
}

ProjectedPolytope ProjectedPolytope::from_exponents(const CoeffVector& t) {
  const std::size_t n = t.dim();
  const auto basis = helmert_basis(n);
  ProjectedPolytope p{t, {}};
  p.vertices.reserve(2 * n);
  // The basis is orthogonal to (1, ..., 1), so coordinates of Proj e_j are
  // just the j-th column.
  for (std::size_t j = 0; j < n; ++j) {
    const double scale = std::exp(t[j]);
    std::vector<double> v(n - 1), w(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      v[k] = scale * basis[k][j];
      w[k] = -v[k];
    }
    p.vertices.push_back(std::move(v));
    p.vertices.push_back(std::move(w));
  }
  return p;
}

double cauchy_constant(std::size_t n) {
  check_dim(n, kMaxProjectionDim, "cauchy_constant");
  return std::exp(log_cauchy_constant(n));
}

double log_cauchy_projection_volume(const CoeffVector& t) {
  const std::size_t n = t.dim();
  check_dim(n, kMaxProjectionDim, "cauchy_projection_volume");
  // Factor e^{-min t} out of the moment so all coefficients are in (0, 1].
  const double lo = *std::min_element(t.begin(), t.end());
  std::vector<double> x(n);
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = std::exp(lo - t[j]);
    sum += t[j];
  }
  const double m = abs_moment(CoeffVector(std::move(x)), MomentOrder(1.0)).value;
  return log_cauchy_constant(n) + (sum - lo) + std::log(m);
}

double cauchy_projection_volume(const CoeffVector& t) { return std::exp(log_cauchy_projection_volume(t)); }

double hull_projection_volume(const CoeffVector& t) {
  if (t.dim() != 3) throw std::invalid_argument("hull_projection_volume: needs exactly 3 coordinates");
  const auto poly = ProjectedPolytope::from_exponents(t);
  std::vector<Point> pts;
  for (const auto& v : poly.vertices) pts.push_back({v[0], v[1]});
  std::sort(pts.begin(), pts.end());

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  double twice = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return 0.5 * std::fabs(twice);
}

SaroglouReport saroglou_convexity_check(const Box& box, int segments, std::uint64_t seed, double tolerance) {
  box.validate();
  const std::size_t n = box.dim();
  check_dim(n, 20, "saroglou_convexity_check");
  const double log_c = log_cauchy_constant(n);

  SaroglouReport report;
  ConvexityProbeOptions opt;
  opt.trials = segments;
  opt.tolerance = tolerance;
  opt.seed = seed;
  // log E|Σ e^{-t_j} ε_j| has kinks where a sign sum of e^{-t_j} vanishes.
  opt.hessian_filter = [step = opt.fd_step](const CoeffVector& t) {
    std::vector<double> neg(t.dim());
    for (std::size_t j = 0; j < t.dim(); ++j) neg[j] = -t[j];
    return sign_margin(CoeffVector(std::move(neg))) >= 10.0 * std::expm1(step);
  };
  report.convexity = convexity_probe(
      [log_c](const CoeffVector& t) { return log_cauchy_projection_volume(t) - log_c; }, box, opt);

  const bool with_repr = n <= kMaxRepresentationCheckDim;
  std::optional<RepresentationSet> set;
  if (with_repr) set = build_representation_set(n);
  Rng rng(derive_seed(seed, 1));
  std::vector<double> t(n), neg(n);
  for (int i = 0; i < segments; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      t[j] = rng.uniform(box.low[j], box.high[j]);
      neg[j] = -t[j];
      sum += t[j];
    }
    const double reflected = phi(CoeffVector(neg), MomentOrder(1.0));
    const double direct = log_cauchy_projection_volume(CoeffVector(t)) - log_c - sum;
    report.max_reflection_gap = std::max(report.max_reflection_gap, std::fabs(direct - reflected));
    if (with_repr) {
      const double via = log_l1_moment_via_representation(CoeffVector(neg), *set);
      report.max_representation_gap = std::max(report.max_representation_gap, std::fabs(via - reflected));
      ++report.representation_points;
    }
  }
  return report;
}

}  // namespace symsect
