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

#include <gtest/gtest.h>

#include <cmath>

#include "symsect/random.hpp"

namespace symsect {
namespace {

CoeffVector random_t(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> t(n);
  for (auto& c : t) c = rng.uniform(lo, hi);
  return CoeffVector(t);
}

TEST(Basis, OrthonormalAndOrthogonalToDiagonal) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto b = helmert_basis(n);
    ASSERT_EQ(b.size(), n - 1);
    for (std::size_t i = 0; i < b.size(); ++i) {
      double s = 0.0;
      for (double c : b[i]) s += c;
      EXPECT_NEAR(s, 0.0, 1e-15);
      for (std::size_t k = 0; k < b.size(); ++k) {
        double d = 0.0;
        for (std::size_t j = 0; j < n; ++j) d += b[i][j] * b[k][j];
        EXPECT_NEAR(d, i == k ? 1.0 : 0.0, 1e-14);
      }
    }
  }
  const auto b3 = helmert_basis(3);
  EXPECT_DOUBLE_EQ(b3[0][0], 1.0 / std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(b3[0][1], -1.0 / std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(b3[1][2], -2.0 / std::sqrt(6.0));
}

TEST(Polytope, CentrallySymmetricVertexSet) {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
    const auto p = ProjectedPolytope::from_exponents(random_t(rng, n, -3.0, 3.0));
    ASSERT_EQ(p.vertices.size(), 2 * n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      double s = 0.0;
      for (const auto& v : p.vertices) s += v[k];
      EXPECT_EQ(s, 0.0);
    }
  }
}

TEST(HullOracle, RegularHexagonAndDilation) {
  EXPECT_NEAR(hull_projection_volume(CoeffVector({0.0, 0.0, 0.0})), std::sqrt(3.0), 1e-12);
  // Circumradius √(2/3): area (3√3/2)(2/3).
  EXPECT_NEAR(hull_projection_volume(CoeffVector({0.0, 0.0, 0.0})), 1.5 * std::sqrt(3.0) * (2.0 / 3.0), 1e-12);
  for (double c : {-1.5, 0.3, 2.0}) {
    EXPECT_NEAR(hull_projection_volume(CoeffVector({c, c, c})), std::exp(2.0 * c) * std::sqrt(3.0),
                1e-12 * std::exp(2.0 * c));
  }
  EXPECT_THROW(hull_projection_volume(CoeffVector({0.0, 0.0})), std::invalid_argument);
}

TEST(Cauchy, SmallCases) {
  EXPECT_NEAR(cauchy_projection_volume(CoeffVector({0.0, 0.0, 0.0})), std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(cauchy_projection_volume(CoeffVector({0.0, 0.0})), std::sqrt(2.0), 1e-12);
  // A single point projects to the origin of R^0; the empty product is 1.
  EXPECT_NEAR(cauchy_projection_volume(CoeffVector({0.7})), 1.0, 1e-15);
  // n = 2: a segment of length √2 max(e^{t_1}, e^{t_2}).
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = random_t(rng, 2, -4.0, 4.0);
    EXPECT_NEAR(cauchy_projection_volume(t), std::sqrt(2.0) * std::exp(std::max(t[0], t[1])),
                1e-12 * std::exp(std::max(t[0], t[1])));
  }
  EXPECT_THROW(cauchy_projection_volume(CoeffVector(std::vector<double>(26, 0.0))), std::invalid_argument);
}

TEST(Cauchy, ConstantFittedAgainstHull) {
  // hull / (e^{Σt} E|Σ e^{-t_j} ε_j|) is the same constant everywhere.
  Rng rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    const auto t = trial == 0 ? CoeffVector({0.0, 0.0, 0.0}) : random_t(rng, 3, -2.0, 2.0);
    std::vector<double> x(3);
    double sum = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
      x[j] = std::exp(-t[j]);
      sum += t[j];
    }
    const double m = abs_moment(CoeffVector(x), MomentOrder(1.0)).value;
    const double ratio = hull_projection_volume(t) / (std::exp(sum) * m);
    EXPECT_NEAR(ratio, 2.0 / std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(cauchy_constant(3), ratio, 1e-12);
  }
  EXPECT_NEAR(cauchy_constant(4), 8.0 / (2.0 * 6.0), 1e-15);
}

TEST(Cauchy, MatchesHullOnRandomExponents) {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = random_t(rng, 3, -2.0, 2.0);
    const double h = hull_projection_volume(t);
    EXPECT_NEAR(cauchy_projection_volume(t), h, 1e-9 * h);
  }
  const CoeffVector thin({10.0, 0.0, 0.0});
  EXPECT_NEAR(cauchy_projection_volume(thin), hull_projection_volume(thin), 1e-6 * hull_projection_volume(thin));
}

TEST(Saroglou, ThreeDimensionalSegments) {
  const auto r = saroglou_convexity_check(Box::cube(3, -2.0, 2.0), 200, 5);
  EXPECT_EQ(r.convexity.points_tested, 200);
  EXPECT_EQ(r.convexity.midpoint_violations, 0);
  EXPECT_EQ(r.convexity.hessian_violations, 0);
  EXPECT_LE(r.convexity.worst_violation, 1e-10);
  EXPECT_LE(r.max_reflection_gap, 1e-12);
  EXPECT_EQ(r.representation_points, 200);
  EXPECT_LE(r.max_representation_gap, 1e-12);
}

TEST(Saroglou, HigherDimensionsAndLinearControl) {
  for (std::size_t n : {2u, 5u, 9u}) {
    const auto r = saroglou_convexity_check(Box::cube(n, -2.0, 2.0), 50, 6 + n);
    EXPECT_EQ(r.convexity.midpoint_violations, 0) << n;
    EXPECT_LE(r.max_reflection_gap, 1e-12) << n;
  }
  const auto one = saroglou_convexity_check(Box::cube(1, -3.0, 3.0), 100, 7);
  EXPECT_EQ(one.convexity.worst_violation, 0.0);
  EXPECT_EQ(one.convexity.midpoint_violations, 0);
  EXPECT_THROW(saroglou_convexity_check(Box::cube(21, -1.0, 1.0), 1, 0), std::invalid_argument);
}

}  // namespace
}  // namespace symsect
