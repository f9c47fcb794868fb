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

#include <gtest/gtest.h>

#include <cmath>

#include <json.hpp>

#include "symsect/random.hpp"

namespace symsect {
namespace {

RationalVector R(std::initializer_list<Rational> v) { return RationalVector(v); }

const SectionBackend kCube = SectionBackend::exact_cube();

TEST(BusemannNorm, CubeExamples) {
  EXPECT_EQ(cube_busemann_norm(R({1, 0, 0})), Rational(1));
  EXPECT_EQ(cube_busemann_norm(R({1, 1, 0})), Rational(1));
  EXPECT_EQ(cube_busemann_norm(R({1, 1, 1})), Rational(4, 3));
  EXPECT_EQ(cube_busemann_norm(R({0, 0})), Rational(0));
  EXPECT_DOUBLE_EQ(busemann_norm(kCube, CoeffVector({1.0, 1.0, 1.0})).value, 4.0 / 3.0);
  EXPECT_EQ(*busemann_norm(kCube, CoeffVector({1.0, 1.0, 1.0})).exact, Rational(4, 3));
  // N(1,1) = 1 <= N(1,0) + N(0,1).
  EXPECT_EQ(cube_busemann_norm(R({1, 1})), Rational(1));
}

TEST(BusemannNorm, MatchesLengthOverSection) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(1 + trial % 7);
    for (auto& c : x) c = rng.uniform(-2.0, 2.0);
    const CoeffVector v(x);
    double len = 0.0;
    for (double c : x) len += c * c;
    EXPECT_NEAR(busemann_norm(kCube, v).value, std::sqrt(len) / cube_section_volume(v), 1e-12);
  }
}

TEST(VFunctional, CubeExamples) {
  EXPECT_EQ(cube_v_functional(R({1, 0, 0})), Rational(1));
  EXPECT_EQ(cube_v_functional(R({1, 1, 0})), Rational(2));
  EXPECT_EQ(cube_v_functional(R({1, 1, 1})), Rational(9, 4));
  EXPECT_THROW(cube_v_functional(R({0, 0})), std::invalid_argument);
  EXPECT_THROW(v_functional(kCube, CoeffVector({0.0})), std::invalid_argument);
}

TEST(VFunctional, IdentityWithNorm) {
  // V(a) N(a) = ‖a‖₁.
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    RationalVector a(1 + trial % 8);
    Rational n1(0);
    do {
      n1 = 0;
      for (auto& c : a) {
        c = Rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 5));
        n1 += abs(c);
      }
    } while (n1 == 0);
    EXPECT_EQ(cube_v_functional(a) * cube_busemann_norm(a), n1);
    const CoeffVector d(to_double(a));
    EXPECT_NEAR(v_functional(kCube, d).value * busemann_norm(kCube, d).value, to_double(n1), 1e-12 * to_double(n1));
  }
}

TEST(VFunctional, ZeroHomogeneousAndSymmetric) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
    RationalVector a(n);
    for (auto& c : a) c = Rational(rng.uniform_int(1, 9), rng.uniform_int(1, 5));
    const Rational ref = cube_v_functional(a);
    RationalVector b = a;
    std::shuffle(b.begin(), b.end(), std::mt19937_64(static_cast<std::uint64_t>(trial)));
    const Rational lambda(rng.uniform_int(-20, -1), rng.uniform_int(1, 7));
    for (auto& c : b) c *= (rng.bits() & 1U) ? lambda : -lambda;
    EXPECT_EQ(cube_v_functional(b), ref);
  }
}

TEST(Beta, CubeValues) {
  EXPECT_EQ(*beta(kCube, 1).exact, Rational(1));
  EXPECT_EQ(*beta(kCube, 2).exact, Rational(2));
  EXPECT_EQ(*beta(kCube, 3).exact, Rational(9, 4));
  EXPECT_THROW(beta(kCube, 0), std::invalid_argument);
}

TEST(Beta, DominatesRandomDirections) {
  Rng rng(7);
  for (std::size_t n = 2; n <= 6; ++n) {
    const double b = beta(kCube, n).value;
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<double> a(n);
      for (auto& c : a) c = rng.normal();
      EXPECT_LE(v_functional(kCube, CoeffVector(a)).value, b + 1e-12);
    }
  }
}

TEST(Beta, RejectsNonSymmetricBodies) {
  auto half_plane = [](std::span<const double> x) { return std::fabs(x[0]) <= 1.0 && std::fabs(x[1]) <= 0.5; };
  const auto backend = SectionBackend::monte_carlo(Body::oracle(2, half_plane, {1.0, 1.0}, false), McPolicy{});
  EXPECT_THROW(beta(backend, 2), std::invalid_argument);
  EXPECT_THROW(schur_concavity_suite(backend, SuiteOptions{}), std::invalid_argument);
}

TEST(Suites, SchurChainExact) {
  const auto v1 = cube_v_functional(R({1, 1, 1}));
  const auto v2 = cube_v_functional(R({Rational(3, 2), Rational(3, 2), 0}));
  const auto v3 = cube_v_functional(R({3, 0, 0}));
  EXPECT_EQ(v1, Rational(9, 4));
  EXPECT_EQ(v2, Rational(2));
  EXPECT_EQ(v3, Rational(1));
}

TEST(Suites, SchurConcavityOnCube) {
  SuiteOptions opt;
  opt.trials = 500;
  opt.seed = 11;
  const auto report = schur_concavity_suite(kCube, opt);
  EXPECT_EQ(report.trials, 500);
  EXPECT_EQ(report.violations, 0);
  EXPECT_GE(report.worst_margin, 0.0);
  // Reflexive pairs give margin exactly 0.
  EXPECT_EQ(report.worst_margin, 0.0);
}

TEST(Suites, TriangleOnCube) {
  SuiteOptions opt;
  opt.trials = 1000;
  opt.seed = 12;
  const auto report = triangle_suite(kCube, opt);
  EXPECT_EQ(report.trials, 1000);
  EXPECT_EQ(report.violations, 0);
}

TEST(Suites, MonotonicityOnCube) {
  SuiteOptions opt;
  opt.trials = 500;
  opt.seed = 13;
  opt.max_dim = 3;
  opt.min_dim = 3;
  const auto report = coordinate_monotonicity_suite(kCube, opt);
  EXPECT_EQ(report.trials, 500);
  EXPECT_EQ(report.violations, 0);
  EXPECT_EQ(report.grid_points, 125);
  EXPECT_TRUE(report.grid_at_corner);
  EXPECT_DOUBLE_EQ(report.grid_max, 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(report.corner_value, 4.0 / 3.0);
}

TEST(Suites, ReportJsonAndDeterminism) {
  SuiteOptions opt;
  opt.trials = 50;
  opt.seed = 99;
  const auto a = triangle_suite(kCube, opt).to_json();
  const auto b = triangle_suite(kCube, opt).to_json();
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  for (const char* key : {"trials", "violations", "worst_margin", "seed", "tolerance"}) EXPECT_TRUE(j.contains(key));
  EXPECT_EQ(j["seed"].get<std::uint64_t>(), 99u);
}

TEST(Suites, NonConvexBodyBreaksTheTriangleInequality) {
  // Control: for the l_{1/2} "ball" the section-based N is not a norm;
  // N(1,0) + N(0,1) = 1 < N(1,1) = 2.
  auto star = [](std::span<const double> x) { return std::sqrt(std::fabs(x[0])) + std::sqrt(std::fabs(x[1])) <= 1.0; };
  McPolicy policy;
  policy.samples = 400000;
  policy.slab_halfwidth = 0.005;
  policy.seed = 4;
  const auto backend = SectionBackend::monte_carlo(Body::oracle(2, star, {1.0, 1.0}, true), policy);
  const auto nx = busemann_norm(backend, CoeffVector({1.0, 0.0}));
  const auto ny = busemann_norm(backend, CoeffVector({0.0, 1.0}));
  const auto nxy = busemann_norm(backend, CoeffVector({1.0, 1.0}));
  EXPECT_NEAR(nx.value, 0.5, 0.05);
  EXPECT_NEAR(nxy.value, 2.0, 0.2);
  EXPECT_GT(nxy.value - nx.value - ny.value, 3.0 * std::sqrt(nx.std_error * nx.std_error + ny.std_error * ny.std_error +
                                                             nxy.std_error * nxy.std_error));
}

TEST(Suites, MonteCarloCrossPolytope) {
  McPolicy policy;
  policy.samples = 200000;
  policy.slab_halfwidth = 0.01;
  policy.seed = 21;
  const auto backend = SectionBackend::monte_carlo(Body::cross_polytope(3), policy);
  // Coordinate section of B_1^3 is B_1^2 with area 2, so N(e_1) = 1/2.
  const auto n = busemann_norm(backend, CoeffVector({1.0, 0.0, 0.0}));
  EXPECT_LE(std::fabs(n.value - 0.5), 3.0 * n.std_error + 1e-3);
  SuiteOptions opt;
  opt.trials = 20;
  opt.seed = 22;
  const auto schur = schur_concavity_suite(backend, opt);
  EXPECT_EQ(schur.violations, 0);
  EXPECT_GT(schur.tolerance, 0.0);
  const auto twice = schur_concavity_suite(backend, opt);
  EXPECT_EQ(schur.to_json(), twice.to_json());
  EXPECT_THROW(SectionBackend::monte_carlo(Body::cube(2), McPolicy{1000, 0.01, 0}), std::invalid_argument);
}

}  // namespace
}  // namespace symsect
