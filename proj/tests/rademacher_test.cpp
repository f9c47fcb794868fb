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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "symsect/random.hpp"

namespace symsect {
namespace {

// Oracle: plain loop over all 2^n sign vectors, no symmetry, no Gray code.
double brute_moment(const std::vector<double>& x, double p) {
  const std::size_t n = x.size();
  double acc = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += ((mask >> j) & 1U) ? -x[j] : x[j];
    acc += std::pow(std::fabs(s), p);
  }
  return acc / static_cast<double>(std::uint64_t{1} << n);
}

Rational brute_moment_exact(const RationalVector& x, unsigned p) {
  const std::size_t n = x.size();
  Rational acc(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Rational s(0);
    for (std::size_t j = 0; j < n; ++j) s += ((mask >> j) & 1U) ? Rational(-x[j]) : x[j];
    Rational term(1);
    for (unsigned k = 0; k < p; ++k) term *= abs(s);
    acc += term;
  }
  return acc / Rational(static_cast<long>(std::uint64_t{1} << n));
}

RationalVector random_rationals(Rng& rng, std::size_t n) {
  RationalVector v;
  for (std::size_t j = 0; j < n; ++j) v.emplace_back(rng.uniform_int(-30, 30), rng.uniform_int(1, 9));
  return v;
}

std::vector<double> random_box_point(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> t(n);
  for (auto& c : t) c = rng.uniform(lo, hi);
  return t;
}

TEST(MomentOrder, RejectsBelowOne) {
  EXPECT_THROW(MomentOrder(0.5), std::invalid_argument);
  EXPECT_THROW(MomentOrder(std::nan("")), std::invalid_argument);
  EXPECT_NO_THROW(MomentOrder(1.0));
}

TEST(AbsMoment, DocumentedExactValues) {
  EXPECT_EQ(*abs_moment(RationalVector{1}, MomentOrder(1)).exact, 1);
  EXPECT_EQ(*abs_moment(RationalVector{1, 1, 1}, MomentOrder(1)).exact, Rational(3, 2));
  EXPECT_EQ(*abs_moment(RationalVector{2, 1}, MomentOrder(1)).exact, 2);
  EXPECT_EQ(*abs_moment(RationalVector{1, 1, 1}, MomentOrder(2)).exact, 3);
  EXPECT_DOUBLE_EQ(abs_moment(CoeffVector{1, 1, 1}, MomentOrder(1)).value, 1.5);
  EXPECT_FALSE(abs_moment(CoeffVector{1, 1, 1}, MomentOrder(1)).exact.has_value());
}

TEST(AbsMoment, MatchesBruteForceOracle) {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 16));
    const auto x = random_box_point(rng, n, -2, 2);
    const double p = rng.uniform(1, 4);
    const double expected = brute_moment(x, p);
    EXPECT_NEAR(abs_moment(CoeffVector(x), MomentOrder(p)).value, expected, 1e-12 * (1 + expected));
  }
}

TEST(AbsMoment, ExactMatchesExactOracle) {
  Rng rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = random_rationals(rng, static_cast<std::size_t>(rng.uniform_int(1, 9)));
    const auto p = static_cast<unsigned>(rng.uniform_int(1, 4));
    const auto r = abs_moment(x, MomentOrder(p));
    ASSERT_TRUE(r.exact.has_value());
    EXPECT_EQ(*r.exact, brute_moment_exact(x, p));
    EXPECT_LE(std::fabs(r.value - to_double(*r.exact)), 1e-15 * std::fabs(r.value));
  }
}

TEST(AbsMoment, NonIntegerOrderOnRationalsFallsBackToFloat) {
  const auto r = abs_moment(RationalVector{1, 1}, MomentOrder(1.5));
  EXPECT_FALSE(r.exact.has_value());
  EXPECT_NEAR(r.value, std::pow(2.0, 1.5) / 2.0, 1e-15);
}

TEST(AbsMoment, ParsevalExact) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_rationals(rng, static_cast<std::size_t>(rng.uniform_int(1, 10)));
    Rational sq(0);
    for (const auto& v : x) sq += v * v;
    EXPECT_EQ(*abs_moment(x, MomentOrder(2)).exact, sq);
  }
}

TEST(AbsMoment, SignedPermutationInvarianceExact) {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 9));
    const auto x = random_rationals(rng, n);
    RationalVector y = x;
    for (std::size_t i = n; i > 1; --i) std::swap(y[i - 1], y[static_cast<std::size_t>(rng.uniform_int(0, i - 1))]);
    for (auto& v : y) {
      if (rng.uniform() < 0.5) v = -v;
    }
    EXPECT_EQ(*abs_moment(x, MomentOrder(1)).exact, *abs_moment(y, MomentOrder(1)).exact);
  }
}

TEST(AbsMoment, HomogeneousOfDegreeP) {
  const CoeffVector x{0.3, 1.2, -0.7, 2.0};
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const double base = abs_moment(x, MomentOrder(p)).value;
    const CoeffVector scaled{0.3 * 2.5, 1.2 * 2.5, -0.7 * 2.5, 2.0 * 2.5};
    EXPECT_NEAR(abs_moment(scaled, MomentOrder(p)).value, std::pow(2.5, p) * base, 1e-12 * base * std::pow(2.5, p));
  }
}

TEST(AbsMoment, RejectsOverBudget) {
  EXPECT_THROW(abs_moment(CoeffVector(std::vector<double>(31, 1.0)), MomentOrder(1)), BudgetExceeded);
  EXPECT_THROW(abs_moment(RationalVector{}, MomentOrder(1)), std::invalid_argument);
}

TEST(AbsMoment, LargeDimensionStaysAccurate) {
  // n = 24 runs several Gray-code blocks; compare with the binomial formula.
  const std::size_t n = 24;
  const auto r = abs_moment(CoeffVector(std::vector<double>(n, 1.0)), MomentOrder(1));
  double expected = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    expected += std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) *
                std::fabs(static_cast<double>(n) - 2.0 * static_cast<double>(k));
  }
  expected /= std::ldexp(1.0, static_cast<int>(n));
  EXPECT_NEAR(r.value, expected, 1e-12 * expected);
}

TEST(Phi, DocumentedValues) {
  EXPECT_DOUBLE_EQ(phi(CoeffVector{0}, MomentOrder(1)), 0.0);
  EXPECT_DOUBLE_EQ(phi(CoeffVector{0}, MomentOrder(2.7)), 0.0);
  EXPECT_NEAR(phi(CoeffVector{0, 0, 0}, MomentOrder(1)), std::log(1.5), 1e-15);
  EXPECT_NEAR(phi(CoeffVector{0.8, 0.8, 0.8}, MomentOrder(1)), std::log(1.5) + 0.8, 1e-14);
}

TEST(Phi, TranslationRule) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 7));
    const auto t = random_box_point(rng, n, -3, 3);
    const double c = rng.uniform(-5, 5);
    const double p = rng.uniform(1, 3);
    std::vector<double> shifted = t;
    for (auto& v : shifted) v += c;
    EXPECT_NEAR(phi(CoeffVector(shifted), MomentOrder(p)), phi(CoeffVector(t), MomentOrder(p)) + p * c, 1e-11);
  }
}

TEST(Phi, MatchesLogOfMoment) {
  const CoeffVector t{0.2, -1.0, 0.5};
  std::vector<double> x;
  for (double v : t) x.push_back(std::exp(v));
  EXPECT_NEAR(phi(t, MomentOrder(1.5)), std::log(brute_moment(x, 1.5)), 1e-14);
}

TEST(Phi, ConvexOnRandomSegments) {
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      // The Hessian stencil must not cross a kink of |Σ ±e^{t_j}|.
      auto smooth_here = [](const CoeffVector& t) { return sign_margin(t) >= 10.0 * std::expm1(1e-3); };
      const auto report = convexity_probe([p](const CoeffVector& t) { return phi(t, MomentOrder(p)); },
                                          Box::cube(n, -3, 3), {.trials = 200, .seed = 100 + n, .hessian_filter = smooth_here});
      EXPECT_EQ(report.points_tested, 200);
      EXPECT_LT(report.hessian_filtered, 60);
      EXPECT_GE(report.min_hessian_eigenvalue, -1e-6);
      EXPECT_EQ(report.midpoint_violations, 0) << "p=" << p << " n=" << n << " worst=" << report.worst_violation;
      EXPECT_EQ(report.hessian_violations, 0) << "p=" << p << " n=" << n;
    }
  }
}

TEST(SignMargin, SmallCases) {
  EXPECT_DOUBLE_EQ(sign_margin(CoeffVector{0.0}), 1.0);
  EXPECT_NEAR(sign_margin(CoeffVector{0.0, 0.0}), 0.0, 1e-300);
  // e^t = (2, 1): smallest |2 ± 1| is 1, over a total of 3.
  EXPECT_NEAR(sign_margin(CoeffVector{std::log(2.0), 0.0}), 1.0 / 3.0, 1e-15);
  // Translation invariant far from the origin (700 + log 2 carries ~1e-13).
  EXPECT_NEAR(sign_margin(CoeffVector{700.0 + std::log(2.0), 700.0}), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(sign_margin(CoeffVector{0.0, 0.0, 0.0}), 1.0 / 3.0, 1e-15);
}

TEST(DualWitness, DocumentedValues) {
  const auto one = dual_witness_correlations(CoeffVector{0}, MomentOrder(1));
  EXPECT_DOUBLE_EQ(one[0], 1.0);
  const auto two = dual_witness_correlations(CoeffVector{0, 0}, MomentOrder(1));
  EXPECT_DOUBLE_EQ(two[0], 0.5);
  EXPECT_DOUBLE_EQ(two[1], 0.5);
  const auto three = dual_witness_correlations(CoeffVector{std::log(2.0), 0, 0}, MomentOrder(2));
  for (double c : three) EXPECT_GE(c, 0.0);
}

TEST(DualWitness, NonnegativeAndAttainsNorm) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 8));
    const auto t = random_box_point(rng, n, -3, 3);
    const double p = rng.uniform(1, 4);
    const auto c = dual_witness_correlations(CoeffVector(t), MomentOrder(p));
    double pairing = 0.0;
    std::vector<double> x;
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_GE(c[j], -1e-12);
      pairing += std::exp(t[j]) * c[j];
      x.push_back(std::exp(t[j]));
    }
    const double norm = std::pow(brute_moment(x, p), 1.0 / p);
    EXPECT_NEAR(pairing, norm, 1e-10 * (1 + norm));
  }
}

TEST(Hilbert, DocumentedValues) {
  const std::vector<CoeffVector> basis{CoeffVector{1, 0}, CoeffVector{0, 1}};
  EXPECT_NEAR(hilbert_abs_moment(basis, CoeffVector{0, 0}, MomentOrder(2)), 2.0, 1e-14);
  EXPECT_NEAR(hilbert_abs_moment(basis, CoeffVector{0, 0}, MomentOrder(1)), std::sqrt(2.0), 1e-14);
}

TEST(Hilbert, OneDimensionReducesToScalarMoment) {
  const std::vector<double> x{0.5, -1.5, 2.0, 0.25};
  std::vector<CoeffVector> v;
  for (double c : x) v.push_back(CoeffVector{c});
  for (double p : {1.0, 2.0, 2.5}) {
    EXPECT_NEAR(hilbert_abs_moment(v, CoeffVector{0, 0, 0, 0}, MomentOrder(p)),
                abs_moment(CoeffVector(x), MomentOrder(p)).value, 1e-13);
  }
}

TEST(Hilbert, DimensionMismatch) {
  const std::vector<CoeffVector> v{CoeffVector{1, 0}, CoeffVector{1}};
  EXPECT_THROW(hilbert_abs_moment(v, CoeffVector{0, 0}, MomentOrder(1)), std::invalid_argument);
  EXPECT_THROW(hilbert_abs_moment(v, CoeffVector{0}, MomentOrder(1)), std::invalid_argument);
}

TEST(Hilbert, LogConvexInT) {
  Rng rng(7);
  std::vector<CoeffVector> v;
  for (int j = 0; j < 4; ++j) {
    const auto s = rng.unit_sphere3();
    v.push_back(CoeffVector{s[0], s[1], s[2]});
  }
  for (double p : {1.0, 2.0}) {
    const auto report = convexity_probe(
        [&](const CoeffVector& t) { return std::log(hilbert_abs_moment(v, t, MomentOrder(p))); },
        Box::cube(4, -3, 3), {.trials = 200, .hessian = false, .seed = 8});
    EXPECT_EQ(report.midpoint_violations, 0) << "p=" << p;
  }
}

TEST(Mixture, DocumentedValues) {
  const CoeffVector t{0.3, -0.4, 1.1};
  const std::vector<DiscreteSymmetricLaw> points(3, DiscreteSymmetricLaw::point_mass(1.0));
  EXPECT_NEAR(symmetric_mixture_abs_moment(points, t, MomentOrder(1.5)),
              abs_moment(CoeffVector{std::exp(0.3), std::exp(-0.4), std::exp(1.1)}, MomentOrder(1.5)).value, 1e-13);

  const std::vector<DiscreteSymmetricLaw> half_zero{{{{0.0, 0.5}, {2.0, 0.5}}}};
  EXPECT_NEAR(symmetric_mixture_abs_moment(half_zero, CoeffVector{0}, MomentOrder(1)), 1.0, 1e-15);

  const DiscreteSymmetricLaw one_two{{{1.0, 0.5}, {2.0, 0.5}}};
  const std::vector<DiscreteSymmetricLaw> pair{one_two, one_two};
  EXPECT_NEAR(symmetric_mixture_abs_moment(pair, CoeffVector{0, 0}, MomentOrder(1)), 1.75, 1e-15);
}

TEST(Mixture, ValidationAndBudget) {
  const std::vector<DiscreteSymmetricLaw> bad{{{{1.0, 0.3}}}};
  EXPECT_THROW(symmetric_mixture_abs_moment(bad, CoeffVector{0}, MomentOrder(1)), std::invalid_argument);
  const std::vector<DiscreteSymmetricLaw> negative{{{{-1.0, 1.0}}}};
  EXPECT_THROW(symmetric_mixture_abs_moment(negative, CoeffVector{0}, MomentOrder(1)), std::invalid_argument);
  DiscreteSymmetricLaw wide;
  for (int k = 0; k < 64; ++k) wide.atoms.push_back({static_cast<double>(k), 1.0 / 64});
  const std::vector<DiscreteSymmetricLaw> big(5, wide);
  EXPECT_THROW(symmetric_mixture_abs_moment(big, CoeffVector{0, 0, 0, 0, 0}, MomentOrder(1)), BudgetExceeded);
}

TEST(Mixture, LogConvexInT) {
  Rng rng(9);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<DiscreteSymmetricLaw> laws;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = rng.uniform(0.1, 0.9);
      laws.push_back({{{rng.uniform(0, 2), w}, {rng.uniform(0.5, 3), 1.0 - w}}});
    }
    for (double p : {1.0, 1.7, 3.0}) {
      const auto report = convexity_probe(
          [&](const CoeffVector& t) { return std::log(symmetric_mixture_abs_moment(laws, t, MomentOrder(p))); },
          Box::cube(n, -3, 3), {.trials = 200, .hessian = false, .seed = 10 + n});
      EXPECT_EQ(report.midpoint_violations, 0) << "n=" << n << " p=" << p;
    }
  }
}

TEST(ConvexityProbe, LinearControl) {
  const auto report = convexity_probe([](const CoeffVector& t) { return 2.0 * t[0] - t[1] + 0.5 * t[2]; },
                                      Box::cube(3, -2, 2), {.trials = 100, .seed = 1});
  EXPECT_EQ(report.midpoint_violations, 0);
  EXPECT_NEAR(report.min_hessian_eigenvalue, 0.0, 1e-6);
}

TEST(ConvexityProbe, ConcaveControlIsFlagged) {
  const auto report =
      convexity_probe([](const CoeffVector& t) { return -t[0] * t[0]; }, Box::cube(1, -2, 2), {.trials = 100, .seed = 1});
  EXPECT_GT(report.midpoint_violations, 0);
  EXPECT_GT(report.hessian_violations, 0);
  EXPECT_NEAR(report.min_hessian_eigenvalue, -2.0, 1e-4);
}

TEST(ConvexityProbe, NonFiniteValuesAreSkipped) {
  const auto report = convexity_probe(
      [](const CoeffVector& t) { return t[0] > 0 ? std::numeric_limits<double>::infinity() : t[0] * t[0]; },
      Box::cube(1, -1, 1), {.trials = 100, .hessian = false, .seed = 3});
  EXPECT_GT(report.skipped, 0);
  EXPECT_EQ(report.skipped + report.points_tested, 100);
  EXPECT_EQ(report.midpoint_violations, 0);
}

}  // namespace
}  // namespace symsect
