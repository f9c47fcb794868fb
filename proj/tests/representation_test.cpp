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

#include "symsect/representation.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "symsect/rademacher.hpp"
#include "symsect/random.hpp"

namespace symsect {
namespace {

// Oracle: E|Σ x_j ε_j| over all 2^n sign vectors.
Rational brute_l1(const RationalVector& x) {
  const std::size_t n = x.size();
  Rational acc(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Rational s(0);
    for (std::size_t j = 0; j < n; ++j) s += ((mask >> j) & 1U) ? Rational(-x[j]) : x[j];
    acc += abs(s);
  }
  return acc / Rational(static_cast<long>(std::uint64_t{1} << n));
}

// Oracle: α_j = E[ε_j sgn(S)] over all 2^n sign vectors.
RationalVector brute_alpha(const RationalVector& x) {
  const std::size_t n = x.size();
  RationalVector out(n, Rational(0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Rational s(0);
    for (std::size_t j = 0; j < n; ++j) s += ((mask >> j) & 1U) ? Rational(-x[j]) : x[j];
    const int sg = sign(s);
    for (std::size_t j = 0; j < n; ++j) out[j] += ((mask >> j) & 1U) ? -sg : sg;
  }
  for (auto& v : out) v /= Rational(static_cast<long>(std::uint64_t{1} << n));
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& x) {
  Rational acc(0);
  for (std::size_t j = 0; j < a.size(); ++j) acc += a[j] * x[j];
  return acc;
}

Rational max_form(const std::vector<RationalVector>& forms, const RationalVector& x) {
  Rational best = dot(forms.front(), x);
  for (const auto& a : forms) best = std::max(best, dot(a, x));
  return best;
}

RationalVector random_cone_point(Rng& rng, std::size_t n) {
  RationalVector x(n);
  Rational acc(0);
  // Increments with small denominators hit ties and cell walls often.
  for (std::size_t j = n; j-- > 0;) {
    acc += Rational(rng.uniform_int(0, 6), rng.uniform_int(1, 4));
    x[j] = acc;
  }
  return x;
}

RationalVector R(std::initializer_list<long> v) {
  RationalVector out;
  for (long c : v) out.emplace_back(c);
  return out;
}

RationalVector half(std::size_t n) { return RationalVector(n, Rational(1, 2)); }

TEST(Alpha, KnownValues) {
  EXPECT_EQ(alpha(R({2, 1})), R({1, 0}));
  EXPECT_EQ(alpha(R({1, 1})), half(2));
  EXPECT_EQ(alpha(R({1, 1, 1})), half(3));
  EXPECT_EQ(alpha(R({0, 0, 0})), R({0, 0, 0}));
}

TEST(Alpha, MatchesBruteForceAndLiesInCone) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto x = random_cone_point(rng, n);
    const auto a = alpha(x);
    EXPECT_EQ(a, brute_alpha(x));
    EXPECT_TRUE(in_cone(a));
    // Attainment: <α(x), x> = E|Σ x_j ε_j|.
    EXPECT_EQ(dot(a, x), brute_l1(x));
    const Integer den = Integer(1) << static_cast<unsigned>(n - 1);
    for (const auto& v : a) EXPECT_EQ(den % denominator(v), 0);
  }
}

TEST(Alpha, DoubleOverloadIsExact) {
  EXPECT_EQ(alpha(CoeffVector({0.5, 0.25, 0.25})), alpha(RationalVector{Rational(1, 2), Rational(1, 4), Rational(1, 4)}));
}

TEST(BuildRepresentation, SmallDimensions) {
  const auto a1 = build_representation_set(1);
  EXPECT_EQ(a1.members(), std::vector<RationalVector>{R({1})});

  // Only generic cells are kept; (1/2,1/2) is the boundary value at x1 = x2
  // and is dominated there by (1,0).
  const auto a2 = build_representation_set(2);
  EXPECT_EQ(a2.members(), std::vector<RationalVector>{R({1, 0})});

  const auto a3 = build_representation_set(3);
  EXPECT_EQ(a3.members(), (std::vector<RationalVector>{half(3), R({1, 0, 0})}));
}

TEST(BuildRepresentation, BudgetAndArgs) {
  EXPECT_THROW(build_representation_set(0), std::invalid_argument);
  EXPECT_THROW(build_representation_set(9), BudgetExceeded);
}

TEST(BuildRepresentation, MembersInConeWithDyadicDenominators) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto set = build_representation_set(n);
    const Integer den = Integer(1) << static_cast<unsigned>(n - 1);
    for (const auto& a : set.members()) {
      EXPECT_TRUE(in_cone(a));
      for (const auto& v : a) EXPECT_EQ(den % denominator(v), 0);
    }
  }
}

TEST(BuildRepresentation, CoversDenseGridAlphaValues) {
  // Cross-check: α sampled on a dense grid of T_n must be dominated by the
  // set, and every generic grid α must occur in it.
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto set = build_representation_set(n);
    const std::set<RationalVector> members(set.members().begin(), set.members().end());
    const int steps = n == 4 ? 9 : 17;
    std::vector<int> inc(n, 0);
    for (;;) {
      RationalVector x(n);
      Rational acc(0);
      for (std::size_t j = n; j-- > 0;) {
        acc += Rational(inc[j]) + Rational(1, 7 + static_cast<long>(j));  // strictly inside
        x[j] = acc;
      }
      const auto a = alpha(x);
      bool generic = true;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Rational s(0);
        for (std::size_t j = 0; j < n; ++j) s += ((mask >> j) & 1U) ? Rational(-x[j]) : x[j];
        if (s == 0) generic = false;
      }
      if (generic) {
        EXPECT_TRUE(members.count(a)) << "n=" << n;
      }
      EXPECT_EQ(evaluate_representation(x, set), brute_l1(x));
      std::size_t j = 0;
      while (j < n && ++inc[j] == steps) inc[j++] = 0;
      if (j == n) break;
    }
  }
}

TEST(BuildRepresentation, KnownGenericCellCounts) {
  // Distinct cells give distinct α, so sizes equal the number of
  // full-dimensional cells of the arrangement inside T_n.
  const std::size_t expected[] = {1, 1, 2, 3, 7, 21, 135};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(build_representation_set(n).size(), expected[n - 1]) << n;
}

TEST(EvaluateRepresentation, KnownValues) {
  const auto a2 = build_representation_set(2);
  const auto a3 = build_representation_set(3);
  EXPECT_EQ(evaluate_representation(R({2, 1}), a2), Rational(2));
  EXPECT_EQ(evaluate_representation(R({1, 1, 1}), a3), Rational(3, 2));
  for (std::size_t n = 1; n <= 5; ++n) {
    RationalVector e(n, Rational(0));
    e[0] = 1;
    EXPECT_EQ(evaluate_representation(e, build_representation_set(n)), Rational(1));
  }
  EXPECT_DOUBLE_EQ(evaluate_representation(ConePoint(CoeffVector({2.0, 1.0})), a2), 2.0);
}

TEST(EvaluateRepresentation, Errors) {
  const auto a2 = build_representation_set(2);
  EXPECT_THROW(evaluate_representation(R({1, 1, 1}), a2), std::invalid_argument);
  EXPECT_THROW(evaluate_representation(R({1, 2}), a2), std::invalid_argument);
  const RepresentationSet empty(2, {});
  EXPECT_THROW(evaluate_representation(R({2, 1}), empty), std::invalid_argument);
  EXPECT_THROW(ConePoint(CoeffVector({1.0, 2.0})), std::invalid_argument);
  EXPECT_THROW(ConePoint(CoeffVector({1.0, -1.0})), std::invalid_argument);
}

TEST(EvaluateRepresentation, EquivalentToLowDimensionalListings) {
  const std::vector<RationalVector> ref2{R({1, 0}), half(2)};
  const std::vector<RationalVector> ref3{R({1, 0, 0}), half(3)};
  const auto a2 = build_representation_set(2);
  const auto a3 = build_representation_set(3);
  Rng rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x2 = random_cone_point(rng, 2);
    const auto x3 = random_cone_point(rng, 3);
    EXPECT_EQ(evaluate_representation(x2, a2), max_form(ref2, x2));
    EXPECT_EQ(evaluate_representation(x3, a3), max_form(ref3, x3));
  }
}

TEST(EvaluateRepresentation, MatchesAbsMomentExactly) {
  Rng rng(7);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto set = build_representation_set(n);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto x = random_cone_point(rng, n);
      const Rational v = evaluate_representation(x, set);
      ASSERT_EQ(v, brute_l1(x));
      ASSERT_EQ(v, *abs_moment(x, MomentOrder(1)).exact);
      for (const auto& a : set.members()) EXPECT_LE(dot(a, x), v);
    }
  }
}

TEST(FullRepresentation, KnownValues) {
  EXPECT_EQ(full_representation(R({1, 2}), build_representation_set(2)), Rational(2));
  EXPECT_EQ(full_representation(R({0, 0, 5}), build_representation_set(3)), Rational(5));
  EXPECT_EQ(full_representation(R({1, 1, 1}), build_representation_set(3)), Rational(3, 2));
  EXPECT_THROW(full_representation(R({1, -1}), build_representation_set(2)), std::invalid_argument);
  EXPECT_THROW(full_representation(CoeffVector({1.0, -1.0}), build_representation_set(2)), std::invalid_argument);
}

TEST(FullRepresentation, MaxOverPermutationsAndMoment) {
  Rng rng(9);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto set = build_representation_set(n);
    for (int trial = 0; trial < 1000; ++trial) {
      RationalVector x(n);
      for (auto& c : x) c = Rational(rng.uniform_int(0, 20), rng.uniform_int(1, 5));
      const Rational v = full_representation(x, set);
      ASSERT_EQ(v, brute_l1(x));
      if (trial % 50 == 0) {
        RationalVector p = x;
        std::sort(p.begin(), p.end());
        Rational best(0);
        do {
          best = std::max(best, max_form(set.members(), p));
        } while (std::next_permutation(p.begin(), p.end()));
        EXPECT_EQ(v, best);
      }
    }
  }
}

TEST(Representation, LogMomentAgreesWithPhi) {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto set = build_representation_set(n);
    std::vector<double> t(n);
    for (auto& c : t) c = rng.uniform(-3.0, 3.0);
    const CoeffVector tv(t);
    EXPECT_NEAR(log_l1_moment_via_representation(tv, set), phi(tv, MomentOrder(1)), 1e-12);
  }
}

TEST(RepresentationSet, SerializeRoundTrip) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto set = build_representation_set(n);
    const auto text = set.serialize();
    const auto back = RepresentationSet::parse(text);
    EXPECT_EQ(back, set);
    EXPECT_EQ(back.serialize(), text);
  }
  EXPECT_EQ(build_representation_set(3).serialize(), "3\n1/2 1/2 1/2\n1/1 0/1 0/1\n");
  EXPECT_THROW(RepresentationSet::parse(""), std::invalid_argument);
  EXPECT_THROW(RepresentationSet::parse("x\n"), std::invalid_argument);
  EXPECT_THROW(RepresentationSet::parse("2\n1/1\n"), std::invalid_argument);
  EXPECT_THROW(RepresentationSet::parse("2\n0/1 1/1\n"), std::invalid_argument);
}

TEST(RepresentationSet, CanonicalOrderAndDedup) {
  const RepresentationSet a(2, {R({1, 0}), half(2), R({1, 0})});
  const RepresentationSet b(2, {half(2), R({1, 0})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 2u);
}

}  // namespace
}  // namespace symsect
