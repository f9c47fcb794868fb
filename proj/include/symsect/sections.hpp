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

// Central hyperplane sections of 1-symmetric bodies.
//
// Exact cube sections come from the density at 0 of Σ a_j U_j with U_j
// uniform on [-1/2, 1/2]. Everything else is Monte Carlo and returns an
// EstimateWithCI.

#ifndef SYMSECT_SECTIONS_HPP_
#define SYMSECT_SECTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symsect/types.hpp"

namespace symsect {

enum class BodyKind { Cube, CrossPolytope, LpBall, Oracle };

/// A 1-symmetric convex body in R^n.
///
/// Cube is the unit-volume cube Q_n = [-1/2, 1/2]^n, CrossPolytope the unit
/// l1 ball, LpBall(p) the unit lp ball.
class Body {
 public:
  using Membership = std::function<bool(std::span<const double>)>;

  static Body cube(std::size_t n);
  static Body cross_polytope(std::size_t n);
  static Body lp_ball(std::size_t n, double p);
  /// Membership oracle inside the box Π[-h_i, h_i]. When `one_symmetric` is
  /// set the claim is spot-checked on random points and a violation throws
  /// std::invalid_argument.
  static Body oracle(std::size_t n, Membership contains, std::vector<double> half_widths, bool one_symmetric,
                     std::optional<double> volume = std::nullopt);

  BodyKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return half_widths_.size(); }
  double p() const noexcept { return p_; }
  bool one_symmetric() const noexcept { return one_symmetric_; }
  const std::vector<double>& half_widths() const noexcept { return half_widths_; }

  bool contains(std::span<const double> x) const;
  /// Closed-form n-volume, or the volume supplied to oracle(); nullopt otherwise.
  std::optional<double> volume() const noexcept { return volume_; }
  std::string name() const;

 private:
  Body() = default;

  BodyKind kind_ = BodyKind::Cube;
  double p_ = 0.0;
  bool one_symmetric_ = true;
  std::vector<double> half_widths_;
  std::optional<double> volume_;
  Membership oracle_;
};

/// Largest number of nonzero coordinates accepted by cube sections; exact
/// evaluation is used up to kMaxExactCubeTerms of them.
inline constexpr std::size_t kMaxCubeTerms = 20;
inline constexpr std::size_t kMaxExactCubeTerms = 16;

/// Density at 0 of Σ a_j U_j, exact. Throws for a = 0 and BudgetExceeded
/// when a has more than kMaxCubeTerms nonzero entries.
Rational cube_density_at_zero(std::span<const Rational> a);

/// vol_{n-1}(Q_n ∩ a⊥)^2 = |a|^2 f(0)^2, exact.
Rational cube_section_volume_squared(std::span<const Rational> a);

/// vol_{n-1}(Q_n ∩ a⊥). Exact up to the final square root for rational
/// input and for double input with at most kMaxExactCubeTerms nonzero
/// coordinates; compensated floating point beyond that.
double cube_section_volume(std::span<const Rational> a);
double cube_section_volume(const CoeffVector& a);

/// Monte Carlo E|Σ a_j ξ_j|^{-q} for ξ_j i.i.d. uniform on S^2 ⊂ R^3.
///
/// The coordinate of largest |a_j| is integrated in closed form given the
/// others, which keeps the estimator bounded; for n = 1 the result is exact
/// with zero standard error. Requires 0 < q <= 1 and samples >= 1000.
EstimateWithCI sphere_sum_negative_moment(const CoeffVector& a, double q, std::int64_t samples, std::uint64_t seed);

/// vol_n(K ∩ {|<x, a/|a|>| <= δ}) / (2δ) by rejection sampling from the
/// bounding box.
EstimateWithCI mc_section_volume(const Body& body, const CoeffVector& a, double slab_halfwidth, std::int64_t samples,
                                 std::uint64_t seed);

/// Monte Carlo n-volume of a body from its bounding box.
EstimateWithCI mc_body_volume(const Body& body, std::int64_t samples, std::uint64_t seed);

/// g(t) = -log E|Σ e^{t_j} ξ_j|^{-q}, with delta-method standard error.
EstimateWithCI logbm_functional(const CoeffVector& t, double q, std::int64_t samples, std::uint64_t seed);

struct ProbeSegment {
  std::vector<double> u;
  std::vector<double> v;
  double gap = 0.0;  // g((u+v)/2) - (g(u)+g(v))/2
  double std_error = 0.0;
  double z = 0.0;
};

struct ProbeReport {
  double q = 1.0;
  std::size_t n = 0;
  std::int64_t samples_per_point = 0;
  std::uint64_t seed = 0;
  std::vector<ProbeSegment> segments;
  /// Segments with gap > 3 std errors.
  int violations = 0;

  /// Header "segment,u1..un,v1..vn,gap,std_error,z" and one row per segment.
  std::string to_csv() const;
};

/// Midpoint test of t ↦ g(t) on random segments of `box`, with common random
/// numbers across u, v and the midpoint. Reports; does not assert.
ProbeReport logbm_convexity_probe(double q, const Box& box, int segments, std::int64_t samples_per_point,
                                  std::uint64_t seed);

}  // namespace symsect

#endif  // SYMSECT_SECTIONS_HPP_
