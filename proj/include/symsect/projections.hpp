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

// The shadow P_t of the stretched cross-polytope conv{±e^{t_j} e_j} on the
// hyperplane (1, ..., 1)⊥.
//
// By Cauchy's projection formula, summing over the 2^n facets,
//
//   vol_{n-1}(P_t) = c_n e^{Σ t_j} E|Σ e^{-t_j} ε_j|,
//   c_n = 2^{n-1} / (√n (n-1)!).
//
// c_n is fixed against the planar hull oracle below (√3 at n = 3, t = 0).
// A printed form with 2^{n-1} n in place of c_n in the literature overshoots
// that value by a constant factor; log-convexity in t does not see it.

#ifndef SYMSECT_PROJECTIONS_HPP_
#define SYMSECT_PROJECTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symsect/rademacher.hpp"
#include "symsect/types.hpp"

namespace symsect {

inline constexpr std::size_t kMaxProjectionDim = 25;

/// Vertices ±e^{t_j} Proj e_j in the Helmert basis of (1, ..., 1)⊥,
/// u_k = (1, ..., 1, -k, 0, ..., 0) / √(k(k+1)), k = 1..n-1. At n = 3 that
/// is u_1 = (1,-1,0)/√2, u_2 = (1,1,-2)/√6.
struct ProjectedPolytope {
  CoeffVector t;
  /// 2n points ordered +v_1, -v_1, +v_2, -v_2, ...; each has n-1 coordinates.
  std::vector<std::vector<double>> vertices;

  static ProjectedPolytope from_exponents(const CoeffVector& t);
};

/// Orthonormal basis of (1, ..., 1)⊥ in R^n, as n-1 rows.
std::vector<std::vector<double>> helmert_basis(std::size_t n);

/// c_n as above. Throws for n = 0 or n > kMaxProjectionDim.
double cauchy_constant(std::size_t n);

/// vol_{n-1}(P_t) from the Rademacher L1 moment. n <= 25.
double cauchy_projection_volume(const CoeffVector& t);
/// log vol_{n-1}(P_t) without forming e^{Σ t_j}.
double log_cauchy_projection_volume(const CoeffVector& t);

/// Area of the planar convex hull of the n = 3 shadow (monotone chain and
/// shoelace). Throws unless t has 3 coordinates.
double hull_projection_volume(const CoeffVector& t);

struct SaroglouReport {
  /// Midpoint test of t -> log vol(P_t) (constant dropped).
  ConvexityReport convexity;
  /// max |log vol(P_t) - log c_n - Σ t_j - phi(-t, 1)| over tested points.
  double max_reflection_gap = 0.0;
  /// max |phi(-t, 1) - log max_{σ, a ∈ A_n} Σ a_j e^{-t_σ(j)}|; only for
  /// n <= kMaxRepresentationCheckDim, otherwise 0 with no points.
  double max_representation_gap = 0.0;
  std::int64_t representation_points = 0;
};

inline constexpr std::size_t kMaxRepresentationCheckDim = 5;

/// Convexity of t -> Σ t_j + log E|Σ e^{-t_j} ε_j| on random segments of
/// `box`, with cross-checks against phi after t -> -t and against the
/// max-of-linear-forms representation. n <= 20.
SaroglouReport saroglou_convexity_check(const Box& box, int segments, std::uint64_t seed, double tolerance = 1e-10);

}  // namespace symsect

#endif  // SYMSECT_PROJECTIONS_HPP_
