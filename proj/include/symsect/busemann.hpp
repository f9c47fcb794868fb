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

// Busemann norm N_K(x) = |x| / vol(K ∩ x⊥), the section functional
// V_K(a) = (‖a‖₁/|a|) vol(K ∩ a⊥), and property suites over them.
//
// For the cube both are rational in rational input: with f(0) the density
// at zero of Σ a_j U_j, N = 1/f(0) and V = ‖a‖₁ f(0).

#ifndef SYMSECT_BUSEMANN_HPP_
#define SYMSECT_BUSEMANN_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "symsect/sections.hpp"
#include "symsect/types.hpp"

namespace symsect {

enum class SectionMode { Exact, MonteCarlo };

struct McPolicy {
  std::int64_t samples = 200000;
  double slab_halfwidth = 0.01;
  std::uint64_t seed = 0;
};

/// Value of a section-derived quantity with its provenance.
struct Evaluation {
  double value = 0.0;
  double std_error = 0.0;
  SectionMode mode = SectionMode::Exact;
  std::optional<Rational> exact;
};

/// Where section volumes come from. The exact cube backend works in any
/// dimension; a Monte Carlo backend is tied to its body's dimension.
class SectionBackend {
 public:
  static SectionBackend exact_cube();
  /// Requires policy.samples >= 2e5 unless `allow_small_budget` is set.
  static SectionBackend monte_carlo(Body body, McPolicy policy, bool allow_small_budget = false);

  SectionMode mode() const noexcept { return mode_; }
  /// Fixed dimension of a Monte Carlo backend; nullopt for the exact cube.
  std::optional<std::size_t> dim() const noexcept;
  bool one_symmetric() const noexcept;
  const McPolicy& policy() const noexcept { return policy_; }
  std::string name() const;

  /// vol_{n-1}(K ∩ x⊥). Monte Carlo seeds are derived from the policy seed
  /// and the bit pattern of x, so repeated calls agree.
  Evaluation section(const CoeffVector& x) const;

 private:
  SectionBackend() = default;

  SectionMode mode_ = SectionMode::Exact;
  std::optional<Body> body_;
  McPolicy policy_;
};

/// Exact cube values for rational input; N(0) = 0.
Rational cube_busemann_norm(std::span<const Rational> x);
Rational cube_v_functional(std::span<const Rational> a);

/// N_K(x); N_K(0) = 0.
Evaluation busemann_norm(const SectionBackend& backend, const CoeffVector& x);
/// V_K(a); throws for a = 0.
Evaluation v_functional(const SectionBackend& backend, const CoeffVector& a);
/// β_K = V_K(1, ..., 1). `n` is required for the exact cube backend and
/// must match a Monte Carlo backend's dimension. Throws for bodies not
/// flagged 1-symmetric.
Evaluation beta(const SectionBackend& backend, std::size_t n);

struct PropertySuiteReport {
  std::string suite;
  int trials = 0;
  int violations = 0;
  /// Smallest slack seen; negative means the inequality failed by that much.
  double worst_margin = 0.0;
  std::uint64_t seed = 0;
  /// Exact mode: the fixed tolerance. Monte Carlo: the largest 3σ band used.
  double tolerance = 0.0;

  // Grid check, monotonicity suite only.
  int grid_points = 0;
  double grid_max = 0.0;
  double corner_value = 0.0;
  bool grid_at_corner = true;

  std::string to_json() const;
};

struct SuiteOptions {
  int trials = 500;
  std::uint64_t seed = 0;
  /// Dimensions drawn uniformly from [min_dim, max_dim]; a Monte Carlo
  /// backend overrides both with its own dimension.
  std::size_t min_dim = 1;
  std::size_t max_dim = 8;
  double tolerance = 1e-9;
};

/// V_K(x) >= V_K(y) for majorization pairs x ≺ y from 1 to 5 Robin-Hood
/// transfers (plus some reflexive pairs).
PropertySuiteReport schur_concavity_suite(const SectionBackend& backend, const SuiteOptions& options);
/// N(x+y) <= N(x) + N(y) and N(λx) = |λ| N(x).
PropertySuiteReport triangle_suite(const SectionBackend& backend, const SuiteOptions& options);
/// N(x + δe_j) >= N(x) on R_+^n, and the max of N over the 5-point-per-axis
/// grid of [0,1]^n (n <= 4) sits at the all-ones corner.
PropertySuiteReport coordinate_monotonicity_suite(const SectionBackend& backend, const SuiteOptions& options);

}  // namespace symsect

#endif  // SYMSECT_BUSEMANN_HPP_
