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

// Moments of Rademacher sums by exhaustive sign enumeration.
//
// All expectations here are exact averages over the 2^n sign vectors
// (2^(n-1) after the ε -> -ε symmetry), not samples. Inputs are capped at
// 30 coordinates.

#ifndef SYMSECT_RADEMACHER_HPP_
#define SYMSECT_RADEMACHER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "symsect/types.hpp"

namespace symsect {

/// Moment exponent p >= 1.
class MomentOrder {
 public:
  /// Throws std::invalid_argument for p < 1 or non-finite p.
  explicit MomentOrder(double p);

  double value() const noexcept { return p_; }
  bool is_integer() const noexcept;

 private:
  double p_;
};

struct MomentResult {
  double value = 0.0;
  /// Present when the input was rational and p a positive integer.
  std::optional<Rational> exact;
};

/// E|Σ x_j ε_j|^p.
MomentResult abs_moment(const CoeffVector& x, MomentOrder p);
/// Exact when p is an integer; otherwise falls back to floating evaluation.
MomentResult abs_moment(std::span<const Rational> x, MomentOrder p);

/// log E|Σ e^{t_j} ε_j|^p, evaluated with the maximal t_j factored out.
double phi(const CoeffVector& t, MomentOrder p);

/// (E[Y ε_j])_j for the Hölder-extremal Y = sgn(X)|X|^{p-1} / ‖X‖_p^{p-1},
/// X = Σ e^{t_j} ε_j.
CoeffVector dual_witness_correlations(const CoeffVector& t, MomentOrder p);

/// min over signs of |Σ ε_j e^{t_j}| divided by Σ e^{t_j}. phi(·, p) is
/// smooth on the ball where every sign sum keeps its sign, which contains
/// all t' with max |t'_j - t_j| < log1p(margin).
double sign_margin(const CoeffVector& t);

/// E‖Σ e^{t_j} ε_j v_j‖^p with the Euclidean norm on R^d.
double hilbert_abs_moment(std::span<const CoeffVector> vectors, const CoeffVector& t, MomentOrder p);

/// Law of |X| for a symmetric variable X with finitely many atoms.
struct DiscreteSymmetricLaw {
  struct Atom {
    double magnitude;
    double probability;
  };
  std::vector<Atom> atoms;

  static DiscreteSymmetricLaw point_mass(double magnitude) { return {{{magnitude, 1.0}}}; }
  /// Throws std::invalid_argument on negative entries or total mass != 1.
  void validate() const;
};

/// E|Σ e^{t_j} X_j|^p with X_j = ε_j M_j and M_j ~ laws[j] independent.
double symmetric_mixture_abs_moment(std::span<const DiscreteSymmetricLaw> laws, const CoeffVector& t,
                                    MomentOrder p);

struct ConvexityReport {
  std::int64_t points_tested = 0;
  std::int64_t midpoint_violations = 0;
  /// Largest f(mid) - (f(u) + f(v))/2 seen; <= tolerance when convex.
  double worst_violation = 0.0;
  double min_hessian_eigenvalue = 0.0;
  std::int64_t hessian_violations = 0;
  std::int64_t skipped = 0;
  /// Midpoints left out of the Hessian test by the filter.
  std::int64_t hessian_filtered = 0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
};

struct ConvexityProbeOptions {
  int trials = 200;
  double fd_step = 1e-3;
  double tolerance = 1e-10;
  bool hessian = true;
  std::uint64_t seed = 0;
  /// When set, the Hessian is only evaluated at midpoints it accepts (for
  /// example points whose stencil stays off a kink of f).
  std::function<bool(const CoeffVector&)> hessian_filter;
};

using ScalarField = std::function<double(const CoeffVector&)>;

struct EigenRange {
  double min = 0.0;
  double max = 0.0;
};

/// Extreme eigenvalues of the central finite-difference Hessian of f at x
/// with step h (mixed terms from half steps along e_i ± e_k). NaN when f is
/// not finite on the stencil.
EigenRange fd_hessian_eigen_range(const ScalarField& f, const CoeffVector& x, double step);

/// Midpoint test on `trials` random segments of `box` plus a central
/// finite-difference Hessian at each midpoint. A Hessian counts as a
/// violation when its least eigenvalue is below -1e-6 (1 + |largest|).
/// Points where f is not finite are skipped and counted.
ConvexityReport convexity_probe(const ScalarField& f, const Box& box, const ConvexityProbeOptions& options);

}  // namespace symsect

#endif  // SYMSECT_RADEMACHER_HPP_
