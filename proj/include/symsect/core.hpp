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

// Majorization order, rearrangements and permutation-mixture decompositions.

#ifndef SYMSECT_CORE_HPP_
#define SYMSECT_CORE_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "symsect/random.hpp"
#include "symsect/types.hpp"

namespace symsect {

class NotMajorized : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Relative tolerance for comparing totals and partial sums of floating
/// inputs in the majorization order.
inline constexpr double kMajorizationRelTol = 1e-12;

/// Coordinates sorted nonincreasing. Signs are kept: callers that want the
/// rearrangement of |x| take absolute values first.
CoeffVector nonincreasing_rearrangement(const CoeffVector& x);
RationalVector nonincreasing_rearrangement(std::span<const Rational> x);

/// True iff x is majorized by y (x ≺ y). Both inputs must be nonnegative and
/// of equal dimension; throws std::invalid_argument otherwise.
bool majorizes(const CoeffVector& x, const CoeffVector& y);
bool majorizes(std::span<const Rational> x, std::span<const Rational> y);

/// A permutation σ acts on y by (y_σ)_i = y[σ[i]].
using Permutation = std::vector<std::size_t>;

template <class Scalar>
struct MixtureTerm {
  Scalar weight;
  Permutation perm;
};

/// Convex combination of coordinate permutations. `apply(y)` returns
/// Σ λ_σ y_σ.
template <class Scalar>
struct PermutationMixture {
  std::vector<MixtureTerm<Scalar>> terms;

  std::vector<Scalar> apply(std::span<const Scalar> y) const;
  Scalar total_weight() const;
};

/// Writes x as a convex combination of coordinate permutations of y,
/// given x ≺ y. Built from at most n-1 T-transforms composed into a doubly
/// stochastic matrix, which is then split greedily into permutation
/// matrices. The result has at most (n-1)^2 + 1 terms.
///
/// Throws NotMajorized when x ≺ y fails.
PermutationMixture<Rational> permutation_mixture_decomposition(std::span<const Rational> x,
                                                               std::span<const Rational> y);
PermutationMixture<double> permutation_mixture_decomposition(const CoeffVector& x,
                                                             const CoeffVector& y);

/// Applies `transfers` Robin-Hood moves to y: pick y_i > y_j and move
/// δ ∈ (0, (y_i - y_j)/2] from i to j. The result is majorized by y.
std::vector<double> robin_hood_transfers(std::span<const double> y, int transfers, Rng& rng);

/// Exact variant; δ is (y_i - y_j)/2 scaled by a random multiple of 1/64.
RationalVector robin_hood_transfers(std::span<const Rational> y, int transfers, Rng& rng);

}  // namespace symsect

#endif  // SYMSECT_CORE_HPP_
