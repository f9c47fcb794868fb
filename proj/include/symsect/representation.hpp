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

// E|Σ x_j ε_j| as a maximum of finitely many linear forms.
//
// On the cone T_n = {x_1 >= ... >= x_n >= 0} the L1 norm of a Rademacher
// sum is max_{a ∈ A_n} <a, x> for a finite set A_n ⊂ T_n of vectors
// α(y) = (E[ε_j sgn(Σ y_i ε_i)])_j. We build A_n from one point per
// full-dimensional cell of the arrangement {Σ ε_i x_i = 0} inside T_n.

#ifndef SYMSECT_REPRESENTATION_HPP_
#define SYMSECT_REPRESENTATION_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "symsect/types.hpp"

namespace symsect {

/// A point of T_n: nonincreasing and nonnegative.
class ConePoint {
 public:
  /// Throws std::invalid_argument if x is not in T_n.
  explicit ConePoint(CoeffVector x);

  const CoeffVector& coords() const noexcept { return coords_; }
  std::size_t dim() const noexcept { return coords_.dim(); }

 private:
  CoeffVector coords_;
};

bool in_cone(std::span<const Rational> x);

/// α_j(x) = E[ε_j sgn(Σ x_i ε_i)], exact. Denominators divide 2^(n-1).
RationalVector alpha(std::span<const Rational> x);
RationalVector alpha(const CoeffVector& x);

/// Finite, deduplicated set of vectors in T_n, stored in canonical
/// (lexicographically increasing) order.
class RepresentationSet {
 public:
  RepresentationSet(std::size_t n, std::vector<RationalVector> members);

  std::size_t n() const noexcept { return n_; }
  const std::vector<RationalVector>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  /// First line n, then one member per line as space-separated num/den.
  std::string serialize() const;
  static RepresentationSet parse(const std::string& text);

  friend bool operator==(const RepresentationSet&, const RepresentationSet&) = default;

 private:
  std::size_t n_;
  std::vector<RationalVector> members_;
};

inline constexpr std::size_t kMaxRepresentationDim = 8;

/// A_n from the full-dimensional cells of the sign arrangement in T_n.
/// Throws BudgetExceeded for n > 8.
RepresentationSet build_representation_set(std::size_t n);

/// max_{a ∈ A} <a, x> for x ∈ T_n.
Rational evaluate_representation(std::span<const Rational> x, const RepresentationSet& set);
double evaluate_representation(const ConePoint& x, const RepresentationSet& set);

/// Extends the representation to all nonnegative x by sorting.
Rational full_representation(std::span<const Rational> x, const RepresentationSet& set);
double full_representation(const CoeffVector& x, const RepresentationSet& set);

/// log E|Σ e^{t_j} ε_j| as max over permutations σ and a ∈ A of
/// log Σ_j a_j e^{t_σ(j)}, enumerating every permutation.
double log_l1_moment_via_representation(const CoeffVector& t, const RepresentationSet& set);

}  // namespace symsect

#endif  // SYMSECT_REPRESENTATION_HPP_
