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

#ifndef SYMSECT_TYPES_HPP_
#define SYMSECT_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace symsect {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                              boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using RationalVector = std::vector<Rational>;

/// Thrown when an enumeration or lattice budget would be exceeded.
class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Finite, nonempty sequence of real coordinates.
class CoeffVector {
 public:
  CoeffVector(std::initializer_list<double> coords);
  explicit CoeffVector(std::vector<double> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> values() const noexcept { return coords_; }
  const std::vector<double>& vec() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

 private:
  std::vector<double> coords_;
};

/// Monte Carlo estimate together with its standard error and provenance.
struct EstimateWithCI {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 1;
  std::uint64_t seed = 0;
};

/// Axis-aligned sampling box [low_i, high_i].
struct Box {
  std::vector<double> low;
  std::vector<double> high;

  static Box cube(std::size_t dim, double lo, double hi) {
    return Box{std::vector<double>(dim, lo), std::vector<double>(dim, hi)};
  }
  std::size_t dim() const noexcept { return low.size(); }
  /// Throws std::invalid_argument unless low <= high coordinatewise.
  void validate() const;
};

// Rational helpers.

/// Parses "p/q", an integer, or a finite decimal such as "-1.25e-3" into an
/// exact rational.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; integers print without a denominator.
std::string to_string(const Rational& r);

/// The exact rational value of a finite double.
Rational exact_rational(double x);
RationalVector exact_rational(std::span<const double> x);

double to_double(const Rational& r);
std::vector<double> to_double(std::span<const Rational> x);

}  // namespace symsect

#endif  // SYMSECT_TYPES_HPP_
