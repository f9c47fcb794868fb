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

// Internal: enumeration of signed sums Σ ε_j x_j over sign vectors with
// ε_0 = +1, and compensated accumulation.

#ifndef SYMSECT_SRC_SIGN_SUMS_HPP_
#define SYMSECT_SRC_SIGN_SUMS_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "symsect/types.hpp"

namespace symsect::detail {

inline constexpr std::size_t kMaxSignDim = 30;
inline constexpr unsigned kGrayBlockBits = 12;

inline void check_sign_budget(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": empty coefficient vector");
  if (n > kMaxSignDim) {
    throw BudgetExceeded(std::string(what) + ": dimension " + std::to_string(n) +
                         " exceeds enumeration budget of " + std::to_string(kMaxSignDim));
  }
}

/// Sign of coordinate j (0-based) under `mask`: bit j-1 set means ε_j = -1.
inline int sign_of(std::uint64_t mask, std::size_t j) noexcept {
  if (j == 0) return 1;
  return ((mask >> (j - 1)) & 1U) ? -1 : 1;
}

/// Calls visit(sum, mask) for each of the 2^(n-1) sign vectors with ε_0 = +1.
///
/// Low coordinates are walked in Gray-code order with one add/subtract per
/// step; the high prefix is re-summed from scratch every block, which bounds
/// floating drift to one block length. `Elem` needs copy, += and -=.
template <class Elem, class Visit>
void for_each_signed_sum(std::span<const Elem> x, Visit&& visit) {
  const std::size_t n = x.size();
  const std::size_t free_dims = n - 1;
  const unsigned low_bits = static_cast<unsigned>(free_dims < kGrayBlockBits ? free_dims : kGrayBlockBits);
  const std::size_t high_bits = free_dims - low_bits;
  const std::uint64_t low_count = std::uint64_t{1} << low_bits;
  const std::uint64_t high_count = std::uint64_t{1} << high_bits;
  for (std::uint64_t high = 0; high < high_count; ++high) {
    const std::uint64_t high_mask = high << low_bits;
    Elem sum = x[0];
    for (std::size_t j = 1; j < n; ++j) {
      if (sign_of(high_mask, j) > 0) {
        sum += x[j];
      } else {
        sum -= x[j];
      }
    }
    std::uint64_t low_mask = 0;
    visit(static_cast<const Elem&>(sum), high_mask);
    for (std::uint64_t k = 1; k < low_count; ++k) {
      const unsigned bit = static_cast<unsigned>(std::countr_zero(k));
      const std::size_t j = bit + 1;
      low_mask ^= std::uint64_t{1} << bit;
      if (low_mask & (std::uint64_t{1} << bit)) {
        sum -= x[j];
        sum -= x[j];
      } else {
        sum += x[j];
        sum += x[j];
      }
      visit(static_cast<const Elem&>(sum), high_mask | low_mask);
    }
  }
}

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (v >= 0 ? v : -v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace symsect::detail

#endif  // SYMSECT_SRC_SIGN_SUMS_HPP_
