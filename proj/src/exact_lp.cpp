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

#include "exact_lp.hpp"

#include <stdexcept>

namespace symsect::detail {

// Tableau for
//   max r  s.t.  -a_i·x + r <= 0,  Σx <= 1,  r <= 1,  x, r >= 0.
// The right-hand side is nonnegative, so the all-slack basis is feasible
// and no phase 1 is needed.
std::optional<RationalVector> strict_cone_witness(const std::vector<StrictRow>& rows, std::size_t dim) {
  const std::size_t m = rows.size();
  const std::size_t num_rows = m + 2;
  const std::size_t r_col = dim;
  const std::size_t num_cols = dim + 1 + num_rows;
  const std::size_t rhs = num_cols;

  std::vector<std::vector<Rational>> t(num_rows, std::vector<Rational>(num_cols + 1, Rational(0)));
  std::vector<std::size_t> basis(num_rows);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != dim) throw std::invalid_argument("strict_cone_witness: row dimension mismatch");
    for (std::size_t j = 0; j < dim; ++j) t[i][j] = -rows[i][j];
    t[i][r_col] = 1;
  }
  for (std::size_t j = 0; j < dim; ++j) t[m][j] = 1;
  t[m][rhs] = 1;
  t[m + 1][r_col] = 1;
  t[m + 1][rhs] = 1;
  for (std::size_t i = 0; i < num_rows; ++i) {
    t[i][dim + 1 + i] = 1;
    basis[i] = dim + 1 + i;
  }
  std::vector<Rational> obj(num_cols + 1, Rational(0));
  obj[r_col] = -1;

  for (;;) {
    std::size_t enter = num_cols;
    for (std::size_t j = 0; j < num_cols; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == num_cols) break;

    std::size_t leave = num_rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < num_rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == num_rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    // r <= 1 bounds the objective, so the ratio test always finds a row.
    if (leave == num_rows) throw std::logic_error("strict_cone_witness: unbounded tableau");

    auto& prow = t[leave];
    const Rational inv = Rational(1) / prow[enter];
    for (auto& v : prow) {
      if (v != 0) v *= inv;
    }
    for (std::size_t i = 0; i < num_rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= num_cols; ++j) {
        if (prow[j] != 0) t[i][j] -= f * prow[j];
      }
    }
    if (obj[enter] != 0) {
      const Rational f = obj[enter];
      for (std::size_t j = 0; j <= num_cols; ++j) {
        if (prow[j] != 0) obj[j] -= f * prow[j];
      }
    }
    basis[leave] = enter;
  }

  // Optimal objective value sits in obj[rhs].
  if (obj[rhs] <= 0) return std::nullopt;
  RationalVector x(dim, Rational(0));
  for (std::size_t i = 0; i < num_rows; ++i) {
    if (basis[i] < dim) x[basis[i]] = t[i][rhs];
  }
  return x;
}

}  // namespace symsect::detail
