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

// Internal: exact feasibility of homogeneous strict inequality systems.

#ifndef SYMSECT_SRC_EXACT_LP_HPP_
#define SYMSECT_SRC_EXACT_LP_HPP_

#include <optional>
#include <vector>

#include "symsect/types.hpp"

namespace symsect::detail {

/// Row a of a strict constraint a·x > 0, small integer coefficients.
using StrictRow = std::vector<int>;

/// Finds x >= 0 with a·x > 0 for every row, maximizing the common margin
/// under Σx <= 1 (exact rational simplex, Bland's rule). Returns nullopt
/// when the open cone is empty. Rows must imply x >= 0 for the answer to
/// describe the open cone rather than its intersection with the orthant.
std::optional<RationalVector> strict_cone_witness(const std::vector<StrictRow>& rows, std::size_t dim);

}  // namespace symsect::detail

#endif  // SYMSECT_SRC_EXACT_LP_HPP_
