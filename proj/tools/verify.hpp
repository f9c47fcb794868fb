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

// The acceptance checks, shared by `symsect verify-paper` and the
// standalone acceptance binary.

#ifndef SYMSECT_TOOLS_VERIFY_HPP_
#define SYMSECT_TOOLS_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace symsect::verify {

struct CriterionResult {
  int id = 0;
  /// The statement being checked.
  std::string label;
  bool passed = false;
  /// Deterministic summary of what was measured (no timings).
  std::string detail;
  double seconds = 0.0;
  std::optional<double> time_limit;
};

using ResultCallback = std::function<void(const CriterionResult&)>;

/// Number of criteria; ids run 1..kCriteria.
inline constexpr int kCriteria = 13;

/// Runs the selected criteria (all when `only` is empty) in id order. All
/// randomness derives from `seed`. `on_result` is called after each one.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& only = {},
                                            const ResultCallback& on_result = {});

}  // namespace symsect::verify

#endif  // SYMSECT_TOOLS_VERIFY_HPP_
