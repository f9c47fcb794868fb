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

// Runs every acceptance check and prints one PASS/FAIL line per check with
// its wall time. Exit status is 0 only if all pass.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"symsect acceptance checks"};
  std::uint64_t seed = 42;
  std::vector<int> only;
  app.add_option("--seed", seed, "Seed for every stochastic check");
  app.add_option("--only", only, "Restrict to these check ids");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  double total = 0.0;
  symsect::verify::run_acceptance(seed, only, [&](const symsect::verify::CriterionResult& r) {
    if (!r.passed) ++failed;
    total += r.seconds;
    std::string limit = r.time_limit ? " limit " + std::to_string(static_cast<int>(*r.time_limit)) + "s" : "";
    std::printf("criterion %2d: %s  %s (%.2fs%s)\n    %s\n", r.id, r.passed ? "PASS" : "FAIL", r.label.c_str(),
                r.seconds, limit.c_str(), r.detail.c_str());
    std::fflush(stdout);
  });
  std::printf("%s: %d failed, seed %llu, %.1fs total\n", failed ? "FAIL" : "PASS", failed,
              static_cast<unsigned long long>(seed), total);
  return failed ? 1 : 0;
}
