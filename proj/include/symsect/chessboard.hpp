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

// Counting open cells z + (0, 1/N)^n of the lattice (1/N)Z^n that lie in a
// convex body and meet a hyperplane.
//
// Directions are rational and scaled to primitive integer vectors a, cells
// are indexed by integer corners z, and the hyperplane <a, x> = t meets the
// open cell at z iff L_z < N t < L_z + ‖a‖₁ with L_z = <a, z> + Σ min(a_j, 0).
// All comparisons are exact.

#ifndef SYMSECT_CHESSBOARD_HPP_
#define SYMSECT_CHESSBOARD_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symsect/sections.hpp"
#include "symsect/types.hpp"

namespace symsect {

/// The lattice (1/N)Z^n restricted to the cells inside a body. Without a
/// body the region is the unit cube [0,1]^n.
struct LatticeSpec {
  std::size_t N = 1;
  std::size_t n = 1;
  std::optional<Body> body;

  /// Throws unless N >= 1, n >= 1 and the body (if any) has dimension n.
  void validate() const;
  std::string name() const;
};

/// Hyperplane {x : <normal, x> = offset}.
struct Hyperplane {
  RationalVector normal;
  Rational offset;
};

struct CutCountResult {
  Hyperplane hyperplane;
  std::int64_t count = 0;
  std::int64_t cells_in_body = 0;
};

inline constexpr std::int64_t kMaxLatticeCells = 10'000'000;

/// Cells of the bounding lattice box that lie in the body (closed cell ⊆ K,
/// checked at the 2^n vertices; exactly for cubes and cross-polytopes).
/// Throws BudgetExceeded when the box holds more than kMaxLatticeCells.
std::vector<std::vector<std::int64_t>> cells_in_body(const LatticeSpec& spec);

/// Number of cells inside the body whose interior meets h.
CutCountResult count_cut_cells(const LatticeSpec& spec, const Hyperplane& h);

/// Maximum of count_cut_cells over all offsets for a fixed direction. The
/// returned hyperplane has the primitive integer normal parallel to
/// `direction` and an offset at the middle of a best open interval.
CutCountResult offset_sweep_max(const LatticeSpec& spec, std::span<const Rational> direction);
CutCountResult offset_sweep_max(const LatticeSpec& spec, const CoeffVector& direction);

enum class SearchStrategy {
  Diagonal,         // (1, ..., 1)
  DiagonalPerturb,  // diagonal and (1, ..., 1) ± (k/(nN²)) e_j, k = 1..nN
  Axis,             // e_1, ..., e_n
  Pairs,            // n = 2: every combinatorially distinct direction
  All,              // union of the above that apply
};

SearchStrategy parse_strategy(const std::string& name);
std::string to_string(SearchStrategy s);

struct SearchResult {
  CutCountResult best;
  std::int64_t candidates = 0;
  /// True when the candidate set covers every direction (2D pair mode), so
  /// best.count equals C_K(N) rather than a lower bound.
  bool exhaustive = false;
  /// Largest count seen; equals best.count (kept to expose the check that
  /// no candidate exceeds the reported value).
  std::int64_t max_candidate_count = 0;
};

SearchResult direction_search(const LatticeSpec& spec, SearchStrategy strategy);

struct AsymptoticRow {
  std::size_t N = 0;
  std::int64_t count = 0;
  double normalized = 0.0;  // count / N^{n-1}
  double beta = 0.0;
  double ratio = 0.0;  // normalized / beta
  CutCountResult best;
};

/// One row per N. β is exact for cubes; other bodies use a Monte Carlo
/// section estimate with the given seed.
std::vector<AsymptoticRow> asymptotic_report(const LatticeSpec& base, const std::vector<std::size_t>& sizes,
                                             SearchStrategy strategy, std::uint64_t seed = 0);

/// CSV with columns N,direction,offset,count,ratio; direction entries are
/// space-separated and ratio is count / N^{n-1}.
std::string chessboard_csv(const std::vector<AsymptoticRow>& rows);

}  // namespace symsect

#endif  // SYMSECT_CHESSBOARD_HPP_
