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

#include "symsect/chessboard.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "symsect/busemann.hpp"

namespace symsect {

namespace {

using Cell = std::vector<std::int64_t>;
using IntDir = std::vector<std::int64_t>;

struct CellRange {
  std::vector<std::int64_t> lo;  // inclusive
  std::vector<std::int64_t> hi;  // inclusive
};

CellRange lattice_box(const LatticeSpec& spec) {
  CellRange r;
  const auto N = static_cast<std::int64_t>(spec.N);
  for (std::size_t j = 0; j < spec.n; ++j) {
    if (!spec.body) {
      r.lo.push_back(0);
      r.hi.push_back(N - 1);
    } else {
      const double h = spec.body->half_widths()[j] * static_cast<double>(N);
      r.lo.push_back(static_cast<std::int64_t>(std::floor(-h)));
      r.hi.push_back(static_cast<std::int64_t>(std::ceil(h)) - 1);
    }
  }
  return r;
}

bool vertex_inside(const Body& body, std::size_t N, const std::vector<std::int64_t>& v, std::vector<double>& scratch) {
  const auto n = static_cast<std::int64_t>(N);
  switch (body.kind()) {
    case BodyKind::Cube:
      return std::all_of(v.begin(), v.end(), [n](std::int64_t c) { return 2 * std::abs(c) <= n; });
    case BodyKind::CrossPolytope: {
      std::int64_t s = 0;
      for (auto c : v) s += std::abs(c);
      return s <= n;
    }
    case BodyKind::LpBall:
      if (body.p() == 1.0) {
        std::int64_t s = 0;
        for (auto c : v) s += std::abs(c);
        return s <= n;
      }
      [[fallthrough]];
    case BodyKind::Oracle:
      for (std::size_t j = 0; j < v.size(); ++j) scratch[j] = static_cast<double>(v[j]) / static_cast<double>(N);
      return body.contains(scratch);
  }
  return false;
}

// Primitive integer vector parallel to a rational direction.
IntDir primitive_direction(std::span<const Rational> direction, std::int64_t magnitude_limit) {
  if (std::all_of(direction.begin(), direction.end(), [](const Rational& v) { return v == 0; })) {
    throw std::invalid_argument("chessboard: direction must be nonzero");
  }
  Integer d(1);
  for (const auto& v : direction) d = lcm(d, denominator(v));
  std::vector<Integer> big;
  Integer g(0);
  for (const auto& v : direction) {
    big.push_back(numerator(v) * (d / denominator(v)));
    g = gcd(g, abs(big.back()));
  }
  IntDir out;
  for (auto& b : big) {
    b /= g;
    if (abs(b) > magnitude_limit) {
      throw BudgetExceeded("chessboard: direction needs integer entries beyond the 64-bit counting range");
    }
    out.push_back(b.convert_to<std::int64_t>());
  }
  return out;
}

std::int64_t magnitude_limit(const CellRange& box) {
  std::int64_t extent = 1;
  for (std::size_t j = 0; j < box.lo.size(); ++j) {
    extent = std::max({extent, std::abs(box.lo[j]), std::abs(box.hi[j]) + 1});
  }
  const auto dims = static_cast<std::int64_t>(box.lo.size());
  return (std::numeric_limits<std::int64_t>::max() / 4) / (dims * (extent + 1));
}

RationalVector to_rationals(const IntDir& a) {
  RationalVector r;
  for (auto v : a) r.emplace_back(v);
  return r;
}

struct Sweep {
  std::int64_t count = 0;
  std::int64_t level = 0;  // best offset is (level + 1/2) / N
};

Sweep sweep(const std::vector<Cell>& cells, const IntDir& a, std::vector<std::int64_t>& levels) {
  std::int64_t neg = 0, width = 0;
  for (auto v : a) {
    if (v < 0) neg += v;
    width += std::abs(v);
  }
  levels.resize(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::int64_t s = neg;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * cells[c][j];
    levels[c] = s;
  }
  std::sort(levels.begin(), levels.end());
  Sweep best;
  std::size_t lo = 0;
  for (std::size_t hi = 0; hi < levels.size(); ++hi) {
    while (levels[hi] - levels[lo] > width - 1) ++lo;
    const auto count = static_cast<std::int64_t>(hi - lo + 1);
    if (count > best.count) best = {count, levels[hi]};
  }
  return best;
}

CutCountResult sweep_result(const LatticeSpec& spec, const std::vector<Cell>& cells, const IntDir& a,
                            std::vector<std::int64_t>& scratch) {
  CutCountResult r;
  r.cells_in_body = static_cast<std::int64_t>(cells.size());
  const auto s = sweep(cells, a, scratch);
  r.count = s.count;
  r.hyperplane.normal = to_rationals(a);
  r.hyperplane.offset = (Rational(s.level) + Rational(1, 2)) / Rational(static_cast<long>(spec.N));
  return r;
}

// Canonical representative of ±u: first nonzero entry positive.
IntDir canonical(IntDir u) {
  for (auto v : u) {
    if (v == 0) continue;
    if (v < 0) {
      for (auto& c : u) c = -c;
    }
    break;
  }
  return u;
}

IntDir reduce(IntDir u) {
  std::int64_t g = 0;
  for (auto v : u) g = std::gcd(g, std::abs(v));
  if (g > 1) {
    for (auto& v : u) v /= g;
  }
  return u;
}

// Every combinatorially distinct normal direction for a planar point set
// with coordinate differences bounded by (w, h): the normals of all
// difference vectors and the bisectors of angularly adjacent ones.
std::vector<IntDir> planar_candidates(std::int64_t w, std::int64_t h) {
  std::set<IntDir> critical;
  for (std::int64_t dx = -w; dx <= w; ++dx) {
    for (std::int64_t dy = -h; dy <= h; ++dy) {
      if (dx == 0 && dy == 0) continue;
      critical.insert(canonical(reduce({-dy, dx})));
    }
  }
  std::vector<IntDir> sorted(critical.begin(), critical.end());
  // Canonical vectors have angle in (-π/2, π/2]; order by angle.
  std::sort(sorted.begin(), sorted.end(), [](const IntDir& u, const IntDir& v) {
    return u[0] * v[1] - u[1] * v[0] > 0;
  });
  std::vector<IntDir> out = sorted;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& u = sorted[i];
    if (i + 1 < sorted.size()) {
      const auto& v = sorted[i + 1];
      out.push_back(reduce({u[0] + v[0], u[1] + v[1]}));
    } else {
      // Between the last direction and the first one turned by π.
      const auto& v = sorted.front();
      out.push_back(canonical(reduce({u[0] - v[0], u[1] - v[1]})));
    }
  }
  return out;
}

}  // namespace

void LatticeSpec::validate() const {
  if (N == 0) throw std::invalid_argument("LatticeSpec: N must be >= 1");
  if (n == 0) throw std::invalid_argument("LatticeSpec: dimension must be >= 1");
  if (body && body->dim() != n) throw std::invalid_argument("LatticeSpec: body dimension mismatch");
}

std::string LatticeSpec::name() const {
  std::ostringstream out;
  out << (body ? body->name() : "unit-cube[n=" + std::to_string(n) + "]") << " N=" << N;
  return out.str();
}

std::vector<std::vector<std::int64_t>> cells_in_body(const LatticeSpec& spec) {
  spec.validate();
  const auto box = lattice_box(spec);
  const std::size_t n = spec.n;
  double total = 1.0;
  for (std::size_t j = 0; j < n; ++j) total *= static_cast<double>(box.hi[j] - box.lo[j] + 1);
  if (total > static_cast<double>(kMaxLatticeCells)) {
    throw BudgetExceeded("chessboard: lattice box of " + std::to_string(static_cast<long long>(total)) +
                         " cells exceeds budget of " + std::to_string(kMaxLatticeCells));
  }
  std::vector<Cell> cells;
  if (total < 1.0) return cells;
  Cell z = box.lo;
  std::vector<std::int64_t> vertex(n);
  std::vector<double> scratch(n);
  for (;;) {
    bool inside = true;
    if (spec.body) {
      for (std::uint64_t mask = 0; inside && mask < (std::uint64_t{1} << n); ++mask) {
        for (std::size_t j = 0; j < n; ++j) vertex[j] = z[j] + static_cast<std::int64_t>((mask >> j) & 1U);
        inside = vertex_inside(*spec.body, spec.N, vertex, scratch);
      }
    }
    if (inside) cells.push_back(z);
    std::size_t j = 0;
    for (; j < n && ++z[j] > box.hi[j]; ++j) z[j] = box.lo[j];
    if (j == n) break;
  }
  return cells;
}

CutCountResult count_cut_cells(const LatticeSpec& spec, const Hyperplane& h) {
  spec.validate();
  if (h.normal.size() != spec.n) throw std::invalid_argument("count_cut_cells: normal dimension mismatch");
  const auto cells = cells_in_body(spec);
  const auto box = lattice_box(spec);
  // Scale to a primitive integer normal a = s * normal (s > 0 rational);
  // the offset scales along.
  const IntDir a = primitive_direction(h.normal, magnitude_limit(box));
  std::size_t k = 0;
  while (h.normal[k] == 0) ++k;
  const Rational scale = Rational(a[k]) / h.normal[k];
  const Rational tau = h.offset * scale * Rational(static_cast<long>(spec.N));
  std::int64_t neg = 0, width = 0;
  for (auto v : a) {
    if (v < 0) neg += v;
    width += std::abs(v);
  }
  // L < tau < L + width  <=>  floor(tau - width) + 1 <= L <= ceil(tau) - 1.
  auto floor_of = [](const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) q -= 1;
    return q;
  };
  const Integer lo_big = floor_of(tau - Rational(width)) + 1;
  const Integer hi_big = -floor_of(-tau) - 1;
  CutCountResult r;
  r.hyperplane = h;
  r.cells_in_body = static_cast<std::int64_t>(cells.size());
  for (const auto& z : cells) {
    std::int64_t s = neg;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * z[j];
    if (lo_big <= s && s <= hi_big) ++r.count;
  }
  return r;
}

CutCountResult offset_sweep_max(const LatticeSpec& spec, std::span<const Rational> direction) {
  spec.validate();
  if (direction.size() != spec.n) throw std::invalid_argument("offset_sweep_max: direction dimension mismatch");
  const auto cells = cells_in_body(spec);
  const IntDir a = primitive_direction(direction, magnitude_limit(lattice_box(spec)));
  std::vector<std::int64_t> scratch;
  return sweep_result(spec, cells, a, scratch);
}

CutCountResult offset_sweep_max(const LatticeSpec& spec, const CoeffVector& direction) {
  return offset_sweep_max(spec, exact_rational(direction.values()));
}

SearchStrategy parse_strategy(const std::string& name) {
  if (name == "diagonal") return SearchStrategy::Diagonal;
  if (name == "diagonal-perturb") return SearchStrategy::DiagonalPerturb;
  if (name == "axis") return SearchStrategy::Axis;
  if (name == "pairs") return SearchStrategy::Pairs;
  if (name == "all") return SearchStrategy::All;
  throw std::invalid_argument("unknown search strategy '" + name + "'");
}

std::string to_string(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::Diagonal:
      return "diagonal";
    case SearchStrategy::DiagonalPerturb:
      return "diagonal-perturb";
    case SearchStrategy::Axis:
      return "axis";
    case SearchStrategy::Pairs:
      return "pairs";
    case SearchStrategy::All:
      return "all";
  }
  return "?";
}

SearchResult direction_search(const LatticeSpec& spec, SearchStrategy strategy) {
  spec.validate();
  const std::size_t n = spec.n;
  if (strategy == SearchStrategy::Pairs && n != 2) {
    throw std::invalid_argument("direction_search: pair mode needs n = 2");
  }
  const auto cells = cells_in_body(spec);
  const auto box = lattice_box(spec);
  const auto limit = magnitude_limit(box);

  std::vector<IntDir> dirs;
  const bool all = strategy == SearchStrategy::All;
  if (strategy == SearchStrategy::Diagonal || strategy == SearchStrategy::DiagonalPerturb || all) {
    dirs.emplace_back(n, 1);
  }
  if (strategy == SearchStrategy::DiagonalPerturb || all) {
    const auto N = static_cast<std::int64_t>(spec.N);
    const auto nn = static_cast<std::int64_t>(n);
    const std::int64_t base = nn * N * N;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::int64_t k = 1; k <= nn * N; ++k) {
        for (int sign : {1, -1}) {
          IntDir d(n, base);
          d[j] += sign * k;
          dirs.push_back(reduce(d));
        }
      }
    }
  }
  if (strategy == SearchStrategy::Axis || all) {
    for (std::size_t j = 0; j < n; ++j) {
      IntDir d(n, 0);
      d[j] = 1;
      dirs.push_back(d);
    }
  }
  bool exhaustive = false;
  if (n == 2 && (strategy == SearchStrategy::Pairs || all)) {
    // Vertex coordinates span the lattice box plus one.
    const auto w = box.hi[0] - box.lo[0] + 1;
    const auto h = box.hi[1] - box.lo[1] + 1;
    for (auto& d : planar_candidates(w, h)) dirs.push_back(std::move(d));
    exhaustive = true;
  }
  if (n == 1) exhaustive = true;

  SearchResult result;
  std::vector<std::int64_t> scratch;
  bool first = true;
  for (const auto& d : dirs) {
    for (auto v : d) {
      if (std::abs(v) > limit) throw BudgetExceeded("direction_search: candidate direction too large");
    }
    auto r = sweep_result(spec, cells, d, scratch);
    ++result.candidates;
    if (first || r.count > result.best.count) result.best = std::move(r);
    first = false;
  }
  result.exhaustive = exhaustive;
  result.max_candidate_count = result.best.count;
  return result;
}

std::vector<AsymptoticRow> asymptotic_report(const LatticeSpec& base, const std::vector<std::size_t>& sizes,
                                             SearchStrategy strategy, std::uint64_t seed) {
  base.validate();
  double beta_value;
  if (!base.body || base.body->kind() == BodyKind::Cube) {
    beta_value = to_double(cube_v_functional(RationalVector(base.n, Rational(1))));
  } else {
    McPolicy policy;
    policy.seed = seed;
    beta_value = beta(SectionBackend::monte_carlo(*base.body, policy), base.n).value;
  }
  std::vector<AsymptoticRow> rows;
  for (std::size_t N : sizes) {
    LatticeSpec spec = base;
    spec.N = N;
    auto found = direction_search(spec, strategy);
    AsymptoticRow row;
    row.N = N;
    row.count = found.best.count;
    row.normalized = static_cast<double>(row.count) / std::pow(static_cast<double>(N), static_cast<double>(base.n - 1));
    row.beta = beta_value;
    row.ratio = row.normalized / beta_value;
    row.best = std::move(found.best);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string chessboard_csv(const std::vector<AsymptoticRow>& rows) {
  std::ostringstream out;
  out << "N,direction,offset,count,ratio\n";
  for (const auto& row : rows) {
    out << row.N << ',';
    for (std::size_t j = 0; j < row.best.hyperplane.normal.size(); ++j) {
      if (j) out << ' ';
      out << to_string(row.best.hyperplane.normal[j]);
    }
    out << ',' << to_string(row.best.hyperplane.offset) << ',' << row.count << ',';
    // Shortest text that round-trips.
    char buf[32];
    out.write(buf, std::to_chars(buf, buf + sizeof buf, row.normalized).ptr - buf);
    out << '\n';
  }
  return out.str();
}

}  // namespace symsect
