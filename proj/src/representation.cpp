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

#include "symsect/representation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "exact_lp.hpp"
#include "sign_sums.hpp"

namespace symsect {

namespace {

using detail::StrictRow;

Rational dot(const StrictRow& row, std::span<const Rational> x) {
  Rational acc(0);
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 1) {
      acc += x[j];
    } else if (row[j] == -1) {
      acc -= x[j];
    } else if (row[j] != 0) {
      acc += x[j] * row[j];
    }
  }
  return acc;
}

StrictRow negated(StrictRow row) {
  for (auto& v : row) v = -v;
  return row;
}

struct Cell {
  std::vector<StrictRow> rows;
  RationalVector witness;
};

bool lex_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

ConePoint::ConePoint(CoeffVector x) : coords_(std::move(x)) {
  for (std::size_t j = 0; j < coords_.dim(); ++j) {
    if (coords_[j] < 0 || (j + 1 < coords_.dim() && coords_[j] < coords_[j + 1])) {
      throw std::invalid_argument("ConePoint: coordinates must be nonincreasing and nonnegative");
    }
  }
}

bool in_cone(std::span<const Rational> x) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < 0 || (j + 1 < x.size() && x[j] < x[j + 1])) return false;
  }
  return true;
}

RationalVector alpha(std::span<const Rational> x) {
  detail::check_sign_budget(x.size(), "alpha");
  const std::size_t n = x.size();
  std::vector<std::int64_t> counts(n, 0);
  detail::for_each_signed_sum(x, [&](const Rational& s, std::uint64_t mask) {
    const int sg = sign(s);
    if (sg == 0) return;
    for (std::size_t j = 0; j < n; ++j) counts[j] += sg * detail::sign_of(mask, j);
  });
  const Rational denom(Integer(1) << static_cast<unsigned>(n - 1));
  RationalVector out;
  out.reserve(n);
  for (auto c : counts) out.push_back(Rational(c) / denom);
  return out;
}

RationalVector alpha(const CoeffVector& x) { return alpha(exact_rational(x.values())); }

RepresentationSet::RepresentationSet(std::size_t n, std::vector<RationalVector> members)
    : n_(n), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.size() != n_) throw std::invalid_argument("RepresentationSet: member dimension mismatch");
    if (!in_cone(m)) throw std::invalid_argument("RepresentationSet: member outside T_n");
  }
  std::sort(members_.begin(), members_.end(), lex_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

std::string RepresentationSet::serialize() const {
  std::ostringstream out;
  out << n_ << '\n';
  for (const auto& m : members_) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out << ' ';
      out << numerator(m[j]) << '/' << denominator(m[j]);
    }
    out << '\n';
  }
  return out.str();
}

RepresentationSet RepresentationSet::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("RepresentationSet: missing dimension line");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(line, &used);
    if (used != line.size() || n == 0) throw std::invalid_argument("bad");
  } catch (const std::exception&) {
    throw std::invalid_argument("RepresentationSet: bad dimension line '" + line + "'");
  }
  std::vector<RationalVector> members;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    RationalVector member;
    std::string token;
    while (row >> token) member.push_back(parse_rational(token));
    if (member.size() != n) throw std::invalid_argument("RepresentationSet: member of wrong length");
    members.push_back(std::move(member));
  }
  return RepresentationSet(n, std::move(members));
}

// Only full-dimensional cells are visited, so boundary values of α (ties and
// zero coordinates) are never produced. This loses nothing: on the closure
// of a cell E|Σ x_j ε_j| equals the linear form <α(cell), x>, so the maximum
// over generic cells already attains it everywhere on T_n.
RepresentationSet build_representation_set(std::size_t n) {
  if (n == 0) throw std::invalid_argument("build_representation_set: n must be positive");
  if (n > kMaxRepresentationDim) {
    throw BudgetExceeded("build_representation_set: n = " + std::to_string(n) + " exceeds budget of " +
                         std::to_string(kMaxRepresentationDim));
  }
  std::vector<StrictRow> base;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    StrictRow r(n, 0);
    r[i] = 1;
    r[i + 1] = -1;
    base.push_back(std::move(r));
  }
  StrictRow last(n, 0);
  last[n - 1] = 1;
  base.push_back(std::move(last));

  auto root = detail::strict_cone_witness(base, n);
  std::vector<Cell> cells{{base, std::move(*root)}};

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    StrictRow h(n);
    for (std::size_t j = 0; j < n; ++j) h[j] = detail::sign_of(mask, j);
    // Hyperplanes of constant sign on T_n split nothing.
    auto with = [&](const std::vector<StrictRow>& rows, const StrictRow& extra) {
      std::vector<StrictRow> r = rows;
      r.push_back(extra);
      return r;
    };
    const bool pos_possible = detail::strict_cone_witness(with(base, h), n).has_value();
    const bool neg_possible = detail::strict_cone_witness(with(base, negated(h)), n).has_value();
    if (!pos_possible || !neg_possible) continue;

    std::vector<Cell> next;
    next.reserve(cells.size() * 2);
    for (auto& cell : cells) {
      const int at_witness = sign(dot(h, cell.witness));
      for (int side : {1, -1}) {
        const StrictRow row = side > 0 ? h : negated(h);
        if (at_witness == side) {
          next.push_back({with(cell.rows, row), cell.witness});
        } else if (auto w = detail::strict_cone_witness(with(cell.rows, row), n)) {
          next.push_back({with(cell.rows, row), std::move(*w)});
        }
      }
    }
    cells = std::move(next);
  }

  std::vector<RationalVector> members;
  members.reserve(cells.size());
  for (const auto& cell : cells) members.push_back(alpha(cell.witness));
  return RepresentationSet(n, std::move(members));
}

Rational evaluate_representation(std::span<const Rational> x, const RepresentationSet& set) {
  if (x.size() != set.n()) throw std::invalid_argument("evaluate_representation: dimension mismatch");
  if (set.size() == 0) throw std::invalid_argument("evaluate_representation: empty representation set");
  if (!in_cone(x)) throw std::invalid_argument("evaluate_representation: point outside T_n");
  Rational best;
  bool first = true;
  for (const auto& a : set.members()) {
    Rational v(0);
    for (std::size_t j = 0; j < x.size(); ++j) v += a[j] * x[j];
    if (first || v > best) best = std::move(v);
    first = false;
  }
  return best;
}

double evaluate_representation(const ConePoint& x, const RepresentationSet& set) {
  if (x.dim() != set.n()) throw std::invalid_argument("evaluate_representation: dimension mismatch");
  if (set.size() == 0) throw std::invalid_argument("evaluate_representation: empty representation set");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& a : set.members()) {
    double v = 0.0;
    for (std::size_t j = 0; j < x.dim(); ++j) v += to_double(a[j]) * x.coords()[j];
    best = std::max(best, v);
  }
  return best;
}

Rational full_representation(std::span<const Rational> x, const RepresentationSet& set) {
  for (const auto& v : x) {
    if (v < 0) throw std::invalid_argument("full_representation: negative coordinate");
  }
  RationalVector sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return evaluate_representation(sorted, set);
}

double full_representation(const CoeffVector& x, const RepresentationSet& set) {
  for (double v : x) {
    if (v < 0) throw std::invalid_argument("full_representation: negative coordinate");
  }
  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return evaluate_representation(ConePoint(CoeffVector(std::move(sorted))), set);
}

double log_l1_moment_via_representation(const CoeffVector& t, const RepresentationSet& set) {
  const std::size_t n = t.dim();
  if (n != set.n()) throw std::invalid_argument("log_l1_moment_via_representation: dimension mismatch");
  // Factor out e^{max t} to keep the exponentials in range.
  const double shift = *std::max_element(t.begin(), t.end());
  std::vector<double> e(n);
  for (std::size_t j = 0; j < n; ++j) e[j] = std::exp(t[j] - shift);
  std::vector<std::vector<double>> forms;
  for (const auto& a : set.members()) forms.push_back(to_double(a));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = -std::numeric_limits<double>::infinity();
  do {
    for (const auto& a : forms) {
      double v = 0.0;
      for (std::size_t j = 0; j < n; ++j) v += a[j] * e[perm[j]];
      if (v > 0) best = std::max(best, std::log(v));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best + shift;
}

}  // namespace symsect
