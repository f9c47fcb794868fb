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

#include "symsect/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <type_traits>

namespace symsect {

namespace {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
T abs_value(const T& v) {
  return v < T(0) ? T(-v) : v;
}

template <class T>
void check_pair(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size()) throw std::invalid_argument("majorization: dimension mismatch");
  if (x.empty()) throw std::invalid_argument("majorization: empty vector");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < T(0) || y[i] < T(0)) throw std::invalid_argument("majorization: negative coordinate");
  }
}

template <class T>
std::vector<T> sorted_desc(std::span<const T> x) {
  std::vector<T> out(x.begin(), x.end());
  std::sort(out.begin(), out.end(), [](const T& a, const T& b) { return a > b; });
  return out;
}

template <class T>
std::vector<std::size_t> argsort_desc(std::span<const T> x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  return idx;
}

// Comparison slack: zero for exact scalars, relative to `scale` for doubles.
template <class T>
T slack(const T& scale) {
  if constexpr (std::is_same_v<T, double>) {
    return kMajorizationRelTol * std::max(1.0, scale);
  } else {
    return T(0);
  }
}

template <class T>
bool majorizes_impl(std::span<const T> x, std::span<const T> y) {
  check_pair(x, y);
  const auto xs = sorted_desc(x);
  const auto ys = sorted_desc(y);
  T sx(0), sy(0);
  for (const auto& v : xs) sx += v;
  for (const auto& v : ys) sy += v;
  const T tol = slack<T>(std::max(sx, sy));
  if (abs_value(T(sx - sy)) > tol) return false;
  T px(0), py(0);
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    px += xs[k];
    py += ys[k];
    if (px > py + tol) return false;
  }
  return true;
}

// Kuhn augmenting path restricted to entries accepted by `allowed`.
template <class Allowed>
bool try_augment(std::size_t row, std::size_t n, const Allowed& allowed, std::vector<char>& seen,
                 std::vector<std::optional<std::size_t>>& row_of_col) {
  for (std::size_t c = 0; c < n; ++c) {
    if (!allowed(row, c) || seen[c]) continue;
    seen[c] = 1;
    if (!row_of_col[c] || try_augment(*row_of_col[c], n, allowed, seen, row_of_col)) {
      row_of_col[c] = row;
      return true;
    }
  }
  return false;
}

template <class Allowed>
std::optional<Permutation> perfect_matching(std::size_t n, const Allowed& allowed) {
  std::vector<std::optional<std::size_t>> row_of_col(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<char> seen(n, 0);
    if (!try_augment(r, n, allowed, seen, row_of_col)) return std::nullopt;
  }
  Permutation perm(n);
  for (std::size_t c = 0; c < n; ++c) perm[*row_of_col[c]] = c;
  return perm;
}

// Matching on entries > floor that maximizes its smallest entry.
template <class T>
std::optional<Permutation> bottleneck_matching(const Matrix<T>& m, const T& floor) {
  const std::size_t n = m.size();
  std::vector<T> levels;
  for (const auto& row : m) {
    for (const auto& v : row) {
      if (v > floor) levels.push_back(v);
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  if (levels.empty()) return std::nullopt;
  // Largest level admitting a perfect matching on entries >= level.
  std::optional<Permutation> best;
  std::size_t lo = 0, hi = levels.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const T& level = levels[mid];
    auto match = perfect_matching(n, [&](std::size_t r, std::size_t c) { return m[r][c] >= level; });
    if (match) {
      best = std::move(match);
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return best;
}

// Null vector of a (rows x cols) matrix with rows < cols, via reduced row
// echelon form with partial pivoting.
template <class T>
std::vector<T> null_vector(Matrix<T> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::vector<std::size_t> pivot_col_of_row;
  std::vector<char> is_pivot(cols, 0);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = r;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (abs_value(a[i][c]) > abs_value(a[best][c])) best = i;
    }
    if (abs_value(a[best][c]) <= slack<T>(T(1))) continue;
    std::swap(a[r], a[best]);
    const T inv = T(1) / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == T(0)) continue;
      const T f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col_of_row.push_back(c);
    is_pivot[c] = 1;
    ++r;
  }
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<T> mu(cols, T(0));
  mu[free_col] = T(1);
  for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) mu[pivot_col_of_row[i]] = -a[i][free_col];
  return mu;
}

// Carathéodory reduction: the points y_σ share the same coordinate sum, so
// n of them always suffice.
template <class T>
void caratheodory_reduce(PermutationMixture<T>& mix, std::span<const T> y) {
  const std::size_t n = y.size();
  while (mix.terms.size() > n) {
    const std::size_t k = mix.terms.size();
    Matrix<T> a(n + 1, std::vector<T>(k, T(0)));
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < n; ++i) a[i][j] = y[mix.terms[j].perm[i]];
      a[n][j] = T(1);
    }
    const auto mu = null_vector(std::move(a));
    std::optional<std::size_t> arg;
    T theta(0);
    for (std::size_t j = 0; j < k; ++j) {
      if (mu[j] > slack<T>(T(0))) {
        T ratio = mix.terms[j].weight / mu[j];
        if (!arg || ratio < theta) {
          theta = ratio;
          arg = j;
        }
      }
    }
    if (!arg) return;
    for (std::size_t j = 0; j < k; ++j) mix.terms[j].weight -= theta * mu[j];
    mix.terms[*arg].weight = T(0);
    std::erase_if(mix.terms, [](const MixtureTerm<T>& t) { return t.weight <= slack<T>(T(0)); });
  }
}

template <class T>
PermutationMixture<T> decompose(std::span<const T> x, std::span<const T> y) {
  check_pair(x, y);
  if (!majorizes_impl(x, y)) throw NotMajorized("permutation_mixture_decomposition: x is not majorized by y");
  const std::size_t n = x.size();
  const auto ox = argsort_desc(x);
  const auto oy = argsort_desc(y);
  std::vector<T> xs(n), z(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = x[ox[i]];
    z[i] = y[oy[i]];
  }
  T total(0);
  for (const auto& v : z) total += v;
  const T tol = slack<T>(total);

  // z = D * sorted(y); each T-transform fixes one more coordinate of z to x.
  Matrix<T> d(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = T(1);
  for (std::size_t step = 0; step < 2 * n; ++step) {
    std::optional<std::size_t> j;
    for (std::size_t i = n; i-- > 0;) {
      if (z[i] - xs[i] > tol) {
        j = i;
        break;
      }
    }
    if (!j) break;
    std::optional<std::size_t> k;
    for (std::size_t i = *j + 1; i < n; ++i) {
      if (xs[i] - z[i] > tol) {
        k = i;
        break;
      }
    }
    if (!k) break;
    const T delta = std::min<T>(z[*j] - xs[*j], xs[*k] - z[*k]);
    const T lambda = T(1) - delta / (z[*j] - z[*k]);
    z[*j] -= delta;
    z[*k] += delta;
    for (std::size_t c = 0; c < n; ++c) {
      const T rj = d[*j][c];
      const T rk = d[*k][c];
      d[*j][c] = lambda * rj + (T(1) - lambda) * rk;
      d[*k][c] = (T(1) - lambda) * rj + lambda * rk;
    }
  }

  Matrix<T> m(n, std::vector<T>(n, T(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[ox[r]][oy[c]] = d[r][c];
  }

  // Greedy Birkhoff-von Neumann extraction.
  PermutationMixture<T> mix;
  const T floor = slack<T>(T(1)) * T(static_cast<double>(n));
  T remaining(1);
  while (remaining > floor) {
    auto perm = bottleneck_matching(m, floor);
    if (!perm) break;
    T w = m[0][(*perm)[0]];
    for (std::size_t r = 1; r < n; ++r) w = std::min<T>(w, m[r][(*perm)[r]]);
    for (std::size_t r = 0; r < n; ++r) m[r][(*perm)[r]] -= w;
    remaining -= w;
    mix.terms.push_back({w, std::move(*perm)});
  }
  if constexpr (std::is_same_v<T, double>) {
    // Fold the floating residue back into the weights.
    const T sum = mix.total_weight();
    for (auto& t : mix.terms) t.weight /= sum;
  }
  const std::size_t bound = (n - 1) * (n - 1) + 1;
  if (mix.terms.size() > bound) caratheodory_reduce(mix, y);
  return mix;
}

template <class T>
void robin_hood_step(std::vector<T>& x, Rng& rng, auto&& draw_delta) {
  const std::size_t n = x.size();
  if (n < 2) return;
  // Up to a few attempts to find an unequal pair; equal vectors stay put.
  for (int attempt = 0; attempt < 16; ++attempt) {
    auto i = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
    if (x[i] < x[j]) std::swap(i, j);
    if (!(x[i] > x[j])) continue;
    const T delta = draw_delta(T(x[i] - x[j]) / T(2));
    x[i] -= delta;
    x[j] += delta;
    return;
  }
}

}  // namespace

template <class Scalar>
std::vector<Scalar> PermutationMixture<Scalar>::apply(std::span<const Scalar> y) const {
  std::vector<Scalar> out(y.size(), Scalar(0));
  for (const auto& term : terms) {
    for (std::size_t i = 0; i < y.size(); ++i) out[i] += term.weight * y[term.perm[i]];
  }
  return out;
}

template <class Scalar>
Scalar PermutationMixture<Scalar>::total_weight() const {
  Scalar sum(0);
  for (const auto& t : terms) sum += t.weight;
  return sum;
}

template struct PermutationMixture<double>;
template struct PermutationMixture<Rational>;

CoeffVector nonincreasing_rearrangement(const CoeffVector& x) {
  return CoeffVector(sorted_desc(x.values()));
}

RationalVector nonincreasing_rearrangement(std::span<const Rational> x) { return sorted_desc(x); }

bool majorizes(const CoeffVector& x, const CoeffVector& y) { return majorizes_impl(x.values(), y.values()); }

bool majorizes(std::span<const Rational> x, std::span<const Rational> y) { return majorizes_impl(x, y); }

PermutationMixture<Rational> permutation_mixture_decomposition(std::span<const Rational> x,
                                                               std::span<const Rational> y) {
  return decompose(x, y);
}

PermutationMixture<double> permutation_mixture_decomposition(const CoeffVector& x, const CoeffVector& y) {
  return decompose(x.values(), y.values());
}

std::vector<double> robin_hood_transfers(std::span<const double> y, int transfers, Rng& rng) {
  std::vector<double> x(y.begin(), y.end());
  for (int k = 0; k < transfers; ++k) {
    // δ uniform on (0, half].
    robin_hood_step(x, rng, [&](double half) { return half * rng.uniform_open0(); });
  }
  return x;
}

RationalVector robin_hood_transfers(std::span<const Rational> y, int transfers, Rng& rng) {
  RationalVector x(y.begin(), y.end());
  for (int k = 0; k < transfers; ++k) {
    robin_hood_step(x, rng, [&](const Rational& half) { return half * Rational(rng.uniform_int(1, 64), 64); });
  }
  return x;
}

}  // namespace symsect
