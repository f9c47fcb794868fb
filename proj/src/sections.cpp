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

#include "symsect/sections.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "sign_sums.hpp"
#include "symsect/random.hpp"

namespace symsect {

namespace {

using detail::CompensatedSum;

constexpr std::int64_t kChunk = std::int64_t{1} << 16;

void check_q(double q, const char* what) {
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument(std::string(what) + ": q must lie in (0, 1]");
}

void check_samples(std::int64_t samples, std::int64_t min, const char* what) {
  if (samples < min) throw std::invalid_argument(std::string(what) + ": need at least " + std::to_string(min) + " samples");
}

// Calls body(rng, count) for consecutive chunks, each with its own substream.
template <class Body>
void for_each_chunk(std::int64_t samples, std::uint64_t seed, Body&& body) {
  std::uint64_t chunk = 0;
  for (std::int64_t done = 0; done < samples; done += kChunk, ++chunk) {
    Rng rng(derive_seed(seed, chunk));
    body(rng, std::min(kChunk, samples - done));
  }
}

// E_ξ |v + r ξ|^{-q} for ξ uniform on S^2, as a function of |v| and r.
double sphere_shell_moment(double v_norm, double r, double q) {
  const double big = std::max(v_norm, r);
  const double small = std::min(v_norm, r);
  if (q == 1.0 || small == 0.0) return std::pow(big, -q);
  const double s = small / big;
  const double alpha = 2.0 - q;
  const double diff = std::expm1(alpha * std::log1p(s)) - std::expm1(alpha * std::log1p(-s));
  return std::pow(big, -q) * diff / (2.0 * alpha * s);
}

// One conditional sample of E|Σ c_j ξ_j|^{-q}: the largest coefficient's
// vector is integrated out.
double conditional_sample(std::span<const double> c, std::span<const std::array<double, 3>> xi, double q) {
  std::size_t k = 0;
  for (std::size_t j = 1; j < c.size(); ++j) {
    if (std::fabs(c[j]) > std::fabs(c[k])) k = j;
  }
  double v[3] = {0.0, 0.0, 0.0};
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j == k) continue;
    for (int d = 0; d < 3; ++d) v[d] += c[j] * xi[j][d];
  }
  return sphere_shell_moment(std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]), std::fabs(c[k]), q);
}

void draw_sphere(Rng& rng, std::vector<std::array<double, 3>>& xi) {
  for (auto& x : xi) x = rng.unit_sphere3();
}

Integer factorial(unsigned k) {
  Integer f(1);
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

Integer pow_int(const Integer& b, unsigned e) {
  Integer r(1);
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

// Nonzero |a_j|, exact.
RationalVector nonzero_magnitudes(std::span<const Rational> a) {
  RationalVector b;
  for (const auto& v : a) {
    if (v != 0) b.push_back(abs(v));
  }
  if (b.empty()) throw std::invalid_argument("cube section: direction must be nonzero");
  if (b.size() > kMaxCubeTerms) {
    throw BudgetExceeded("cube section: " + std::to_string(b.size()) + " nonzero coordinates exceed budget of " +
                         std::to_string(kMaxCubeTerms));
  }
  return b;
}

// Floating inclusion-exclusion for f(0) with b normalized to unit length.
double float_density_unit(std::vector<double> b) {
  const std::size_t m = b.size();
  double norm = 0.0;
  for (double v : b) norm += v * v;
  norm = std::sqrt(norm);
  long double half_sum = 0.0L;
  long double prod = 1.0L;
  for (auto& v : b) {
    v /= norm;
    half_sum += v;
    prod *= v;
  }
  half_sum /= 2.0L;
  long double sum = 0.0L, comp = 0.0L;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    long double s = half_sum;
    for (std::size_t j = 0; j < m; ++j) {
      if ((mask >> j) & 1U) s -= b[j];
    }
    if (s <= 0) continue;
    long double term = std::pow(s, static_cast<long double>(m - 1));
    if (std::popcount(mask) & 1) term = -term;
    const long double t = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  long double fact = 1.0L;
  for (std::size_t i = 2; i < m; ++i) fact *= static_cast<long double>(i);
  return static_cast<double>((sum + comp) / (fact * prod));
}

}  // namespace

Body Body::cube(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Body: dimension must be positive");
  Body b;
  b.kind_ = BodyKind::Cube;
  b.half_widths_.assign(n, 0.5);
  b.volume_ = 1.0;
  return b;
}

Body Body::cross_polytope(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Body: dimension must be positive");
  Body b;
  b.kind_ = BodyKind::CrossPolytope;
  b.p_ = 1.0;
  b.half_widths_.assign(n, 1.0);
  b.volume_ = std::exp(static_cast<double>(n) * std::log(2.0) - std::lgamma(static_cast<double>(n) + 1.0));
  return b;
}

Body Body::lp_ball(std::size_t n, double p) {
  if (n == 0) throw std::invalid_argument("Body: dimension must be positive");
  if (!std::isfinite(p) || p < 1.0) throw std::invalid_argument("Body: lp ball needs finite p >= 1");
  Body b;
  b.kind_ = BodyKind::LpBall;
  b.p_ = p;
  b.half_widths_.assign(n, 1.0);
  const double nd = static_cast<double>(n);
  b.volume_ = std::exp(nd * std::log(2.0) + nd * std::lgamma(1.0 + 1.0 / p) - std::lgamma(1.0 + nd / p));
  return b;
}

Body Body::oracle(std::size_t n, Membership contains, std::vector<double> half_widths, bool one_symmetric,
                  std::optional<double> volume) {
  if (n == 0 || half_widths.size() != n) throw std::invalid_argument("Body: oracle needs n half-widths");
  for (double h : half_widths) {
    if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("Body: degenerate bounding box");
  }
  if (!contains) throw std::invalid_argument("Body: oracle needs a membership predicate");
  if (volume && !(*volume > 0.0)) throw std::invalid_argument("Body: volume must be positive");
  Body b;
  b.kind_ = BodyKind::Oracle;
  b.half_widths_ = std::move(half_widths);
  b.one_symmetric_ = one_symmetric;
  b.volume_ = volume;
  b.oracle_ = std::move(contains);
  if (one_symmetric) {
    if (std::adjacent_find(b.half_widths_.begin(), b.half_widths_.end(), std::not_equal_to<>()) !=
        b.half_widths_.end()) {
      throw std::invalid_argument("Body: 1-symmetric oracle needs equal half-widths");
    }
    Rng rng(0x1517a11c);
    std::vector<double> x(n), y(n);
    std::vector<std::size_t> perm(n);
    for (int trial = 0; trial < 256; ++trial) {
      for (std::size_t i = 0; i < n; ++i) x[i] = rng.uniform(-b.half_widths_[i], b.half_widths_[i]);
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t i = n; i > 1; --i) {
        std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1))]);
      }
      for (std::size_t i = 0; i < n; ++i) y[i] = (rng.bits() & 1U) ? -x[perm[i]] : x[perm[i]];
      if (b.oracle_(x) != b.oracle_(y)) {
        throw std::invalid_argument("Body: oracle declared 1-symmetric fails a sign/permutation spot check");
      }
    }
  }
  return b;
}

bool Body::contains(std::span<const double> x) const {
  if (x.size() != dim()) throw std::invalid_argument("Body::contains: dimension mismatch");
  switch (kind_) {
    case BodyKind::Cube:
      return std::all_of(x.begin(), x.end(), [](double v) { return std::fabs(v) <= 0.5; });
    case BodyKind::CrossPolytope: {
      double s = 0.0;
      for (double v : x) s += std::fabs(v);
      return s <= 1.0;
    }
    case BodyKind::LpBall: {
      double s = 0.0;
      for (double v : x) s += std::pow(std::fabs(v), p_);
      return s <= 1.0;
    }
    case BodyKind::Oracle:
      return oracle_(x);
  }
  return false;
}

std::string Body::name() const {
  std::ostringstream out;
  switch (kind_) {
    case BodyKind::Cube:
      out << "cube";
      break;
    case BodyKind::CrossPolytope:
      out << "cross-polytope";
      break;
    case BodyKind::LpBall:
      out << "lp-ball(p=" << p_ << ")";
      break;
    case BodyKind::Oracle:
      out << "oracle";
      break;
  }
  out << "[n=" << dim() << "]";
  return out.str();
}

// f(0) = Σ_ε (-1)^|ε| ((Σb)/2 - ε·b)_+^{m-1} / ((m-1)! Π b). With b = B/D for
// integers B and D this is D Σ (-1)^|ε| (T_ε)_+^{m-1} / ((m-1)! Π B 2^{m-1})
// where T_ε = ΣB - 2 ε·B, so the sum runs in integers.
Rational cube_density_at_zero(std::span<const Rational> a) {
  const RationalVector b = nonzero_magnitudes(a);
  const std::size_t m = b.size();
  if (m == 1) return Rational(1) / b[0];
  Integer d(1);
  for (const auto& v : b) d = lcm(d, denominator(v));
  std::vector<Integer> big(m);
  Integer total(0), prod(1);
  for (std::size_t j = 0; j < m; ++j) {
    big[j] = numerator(b[j]) * (d / denominator(b[j]));
    total += big[j];
    prod *= big[j];
  }
  const auto e = static_cast<unsigned>(m - 1);
  Integer t = total;
  Integer acc = pow_int(t, e);
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << m); ++k) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(k));
    gray ^= std::uint64_t{1} << bit;
    if (gray & (std::uint64_t{1} << bit)) {
      t -= 2 * big[bit];
    } else {
      t += 2 * big[bit];
    }
    if (t <= 0) continue;
    if (std::popcount(gray) & 1) {
      acc -= pow_int(t, e);
    } else {
      acc += pow_int(t, e);
    }
  }
  return Rational(d * acc) / Rational(factorial(e) * prod * (Integer(1) << e));
}

Rational cube_section_volume_squared(std::span<const Rational> a) {
  const Rational density = cube_density_at_zero(a);
  Rational norm2(0);
  for (const auto& v : a) norm2 += v * v;
  return norm2 * density * density;
}

double cube_section_volume(std::span<const Rational> a) { return std::sqrt(to_double(cube_section_volume_squared(a))); }

double cube_section_volume(const CoeffVector& a) {
  std::size_t nonzero = 0;
  std::vector<double> b;
  for (double v : a) {
    if (v != 0.0) {
      ++nonzero;
      b.push_back(std::fabs(v));
    }
  }
  if (nonzero <= kMaxExactCubeTerms) return cube_section_volume(exact_rational(a.values()));
  if (nonzero > kMaxCubeTerms) {
    throw BudgetExceeded("cube_section_volume: " + std::to_string(nonzero) + " nonzero coordinates exceed budget of " +
                         std::to_string(kMaxCubeTerms));
  }
  return float_density_unit(std::move(b));
}

EstimateWithCI sphere_sum_negative_moment(const CoeffVector& a, double q, std::int64_t samples, std::uint64_t seed) {
  check_q(q, "sphere_sum_negative_moment");
  check_samples(samples, 1000, "sphere_sum_negative_moment");
  if (std::all_of(a.begin(), a.end(), [](double v) { return v == 0.0; })) {
    throw std::invalid_argument("sphere_sum_negative_moment: direction must be nonzero");
  }
  const std::size_t n = a.dim();
  std::vector<std::array<double, 3>> xi(n);
  CompensatedSum sum, sum2;
  for_each_chunk(samples, seed, [&](Rng& rng, std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) {
      draw_sphere(rng, xi);
      const double x = conditional_sample(a.values(), xi, q);
      sum.add(x);
      sum2.add(x * x);
    }
  });
  const double nd = static_cast<double>(samples);
  const double mean = sum.value() / nd;
  const double var = std::max(0.0, (sum2.value() - nd * mean * mean) / (nd - 1.0));
  return {mean, std::sqrt(var / nd), samples, seed};
}

EstimateWithCI mc_section_volume(const Body& body, const CoeffVector& a, double slab_halfwidth, std::int64_t samples,
                                 std::uint64_t seed) {
  const std::size_t n = body.dim();
  if (a.dim() != n) throw std::invalid_argument("mc_section_volume: dimension mismatch");
  if (!(slab_halfwidth > 0.0) || !std::isfinite(slab_halfwidth)) {
    throw std::invalid_argument("mc_section_volume: slab half-width must be positive");
  }
  check_samples(samples, 1, "mc_section_volume");
  double norm = 0.0;
  for (double v : a) norm += v * v;
  norm = std::sqrt(norm);
  if (norm == 0.0) throw std::invalid_argument("mc_section_volume: direction must be nonzero");
  const auto& h = body.half_widths();
  double box_volume = 1.0;
  for (double w : h) {
    if (!(w > 0.0)) throw std::invalid_argument("mc_section_volume: degenerate bounding box");
    box_volume *= 2.0 * w;
  }
  std::vector<double> unit(n), x(n);
  for (std::size_t j = 0; j < n; ++j) unit[j] = a[j] / norm;
  std::int64_t hits = 0;
  for_each_chunk(samples, seed, [&](Rng& rng, std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) {
      double proj = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = rng.uniform(-h[j], h[j]);
        proj += x[j] * unit[j];
      }
      if (std::fabs(proj) <= slab_halfwidth && body.contains(x)) ++hits;
    }
  });
  const double nd = static_cast<double>(samples);
  const double phat = static_cast<double>(hits) / nd;
  const double scale = box_volume / (2.0 * slab_halfwidth);
  return {scale * phat, scale * std::sqrt(phat * (1.0 - phat) / nd), samples, seed};
}

EstimateWithCI mc_body_volume(const Body& body, std::int64_t samples, std::uint64_t seed) {
  check_samples(samples, 1, "mc_body_volume");
  const std::size_t n = body.dim();
  const auto& h = body.half_widths();
  double box_volume = 1.0;
  for (double w : h) box_volume *= 2.0 * w;
  std::vector<double> x(n);
  std::int64_t hits = 0;
  for_each_chunk(samples, seed, [&](Rng& rng, std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < n; ++j) x[j] = rng.uniform(-h[j], h[j]);
      if (body.contains(x)) ++hits;
    }
  });
  const double nd = static_cast<double>(samples);
  const double phat = static_cast<double>(hits) / nd;
  return {box_volume * phat, box_volume * std::sqrt(phat * (1.0 - phat) / nd), samples, seed};
}

namespace {

// Coefficients e^{t_j - max t}; returns max t.
double shifted_exponentials(std::span<const double> t, std::vector<double>& c) {
  const double shift = *std::max_element(t.begin(), t.end());
  c.resize(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) c[j] = std::exp(t[j] - shift);
  return shift;
}

}  // namespace

EstimateWithCI logbm_functional(const CoeffVector& t, double q, std::int64_t samples, std::uint64_t seed) {
  check_q(q, "logbm_functional");
  check_samples(samples, 2, "logbm_functional");
  std::vector<double> c;
  const double shift = shifted_exponentials(t.values(), c);
  std::vector<std::array<double, 3>> xi(t.dim());
  CompensatedSum sum, sum2;
  for_each_chunk(samples, seed, [&](Rng& rng, std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) {
      draw_sphere(rng, xi);
      const double x = conditional_sample(c, xi, q);
      sum.add(x);
      sum2.add(x * x);
    }
  });
  const double nd = static_cast<double>(samples);
  const double mean = sum.value() / nd;
  const double var = std::max(0.0, (sum2.value() - nd * mean * mean) / (nd - 1.0));
  // E|Σ e^{t_j} ξ_j|^{-q} = e^{-q shift} mean.
  return {q * shift - std::log(mean), std::sqrt(var / nd) / mean, samples, seed};
}

ProbeReport logbm_convexity_probe(double q, const Box& box, int segments, std::int64_t samples_per_point,
                                  std::uint64_t seed) {
  check_q(q, "logbm_convexity_probe");
  box.validate();
  if (box.dim() == 0) throw std::invalid_argument("logbm_convexity_probe: empty box");
  if (segments < 1) throw std::invalid_argument("logbm_convexity_probe: segments must be >= 1");
  check_samples(samples_per_point, 2, "logbm_convexity_probe");
  const std::size_t n = box.dim();
  ProbeReport report;
  report.q = q;
  report.n = n;
  report.samples_per_point = samples_per_point;
  report.seed = seed;

  std::vector<std::array<double, 3>> xi(n);
  std::vector<double> cu, cv, cm, m(n);
  for (int s = 0; s < segments; ++s) {
    const std::uint64_t seg_seed = derive_seed(seed, static_cast<std::uint64_t>(s));
    Rng endpoints(seg_seed);
    ProbeSegment seg;
    seg.u.resize(n);
    seg.v.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      seg.u[j] = endpoints.uniform(box.low[j], box.high[j]);
      seg.v[j] = endpoints.uniform(box.low[j], box.high[j]);
      m[j] = 0.5 * (seg.u[j] + seg.v[j]);
    }
    const double su = shifted_exponentials(seg.u, cu);
    const double sv = shifted_exponentials(seg.v, cv);
    const double sm = shifted_exponentials(m, cm);

    // Sums and cross sums of the three per-sample values, for the
    // delta-method variance of the gap.
    std::array<CompensatedSum, 3> s1;
    std::array<CompensatedSum, 6> s2;
    for_each_chunk(samples_per_point, derive_seed(seg_seed, 1), [&](Rng& rng, std::int64_t count) {
      for (std::int64_t i = 0; i < count; ++i) {
        draw_sphere(rng, xi);
        const double x[3] = {conditional_sample(cu, xi, q), conditional_sample(cv, xi, q),
                             conditional_sample(cm, xi, q)};
        int k = 0;
        for (int a = 0; a < 3; ++a) {
          s1[a].add(x[a]);
          for (int b = a; b < 3; ++b) s2[k++].add(x[a] * x[b]);
        }
      }
    });
    const double nd = static_cast<double>(samples_per_point);
    double mean[3];
    for (int a = 0; a < 3; ++a) mean[a] = s1[a].value() / nd;
    // g(t) = q shift(t) - log mean(t); the shift parts are split out so the
    // linear n = 1 case cancels exactly.
    seg.gap = q * (sm - 0.5 * (su + sv)) + (-std::log(mean[2]) + 0.5 * (std::log(mean[0]) + std::log(mean[1])));
    const double coef[3] = {0.5 / mean[0], 0.5 / mean[1], -1.0 / mean[2]};
    double var = 0.0;
    int k = 0;
    for (int a = 0; a < 3; ++a) {
      for (int b = a; b < 3; ++b) {
        const double cov = (s2[k++].value() - s1[a].value() * s1[b].value() / nd) / (nd - 1.0);
        var += (a == b ? 1.0 : 2.0) * coef[a] * coef[b] * cov;
      }
    }
    seg.std_error = std::sqrt(std::max(0.0, var) / nd);
    if (seg.std_error > 0.0) {
      seg.z = seg.gap / seg.std_error;
    } else {
      seg.z = seg.gap == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), seg.gap);
    }
    if (seg.gap > 3.0 * seg.std_error) ++report.violations;
    report.segments.push_back(std::move(seg));
  }
  return report;
}

std::string ProbeReport::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "segment";
  for (std::size_t j = 1; j <= n; ++j) out << ",u" << j;
  for (std::size_t j = 1; j <= n; ++j) out << ",v" << j;
  out << ",gap,std_error,z\n";
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const auto& seg = segments[s];
    out << s;
    for (double x : seg.u) out << ',' << x;
    for (double x : seg.v) out << ',' << x;
    out << ',' << seg.gap << ',' << seg.std_error << ',' << seg.z << '\n';
  }
  return out.str();
}

}  // namespace symsect
