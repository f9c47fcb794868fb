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

#include "symsect/types.hpp"

#include <cctype>
#include <cmath>

namespace symsect {

namespace {

void check_finite(const std::vector<double>& coords) {
  if (coords.empty()) throw std::invalid_argument("CoeffVector: dimension must be at least 1");
  for (double c : coords) {
    if (!std::isfinite(c)) throw std::invalid_argument("CoeffVector: non-finite coordinate");
  }
}

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("bad number: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bad number: '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(digits));
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (exp_part.empty() || exp_part.size() > 6) {
      throw std::invalid_argument("bad number: '" + std::string(text) + "'");
    }
    exponent = std::stol(parse_integer(exp_part, text).str());
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view frac = s.substr(dot + 1);
    digits = std::string(s.substr(0, dot)) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    digits = std::string(s);
  }
  Rational value(parse_integer(digits, text));
  Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::labs(exponent)));
  if (exponent >= 0) {
    value *= Rational(scale);
  } else {
    value /= Rational(scale);
  }
  return negative ? Rational(-value) : value;
}

}  // namespace

CoeffVector::CoeffVector(std::initializer_list<double> coords) : coords_(coords) {
  check_finite(coords_);
}

CoeffVector::CoeffVector(std::vector<double> coords) : coords_(std::move(coords)) {
  check_finite(coords_);
}

void Box::validate() const {
  if (low.empty() || low.size() != high.size()) throw std::invalid_argument("Box: bad dimensions");
  for (std::size_t i = 0; i < low.size(); ++i) {
    if (!std::isfinite(low[i]) || !std::isfinite(high[i]) || low[i] > high[i]) {
      throw std::invalid_argument("Box: need finite low <= high");
    }
  }
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    Integer n = parse_integer(num, text);
    Integer d = parse_integer(text.substr(slash + 1), text);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(n, d);
    return negative ? Rational(-r) : r;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("exact_rational: non-finite value");
  return Rational(x);
}

RationalVector exact_rational(std::span<const double> x) {
  RationalVector out;
  out.reserve(x.size());
  for (double v : x) out.push_back(exact_rational(v));
  return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::vector<double> to_double(std::span<const Rational> x) {
  std::vector<double> out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(to_double(v));
  return out;
}

}  // namespace symsect
