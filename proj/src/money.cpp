//------------------------------------------------------------------------------
//
//   Copyright 2026 The fairca authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "fairca/money.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fairca/errors.hpp"

namespace fairca {

using i128 = __int128;

namespace {

i128 i128_abs(i128 v) { return v < 0 ? -v : v; }

i128 i128_gcd(i128 a, i128 b) {
  a = i128_abs(a);
  b = i128_abs(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Division rounding toward negative infinity.
i128 floor_div(i128 n, i128 d) {
  i128 q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

std::int64_t narrow(i128 v, const char* what) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
    throw std::overflow_error(std::string("rational overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

// Reduced int64 inputs pass the constructor's own normalization untouched.
Ratio make_ratio(i128 num, i128 den, const char* what) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = i128_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Ratio(narrow(num, what), narrow(den, what));
}

}  // namespace

std::string format_minor(Money m, std::int64_t minor_units_per_unit) {
  std::int64_t scale = minor_units_per_unit;
  int digits = 0;
  while (scale > 1) {
    scale /= 10;
    ++digits;
  }
  std::int64_t a = m.cents < 0 ? -m.cents : m.cents;
  std::int64_t units = a / minor_units_per_unit;
  std::int64_t rest = a % minor_units_per_unit;
  std::ostringstream out;
  if (m.cents < 0) out << '-';
  out << units;
  if (digits > 0) {
    std::string frac = std::to_string(rest);
    out << '.' << std::string(digits - frac.size(), '0') << frac;
  }
  return out.str();
}

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  i128 n = num;
  i128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = i128_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n, "Ratio()");
  den_ = narrow(d, "Ratio()");
}

Ratio Ratio::operator+(const Ratio& o) const {
  return make_ratio(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_, "+");
}

Ratio Ratio::operator-(const Ratio& o) const {
  return make_ratio(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_, "-");
}

Ratio Ratio::operator*(const Ratio& o) const {
  return make_ratio(i128(num_) * o.num_, i128(den_) * o.den_, "*");
}

Ratio Ratio::operator/(const Ratio& o) const {
  if (o.num_ == 0) throw ValidationError("rational division by zero");
  return make_ratio(i128(num_) * o.den_, i128(den_) * o.num_, "/");
}

Ratio Ratio::operator-() const {
  Ratio r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::strong_ordering Ratio::operator<=>(const Ratio& o) const {
  i128 lhs = i128(num_) * o.den_;
  i128 rhs = i128(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t Ratio::floor() const {
  return narrow(floor_div(num_, den_), "floor");
}

std::int64_t Ratio::round_half_up() const {
  return narrow(floor_div(i128(num_) * 2 + den_, i128(den_) * 2), "round_half_up");
}

std::string Ratio::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Money round_half_up(const Ratio& cents) {
  return Money::from_cents(cents.round_half_up());
}

std::vector<Money> apportion(Money total, std::span<const Ratio> weights) {
  if (total.cents < 0) throw ValidationError("apportion: negative total");
  const std::size_t k = weights.size();
  if (k == 0) {
    if (total.cents != 0) throw ValidationError("apportion: no weights for nonzero total");
    return {};
  }
  Ratio sum = Ratio::zero();
  for (const Ratio& w : weights) {
    if (w.is_negative()) throw ValidationError("apportion: negative weight");
    sum = sum + w;
  }
  if (sum.is_zero()) {
    if (total.cents != 0) throw ValidationError("apportion: all-zero weights for nonzero total");
    return std::vector<Money>(k, Money::zero());
  }

  std::vector<Money> parts(k);
  std::vector<Ratio> remainders(k);
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < k; ++i) {
    Ratio share = Ratio::of_cents(total) * weights[i] / sum;
    std::int64_t fl = share.floor();
    parts[i] = Money::from_cents(fl);
    remainders[i] = share - Ratio(fl, 1);
    assigned += fl;
  }

  std::int64_t leftover = total.cents - assigned;
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainders[a] > remainders[b];  // ties keep lower index first
  });
  for (std::int64_t i = 0; i < leftover; ++i) {
    parts[order[static_cast<std::size_t>(i)]] += Money::from_cents(1);
  }
  return parts;
}

std::vector<Money> apportion(Money total, const std::vector<Money>& weights) {
  std::vector<Ratio> rw;
  rw.reserve(weights.size());
  for (Money w : weights) rw.push_back(Ratio::of_cents(w));
  return apportion(total, rw);
}

}  // namespace fairca
