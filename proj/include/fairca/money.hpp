#pragma once
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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fairca {

/// Largest single amount (in minor units) accepted at ingestion.  Keeps the
/// exact-rational settlement arithmetic comfortably inside 64/128-bit
/// intermediates; pathological combinations beyond it fail loudly with
/// std::overflow_error instead of losing precision.
inline constexpr std::int64_t kMaxAmountMinorUnits = 1'000'000'000'000;

/// Exact monetary amount stored as a signed count of minor currency units
/// (cents by default).  No floating-point representation is ever stored;
/// ratio application goes through Ratio and rounds only at the documented
/// allocation points (apportion, round_half_up).
struct Money {
  std::int64_t cents = 0;

  static constexpr Money from_cents(std::int64_t c) { return Money{c}; }
  static constexpr Money zero() { return Money{0}; }

  constexpr bool is_negative() const { return cents < 0; }
  constexpr bool is_zero() const { return cents == 0; }

  friend constexpr Money operator+(Money a, Money b) { return Money{a.cents + b.cents}; }
  friend constexpr Money operator-(Money a, Money b) { return Money{a.cents - b.cents}; }
  constexpr Money operator-() const { return Money{-cents}; }
  friend constexpr Money operator*(Money a, std::int64_t k) { return Money{a.cents * k}; }
  friend constexpr Money operator*(std::int64_t k, Money a) { return a * k; }
  Money& operator+=(Money b) { cents += b.cents; return *this; }
  Money& operator-=(Money b) { cents -= b.cents; return *this; }

  friend constexpr auto operator<=>(Money, Money) = default;
};

constexpr Money max(Money a, Money b) { return a < b ? b : a; }
constexpr Money min(Money a, Money b) { return a < b ? a : b; }

/// "1234" cents -> "12.34"; scale must be a power of ten (1, 10, 100, ...).
std::string format_minor(Money m, std::int64_t minor_units_per_unit = 100);

/// Exact rational with canonical representation (den > 0, gcd(num, den) = 1).
/// Intermediates run in 128-bit arithmetic; results that do not fit back into
/// 64 bits throw std::overflow_error rather than silently wrapping.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::int64_t num, std::int64_t den);
  static Ratio of_cents(Money m) { return Ratio(m.cents, 1); }
  static Ratio zero() { return Ratio(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integral() const { return den_ == 1; }

  Ratio operator+(const Ratio& o) const;
  Ratio operator-(const Ratio& o) const;
  Ratio operator*(const Ratio& o) const;
  Ratio operator/(const Ratio& o) const;  // throws ValidationError on /0
  Ratio operator-() const;
  Ratio abs() const { return num_ < 0 ? -*this : *this; }

  std::strong_ordering operator<=>(const Ratio& o) const;
  bool operator==(const Ratio& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// Largest integer <= value.
  std::int64_t floor() const;
  /// floor(x + 1/2): 2.5 -> 3, -2.5 -> -2.  The one rounding rule used
  /// everywhere a rational becomes whole cents.
  std::int64_t round_half_up() const;

  std::string to_string() const;  // "29/59", or "3" when integral

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Ratio operator*(Money m, const Ratio& r) { return Ratio::of_cents(m) * r; }
inline Ratio operator*(const Ratio& r, Money m) { return m * r; }

/// Money value of an exact cent quantity, rounded half-up.
Money round_half_up(const Ratio& cents);

/// Splits `total` (total.cents >= 0) across non-negative weights so the parts
/// sum to exactly total: each part starts at floor(total * w_i / sum(w)) and
/// the leftover cents go to the largest fractional remainders, ties resolved
/// toward the lowest index.  All-zero weights are accepted only for a zero
/// total.
std::vector<Money> apportion(Money total, std::span<const Ratio> weights);
std::vector<Money> apportion(Money total, const std::vector<Money>& weights);

}  // namespace fairca
