// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zgdof {

/// Exact rational number on a 64-bit numerator/denominator pair.
///
/// Always stored reduced with a positive denominator. Intermediate products
/// are computed in 128 bits and an overflow of the reduced result throws
/// std::overflow_error instead of wrapping. The magnitudes in this toolkit
/// (antenna counts below ten, alpha grids with small denominators) stay far
/// below the limit; the check is a guard, not a code path.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(long long n, long long d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    assign(static_cast<__int128>(n), static_cast<__int128>(d));
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    // Denominators are positive, so cross multiplication preserves order.
    const i128 lhs = i128(a.num_) * b.den_;
    const i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// (x)^+ — clip negatives to zero.
  Rat pos() const { return num_ < 0 ? Rat(0) : *this; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Compact text form: "3", "-3/2".
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  /// Wire form used by the JSON schema: always "num/den".
  std::string wire_str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  /// Parses "num/den", a plain integer, or an exact decimal such as "0.25".
  static Rat parse(std::string_view text);

 private:
  using i128 = __int128;

  static Rat make(i128 n, i128 d) {
    Rat r;
    r.assign(n, d);
    return r;
  }

  void assign(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lo = std::numeric_limits<long long>::min();
    constexpr i128 hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi || d > hi) throw std::overflow_error("Rat: 64-bit overflow");
    num_ = static_cast<long long>(n);
    den_ = static_cast<long long>(d);
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  long long num_;
  long long den_;
};

inline Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }
inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

inline Rat Rat::parse(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("Rat: cannot parse \"" + std::string(text) + "\"");
  };
  if (text.empty()) fail();
  std::size_t pos = 0;
  long long sign = 1;
  if (text[pos] == '+' || text[pos] == '-') {
    if (text[pos] == '-') sign = -1;
    ++pos;
  }
  const auto digits = [&](long long& out) {
    bool any = false;
    out = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      const i128 next = i128(out) * 10 + (text[pos] - '0');
      if (next > std::numeric_limits<long long>::max()) fail();
      out = static_cast<long long>(next);
      ++pos;
      any = true;
    }
    if (!any) fail();
  };
  long long whole = 0;
  digits(whole);
  if (pos == text.size()) return Rat(sign * whole);
  if (text[pos] == '/') {
    ++pos;
    long long den = 0;
    digits(den);
    if (pos != text.size() || den == 0) fail();
    return Rat(sign * whole, den);
  }
  if (text[pos] == '.') {
    ++pos;
    i128 num = whole;
    i128 den = 1;
    bool any = false;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      num = num * 10 + (text[pos] - '0');
      den *= 10;
      if (den > std::numeric_limits<long long>::max()) fail();
      ++pos;
      any = true;
    }
    if (!any || pos != text.size()) fail();
    return Rat(sign * static_cast<long long>(num), static_cast<long long>(den));
  }
  fail();
  return Rat();  // unreachable
}

}  // namespace zgdof
