// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#pragma once

#include <cstdint>
#include <string_view>

#include "zgdof/antenna.hpp"
#include "zgdof/rational.hpp"

namespace zgdof::test {

inline Rat R(std::string_view text) { return Rat::parse(text); }
inline Alpha A(std::string_view text) { return Alpha(Rat::parse(text)); }
inline GdofPoint P(std::string_view d1, std::string_view d2) { return {R(d1), R(d2)}; }

// Deterministic generator for property tests (splitmix64).
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi].
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Random small rational in [lo, hi] with denominator up to 12.
  Rat rat(long long lo, long long hi) {
    const long long den = range(1, 12);
    return Rat(range(lo * den, hi * den), den);
  }

 private:
  std::uint64_t state_;
};

}  // namespace zgdof::test
