// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#pragma once

#include <string>
#include <vector>

#include "zgdof/rational.hpp"

namespace zgdof {

/// Antenna tuple (M1, M2, N1, N2) of the Z-interference channel: transmitter
/// T_i has M_i antennas, receiver R_i has N_i antennas, and only the T2->R1
/// cross link exists.
class AntennaConfig {
 public:
  AntennaConfig(int m1, int m2, int n1, int n2);

  int m1() const { return m1_; }
  int m2() const { return m2_; }
  int n1() const { return n1_; }
  int n2() const { return n2_; }

  /// Effective cross-link dimension min(M2, N1).
  int n1_prime() const { return m2_ < n1_ ? m2_ : n1_; }
  /// min(M2, N1 + N2); denominator of the d2 weight in the weighted bound.
  int p() const { return m2_ < n1_ + n2_ ? m2_ : n1_ + n2_; }
  /// min(M2, N1); denominator of the d1 weight in the weighted bound.
  int q() const { return n1_prime(); }

  /// True iff M1 <= N1, N1 <= M1+M2, N2 <= M2 and M2 <= N1+N2 — the antenna
  /// assumptions under which the closed-form corner and sum expressions hold.
  bool is_canonical() const;

  std::string str() const;

  friend bool operator==(const AntennaConfig& a, const AntennaConfig& b) = default;

 private:
  int m1_, m2_, n1_, n2_;
};

/// Returns cfg with M2 capped at N1+N2 (extra transmit antennas at T2 never
/// enlarge the region); the other three counts are left untouched, and the
/// result may still be non-canonical.
AntennaConfig canonicalize(const AntennaConfig& cfg);

/// Enumerates all antenna tuples with every entry in [1, max_antennas]
/// (optionally with a different cap for M2), canonical ones only if asked.
std::vector<AntennaConfig> enumerate_configs(int max_antennas, bool canonical_only,
                                             int m2_max = 0);

/// Interference exponent: the cross link carries INR = SNR^alpha.
class Alpha {
 public:
  explicit Alpha(Rat value);

  const Rat& value() const { return value_; }
  /// Weak-interference regime, alpha <= 1 (alpha == 1 counts as weak).
  bool weak() const { return value_ <= Rat(1); }
  bool strong() const { return !weak(); }

  friend bool operator==(const Alpha& a, const Alpha& b) = default;

 private:
  Rat value_;
};

/// A point of the GDoF plane.
struct GdofPoint {
  Rat d1;
  Rat d2;

  friend bool operator==(const GdofPoint& a, const GdofPoint& b) = default;
  /// Lexicographic (d1, d2) order.
  friend bool operator<(const GdofPoint& a, const GdofPoint& b) {
    if (a.d1 != b.d1) return a.d1 < b.d1;
    return a.d2 < b.d2;
  }
  std::string str() const { return "(" + d1.str() + ", " + d2.str() + ")"; }
};

}  // namespace zgdof
