// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#pragma once

#include <string>
#include <vector>

#include "zgdof/antenna.hpp"
#include "zgdof/region.hpp"

namespace zgdof {

enum class Regime { weak, strong };

/// One operating point of the block-Markov scheme: T2 sends its private
/// streams at power ~ rho^(-a2) and the multicast quantization index of the
/// previous block's interference carries d_eta GDoF.
struct PowerAllocation {
  Rat a2;
  Rat d_eta;
  Regime regime;
};

/// The five linear constraints on (d1, d2, d_eta) under which both receivers
/// can decode their private message and the common quantization index, for a
/// given antenna tuple, interference exponent and power backoff a2.
struct AchievabilityConditions {
  Rat d_eta_max;         // d_eta       <= min(alpha*N1', min(M2,N2))
  Rat d1_max;            // d1          <= M1
  Rat d1_plus_eta_max;   // d1 + d_eta  <= f(N1,(a,M2),(1,M1))
  Rat d2_max;            // d2          <= f(M2,(1-a2,N2),(a-a2,N1))
  Rat d2_plus_eta_max;   // d2 + d_eta  <= (a-a2)*N1' + N2

  bool satisfied(const GdofPoint& point, const Rat& d_eta) const;
  /// Empty string when satisfied, otherwise the name of a violated constraint.
  std::string violation(const GdofPoint& point, const Rat& d_eta) const;
};

/// Materializes the general achievability conditions. Canonical tuples only.
AchievabilityConditions conditions(const AntennaConfig& cfg, const Alpha& alpha, const Rat& a2);

struct Allocation {
  GdofPoint point;
  PowerAllocation power;
};

/// Weak interference (alpha <= 1). Achieves
///   d1 = min(M1, M1 - a*(M1+N1'-N1) + N1'*a2)
///   d2 = min(N2, N2 + a*(M2-N2) - M2*a2)
/// with d_eta = (a-a2)*N1', for any backoff in the admissible interval
/// a >= a2 >= (a - N2/N1')^+. Throws A2OutOfRange outside that interval.
Allocation weak_allocation(const AntennaConfig& cfg, const Alpha& alpha, const Rat& a2);

struct StrongAllocation {
  GdofPoint point;
  PowerAllocation power;
  /// Backoff threshold below which d2 stays pinned at N2 and above which it
  /// strictly decreases.
  Rat a2_d2_threshold;
};

/// Strong interference (alpha > 1), any backoff 0 <= a2 <= alpha. Below
/// a2 = alpha - N2/N1' the quantization index carries d_eta = N2, above it
/// d_eta = (a-a2)*N1'.
StrongAllocation strong_allocation(const AntennaConfig& cfg, const Alpha& alpha, const Rat& a2);

enum class CaseId { one, two };

/// Non-trivial corner points of the delayed-CSIT region with the backoff that
/// achieves each. Case I (weighted bound inactive) has the single corner
/// (M1, N2); Case II has the two corners P1 (d2 = N2 side) and P2 (d1 = M1
/// side), in that order.
struct CornerPointSet {
  CaseId case_id;
  std::vector<Allocation> points;
};

CornerPointSet corner_points(const AntennaConfig& cfg, const Alpha& alpha);

/// Rebuilds the region achieved by the corner allocations (convex hull of the
/// origin, the axis points and the corners) and checks exact equality with
/// the delayed-CSIT outer bound; also re-checks every corner against the
/// general achievability conditions. Returns true, or throws
/// VerificationFailure naming what broke — which would be a bug, not data.
bool verify_inner_equals_outer(const AntennaConfig& cfg, const Alpha& alpha);

/// GDoF of the compressed interference description: min(N2, (a-a2)*N1').
Rat quantizer_rate(const AntennaConfig& cfg, const Alpha& alpha, const Rat& a2);

}  // namespace zgdof
