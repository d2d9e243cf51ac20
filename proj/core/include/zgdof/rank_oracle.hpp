// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#pragma once

#include <utility>
#include <vector>

#include "zgdof/antenna.hpp"

namespace zgdof {

/// The weighted outer-bound expression as a function of the rank deficit r of
/// the interfering transmit covariance (rank M2 - r):
///
///   g(r) = f(N1,(1,M1),(a,M2-r)) / min(M2,N1)
///        + f(M2-r,(a,N1),(1,N2)) / min(M2,N1+N2)
///        - a * min(M2-r,N1) / min(M2,N1)
///
/// Defined for 0 <= r <= M2 on any antenna tuple (M2 need not be capped).
Rat weighted_bound(const AntennaConfig& cfg, const Alpha& alpha, int rank_deficit);

/// Exhaustive evaluation of the weighted bound over all rank deficits.
struct RankSweep {
  AntennaConfig cfg;
  Alpha alpha;
  /// (r, g(r)) for r = 0..M2.
  std::vector<std::pair<int, Rat>> values;
  /// Smallest maximizing r. The full-rank claim is r_star == 0.
  int r_star;
  /// Number of r > r_star attaining the same maximum (reported, not judged).
  int ties;
};

RankSweep argmax_weighted_bound(const AntennaConfig& cfg, const Alpha& alpha);

/// Weak-interference split of the weighted bound into a monotone baseline and
/// two per-term losses:  g(r) = base(r) + loss3(r) - loss2(r), with
/// loss3 <= loss2 pointwise. M2 is capped at N1+N2 internally (the bound is
/// unchanged by the cap); the deficit must not exceed the capped M2.
struct LossDecomposition {
  Rat base;   // f(N1,(1,M1),(a,M2-r))/min(M2,N1) + f(M2,(a,N1),(1,N2))/min(M2,N1+N2) - a
  Rat loss2;  // drop of the second f-term caused by the deficit
  Rat loss3;  // drop of the cross-link penalty term caused by the deficit
};

/// Throws DecompositionMismatch if the pieces fail to reassemble to the
/// weighted bound exactly or loss3 > loss2 (either would be a bug).
LossDecomposition loss_decomposition(const AntennaConfig& cfg, const Alpha& alpha,
                                     int rank_deficit);

}  // namespace zgdof
