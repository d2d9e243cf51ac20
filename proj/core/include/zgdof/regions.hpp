// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#pragma once

#include "zgdof/antenna.hpp"
#include "zgdof/fterm.hpp"
#include "zgdof/region.hpp"

namespace zgdof {

/// GDoF region of the Z-IC with delayed CSIT: the two single-user bounds
/// d1 <= min(M1,N1), d2 <= min(M2,N2) and the weighted bound
///
///   d1/q + d2/p <= f(N1,(a,M2),(1,M1))/q + f(M2,(a,N1),(1,N2))/p - a
///
/// with q = min(M2,N1) and p = min(M2,N1+N2). Valid for any antenna tuple.
Region2D delayed_region(const AntennaConfig& cfg, const Alpha& alpha);

/// The weighted delayed-CSIT half-plane alone (normalized), as used inside
/// delayed_region; exposed so callers can test it for redundancy.
HalfPlane delayed_weighted_bound(const AntennaConfig& cfg, const Alpha& alpha);

/// GDoF region of the Z-IC with perfect CSIT:
/// d1 <= M1, d2 <= N2 and
/// d1+d2 <= f(N1,(a,M2),(1,M1)) + f(N2,(1-a,N1'),(1,M2-N1')).
/// Stated only for canonical tuples; throws NonCanonicalConfig otherwise.
Region2D perfect_csit_region(const AntennaConfig& cfg, const Alpha& alpha);

/// DoF region of the Z-IC with delayed CSIT (the alpha = 1 slice):
/// d1 <= M1, d2 <= N2, d1+d2 <= max(M2,N1), d1/N1' + d2/M2 <= N1/N1'.
/// Canonical tuples only.
Region2D dof_region_delayed(const AntennaConfig& cfg);

/// Closed-form sum-GDoF with delayed CSIT (canonical tuples only):
///   a <= 1:  min(M1+N2, M1+N2 - a*(M1-N1+N2*N1'/M2))
///   a  > 1:  min(M1+N2, N2+N1 - (N2+N1')*N1'/M2 + N1'^2*a/M2)
Rat sum_gdof(const AntennaConfig& cfg, const Alpha& alpha);

/// Closed-form sum-GDoF with perfect CSIT (canonical tuples only). When
/// M2 <= N1 the delayed and perfect regions coincide and the delayed value is
/// returned; otherwise the piecewise weak/strong expressions apply.
Rat perfect_sum_gdof(const AntennaConfig& cfg, const Alpha& alpha);

}  // namespace zgdof
