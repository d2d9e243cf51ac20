// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#pragma once

#include <string>
#include <vector>

#include "zgdof/antenna.hpp"
#include "zgdof/montecarlo.hpp"
#include "zgdof/region.hpp"

namespace zgdof {

/// A computed region together with the inputs that produced it.
struct RegionDocument {
  AntennaConfig cfg;
  Alpha alpha;
  Region2D region;
};

/// JSON object {config, alpha, halfplanes:[{a1,a2,b}], vertices:[[d1,d2]]}
/// with every rational rendered as a "num/den" string. Deterministic output.
std::string region_to_json(const RegionDocument& doc);

/// Parses the JSON form, rebuilds the region by intersecting the listed
/// half-planes and cross-checks the listed vertices; throws
/// std::invalid_argument if the two disagree.
RegionDocument region_from_json(const std::string& text);

/// CSV of the vertices with header "d1,d2" (decimal values, for plotting).
std::string vertices_to_csv(const Region2D& region);

/// CSV of per-ladder-point sample means with header "log2_rho,mean_bits".
std::string slope_to_csv(const SlopeEstimate& estimate);

/// One JSON line for a verification sweep record: runs the corner
/// construction and the inner-equals-outer check for (cfg, alpha) and reports
/// case id, corners, allocations and pass/fail.
std::string verify_record_json(const AntennaConfig& cfg, const Alpha& alpha);

/// "M1,M2,N1,N2" with positive integers.
AntennaConfig parse_config(const std::string& text);

/// Either a comma list of rationals ("0.4,4/5,1") or "start:end:step" with
/// exact rational arithmetic: start, start+step, ... while <= end.
std::vector<Alpha> parse_alpha_grid(const std::string& text);

}  // namespace zgdof
