// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#pragma once

#include <string>
#include <vector>

#include "zgdof/region.hpp"

namespace zgdof {

struct SvgSeries {
  std::string label;
  Region2D region;
};

/// Draws one or more regions into a self-contained SVG with d1/d2 axes and a
/// legend. Styling is fixed — the first series (the bound under study) is
/// solid and filled, comparison series are dashed — so output is
/// byte-for-byte reproducible for a fixed input.
std::string regions_to_svg(const std::vector<SvgSeries>& series);

}  // namespace zgdof
