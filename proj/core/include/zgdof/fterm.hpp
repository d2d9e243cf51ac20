// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#pragma once

#include "zgdof/rational.hpp"

namespace zgdof {

/// Arguments of the two-source log-det pre-log: at high SNR,
///
///   log|I_u + rho^{a1} H1 H1' + rho^{a2} H2 H2'|  =  f * log(rho) + O(1)
///
/// for H1 of size u x u1 and H2 of size u x u2 with generic entries. The
/// slope f depends only on these five numbers.
struct FTermSpec {
  int u;
  Rat a1;
  int u1;
  Rat a2;
  int u2;

  FTermSpec(int u_, Rat a1_, int u1_, Rat a2_, int u2_);
};

/// The pre-log slope itself. The component with the larger exponent fills up
/// to its own dimension first; the other component gets the leftover receive
/// dimensions. Negative exponents are clipped to zero. Ties between the two
/// exponents are broken toward the first component (the value is the same
/// either way).
Rat f_term(const FTermSpec& spec);

}  // namespace zgdof
