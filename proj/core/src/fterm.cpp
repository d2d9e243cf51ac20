// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#include "zgdof/fterm.hpp"

#include <algorithm>
#include <stdexcept>

namespace zgdof {

FTermSpec::FTermSpec(int u_, Rat a1_, int u1_, Rat a2_, int u2_)
    : u(u_), a1(std::move(a1_)), u1(u1_), a2(std::move(a2_)), u2(u2_) {
  if (u < 0 || u1 < 0 || u2 < 0) {
    throw std::invalid_argument("FTermSpec: dimensions must be non-negative");
  }
}

Rat f_term(const FTermSpec& spec) {
  // Larger exponent first; ties go to the first component.
  const bool first_leads = spec.a1 >= spec.a2;
  const Rat& lead_a = first_leads ? spec.a1 : spec.a2;
  const Rat& tail_a = first_leads ? spec.a2 : spec.a1;
  const int lead_u = first_leads ? spec.u1 : spec.u2;
  const int tail_u = first_leads ? spec.u2 : spec.u1;

  const int lead_dims = std::min(spec.u, lead_u);
  const int tail_dims = std::min(std::max(spec.u - lead_u, 0), tail_u);
  return Rat(lead_dims) * lead_a.pos() + Rat(tail_dims) * tail_a.pos();
}

}  // namespace zgdof
