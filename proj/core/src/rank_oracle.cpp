// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#include "zgdof/rank_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "zgdof/errors.hpp"
#include "zgdof/fterm.hpp"

namespace zgdof {

Rat weighted_bound(const AntennaConfig& cfg, const Alpha& alpha, int rank_deficit) {
  if (rank_deficit < 0 || rank_deficit > cfg.m2()) {
    throw std::invalid_argument("weighted_bound: rank deficit outside [0, M2]");
  }
  const Rat a = alpha.value();
  const int rank = cfg.m2() - rank_deficit;
  const Rat q(std::min(cfg.m2(), cfg.n1()));
  const Rat p(std::min(cfg.m2(), cfg.n1() + cfg.n2()));
  const Rat f1 = f_term(FTermSpec(cfg.n1(), Rat(1), cfg.m1(), a, rank));
  const Rat f2 = f_term(FTermSpec(rank, a, cfg.n1(), Rat(1), cfg.n2()));
  return f1 / q + f2 / p - a * Rat(std::min(rank, cfg.n1())) / q;
}

RankSweep argmax_weighted_bound(const AntennaConfig& cfg, const Alpha& alpha) {
  RankSweep sweep{cfg, alpha, {}, 0, 0};
  sweep.values.reserve(static_cast<std::size_t>(cfg.m2()) + 1);
  for (int r = 0; r <= cfg.m2(); ++r) {
    sweep.values.emplace_back(r, weighted_bound(cfg, alpha, r));
  }
  const Rat* best = &sweep.values[0].second;
  for (int r = 1; r <= cfg.m2(); ++r) {
    if (sweep.values[static_cast<std::size_t>(r)].second > *best) {
      sweep.r_star = r;
      best = &sweep.values[static_cast<std::size_t>(r)].second;
    }
  }
  for (int r = sweep.r_star + 1; r <= cfg.m2(); ++r) {
    if (sweep.values[static_cast<std::size_t>(r)].second == *best) ++sweep.ties;
  }
  return sweep;
}

LossDecomposition loss_decomposition(const AntennaConfig& cfg, const Alpha& alpha,
                                     int rank_deficit) {
  if (!alpha.weak()) {
    throw std::invalid_argument("loss_decomposition: stated for alpha <= 1 only");
  }
  const AntennaConfig capped = canonicalize(cfg);  // M2 <= N1+N2; bound unchanged
  const int m2 = capped.m2();
  if (rank_deficit < 0 || rank_deficit > m2) {
    throw std::invalid_argument("loss_decomposition: rank deficit outside [0, min(M2,N1+N2)]");
  }
  const Rat a = alpha.value();
  const Rat r(rank_deficit);
  const Rat m2r(m2);
  const int n1 = capped.n1();
  const int n2 = capped.n2();

  LossDecomposition out;
  out.base = f_term(FTermSpec(n1, Rat(1), capped.m1(), a, m2 - rank_deficit)) /
                 Rat(std::min(m2, n1)) +
             f_term(FTermSpec(m2, a, n1, Rat(1), n2)) / Rat(std::min(m2, n1 + n2)) - a;

  if (m2 <= n2) {
    out.loss2 = r / m2r;
  } else if (rank_deficit <= m2 - n2) {
    out.loss2 = r * a / m2r;
  } else {
    out.loss2 = (Rat(m2 - n2) * a + (Rat(n2) - (m2r - r))) / m2r;
  }

  if (m2 <= n1) {
    out.loss3 = a * r / m2r;
  } else if (rank_deficit <= m2 - n1) {
    out.loss3 = Rat(0);
  } else {
    out.loss3 = (Rat(n1) - (m2r - r)) * a / Rat(n1);
  }

  const Rat g = weighted_bound(capped, alpha, rank_deficit);
  if (out.base + out.loss3 - out.loss2 != g) {
    throw DecompositionMismatch("loss pieces do not reassemble to the weighted bound for " +
                                cfg.str() + ", alpha = " + a.str() +
                                ", r = " + std::to_string(rank_deficit));
  }
  if (out.loss3 > out.loss2) {
    throw DecompositionMismatch("loss3 > loss2 for " + cfg.str() + ", alpha = " + a.str() +
                                ", r = " + std::to_string(rank_deficit));
  }
  return out;
}

}  // namespace zgdof
