// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#include "zgdof/regions.hpp"

#include <algorithm>

#include "zgdof/errors.hpp"

namespace zgdof {

namespace {

void require_canonical(const AntennaConfig& cfg, const char* op) {
  if (!cfg.is_canonical()) {
    throw NonCanonicalConfig(std::string(op) + ": antenna tuple " + cfg.str() +
                             " violates the canonical assumptions");
  }
}

std::vector<HalfPlane> box_bounds(const Rat& d1_max, const Rat& d2_max) {
  return {HalfPlane(Rat(-1), Rat(0), Rat(0)), HalfPlane(Rat(0), Rat(-1), Rat(0)),
          HalfPlane(Rat(1), Rat(0), d1_max), HalfPlane(Rat(0), Rat(1), d2_max)};
}

}  // namespace

HalfPlane delayed_weighted_bound(const AntennaConfig& cfg, const Alpha& alpha) {
  const Rat a = alpha.value();
  const Rat q(cfg.q());
  const Rat p(cfg.p());
  const Rat f1 = f_term(FTermSpec(cfg.n1(), a, cfg.m2(), Rat(1), cfg.m1()));
  const Rat f2 = f_term(FTermSpec(cfg.m2(), a, cfg.n1(), Rat(1), cfg.n2()));
  return HalfPlane(Rat(1) / q, Rat(1) / p, f1 / q + f2 / p - a);
}

Region2D delayed_region(const AntennaConfig& cfg, const Alpha& alpha) {
  std::vector<HalfPlane> hps =
      box_bounds(Rat(std::min(cfg.m1(), cfg.n1())), Rat(std::min(cfg.m2(), cfg.n2())));
  hps.push_back(delayed_weighted_bound(cfg, alpha));
  return Region2D::intersect(hps);
}

Region2D perfect_csit_region(const AntennaConfig& cfg, const Alpha& alpha) {
  require_canonical(cfg, "perfect_csit_region");
  const Rat a = alpha.value();
  const Rat f1 = f_term(FTermSpec(cfg.n1(), a, cfg.m2(), Rat(1), cfg.m1()));
  const Rat f2 =
      f_term(FTermSpec(cfg.n2(), Rat(1) - a, cfg.n1_prime(), Rat(1), cfg.m2() - cfg.n1_prime()));
  std::vector<HalfPlane> hps = box_bounds(Rat(cfg.m1()), Rat(cfg.n2()));
  hps.emplace_back(Rat(1), Rat(1), f1 + f2);
  return Region2D::intersect(hps);
}

Region2D dof_region_delayed(const AntennaConfig& cfg) {
  require_canonical(cfg, "dof_region_delayed");
  const Rat np(cfg.n1_prime());
  std::vector<HalfPlane> hps = box_bounds(Rat(cfg.m1()), Rat(cfg.n2()));
  hps.emplace_back(Rat(1), Rat(1), Rat(std::max(cfg.m2(), cfg.n1())));
  hps.emplace_back(Rat(1) / np, Rat(1) / Rat(cfg.m2()), Rat(cfg.n1()) / np);
  return Region2D::intersect(hps);
}

Rat sum_gdof(const AntennaConfig& cfg, const Alpha& alpha) {
  require_canonical(cfg, "sum_gdof");
  const Rat a = alpha.value();
  const Rat m1(cfg.m1()), m2(cfg.m2()), n1(cfg.n1()), n2(cfg.n2());
  const Rat np(cfg.n1_prime());
  const Rat single_user = m1 + n2;
  if (alpha.weak()) {
    return min(single_user, single_user - a * (m1 - n1 + n2 * np / m2));
  }
  return min(single_user, n2 + n1 - (n2 + np) * np / m2 + np * np * a / m2);
}

Rat perfect_sum_gdof(const AntennaConfig& cfg, const Alpha& alpha) {
  require_canonical(cfg, "perfect_sum_gdof");
  if (cfg.m2() <= cfg.n1()) return sum_gdof(cfg, alpha);  // regions coincide
  const Rat a = alpha.value();
  const Rat m1(cfg.m1()), m2(cfg.m2()), n1(cfg.n1()), n2(cfg.n2());
  if (alpha.weak()) {
    if (m1 + n2 <= m2) return m1 + n2;
    return m1 * (Rat(1) - a) + m2 * a + n2 * (Rat(1) - a);
  }
  const Rat threshold = Rat(1) + n2 / n1 - (m2 - m1) / n1;
  if (a >= threshold) return m1 + n2;
  return m2 + (a - Rat(1)) * n1;
}

}  // namespace zgdof
