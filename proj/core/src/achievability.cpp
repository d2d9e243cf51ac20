// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#include "zgdof/achievability.hpp"

#include <algorithm>

#include "zgdof/errors.hpp"
#include "zgdof/fterm.hpp"
#include "zgdof/regions.hpp"

namespace zgdof {

namespace {

void require_canonical(const AntennaConfig& cfg, const char* op) {
  if (!cfg.is_canonical()) {
    throw NonCanonicalConfig(std::string(op) + ": antenna tuple " + cfg.str() +
                             " violates the canonical assumptions");
  }
}

}  // namespace

bool AchievabilityConditions::satisfied(const GdofPoint& point, const Rat& d_eta) const {
  return violation(point, d_eta).empty();
}

std::string AchievabilityConditions::violation(const GdofPoint& point, const Rat& d_eta) const {
  if (d_eta > d_eta_max) return "d_eta exceeds min(alpha*N1', min(M2,N2))";
  if (point.d1 > d1_max) return "d1 exceeds M1";
  if (point.d1 + d_eta > d1_plus_eta_max) return "d1 + d_eta exceeds f(N1,(a,M2),(1,M1))";
  if (point.d2 > d2_max) return "d2 exceeds f(M2,(1-a2,N2),(a-a2,N1))";
  if (point.d2 + d_eta > d2_plus_eta_max) return "d2 + d_eta exceeds (a-a2)*N1' + N2";
  return {};
}

AchievabilityConditions conditions(const AntennaConfig& cfg, const Alpha& alpha, const Rat& a2) {
  require_canonical(cfg, "conditions");
  if (a2.sign() < 0) throw A2OutOfRange("conditions: a2 must be non-negative");
  const Rat a = alpha.value();
  const Rat np(cfg.n1_prime());
  AchievabilityConditions c;
  c.d_eta_max = min(a * np, Rat(std::min(cfg.m2(), cfg.n2())));
  c.d1_max = Rat(cfg.m1());
  c.d1_plus_eta_max = f_term(FTermSpec(cfg.n1(), a, cfg.m2(), Rat(1), cfg.m1()));
  c.d2_max = f_term(FTermSpec(cfg.m2(), Rat(1) - a2, cfg.n2(), a - a2, cfg.n1()));
  c.d2_plus_eta_max = (a - a2) * np + Rat(cfg.n2());
  return c;
}

Allocation weak_allocation(const AntennaConfig& cfg, const Alpha& alpha, const Rat& a2) {
  require_canonical(cfg, "weak_allocation");
  if (!alpha.weak()) throw std::invalid_argument("weak_allocation: requires alpha <= 1");
  const Rat a = alpha.value();
  const Rat m1(cfg.m1()), m2(cfg.m2()), n1(cfg.n1()), n2(cfg.n2());
  const Rat np(cfg.n1_prime());
  const Rat lower = (a - n2 / np).pos();
  if (a2 < lower || a2 > a) {
    throw A2OutOfRange("weak_allocation: a2 = " + a2.str() + " outside [" + lower.str() + ", " +
                       a.str() + "]");
  }
  Allocation out;
  out.point.d1 = min(m1, m1 - a * (m1 + np - n1) + np * a2);
  out.point.d2 = min(n2, n2 + a * (m2 - n2) - m2 * a2);
  out.power = PowerAllocation{a2, (a - a2) * np, Regime::weak};
  return out;
}

StrongAllocation strong_allocation(const AntennaConfig& cfg, const Alpha& alpha, const Rat& a2) {
  require_canonical(cfg, "strong_allocation");
  if (!alpha.strong()) throw std::invalid_argument("strong_allocation: requires alpha > 1");
  const Rat a = alpha.value();
  if (a2.sign() < 0 || a2 > a) {
    throw A2OutOfRange("strong_allocation: a2 = " + a2.str() + " outside [0, " + a.str() + "]");
  }
  const Rat m1(cfg.m1()), m2(cfg.m2()), n1(cfg.n1()), n2(cfg.n2());
  const Rat np(cfg.n1_prime());

  StrongAllocation out;
  out.a2_d2_threshold =
      (a < Rat(1) + n2 / np) ? Rat(1) + ((a - Rat(1)) * np - n2) / m2 : a - n2 / np;

  const Rat pivot = a - n2 / np;
  if (a2 < pivot) {
    out.point.d1 = min(m1, (a - Rat(1)) * np + n1 - n2);
    out.point.d2 = n2;
    out.power = PowerAllocation{a2, n2, Regime::strong};
  } else {
    out.point.d1 = min(m1, n1 - np + np * a2);
    out.point.d2 = min(n2, (a - a2) * np + (Rat(1) - a2).pos() * (m2 - np));
    out.power = PowerAllocation{a2, (a - a2) * np, Regime::strong};
  }
  return out;
}

CornerPointSet corner_points(const AntennaConfig& cfg, const Alpha& alpha) {
  require_canonical(cfg, "corner_points");
  const Rat a = alpha.value();
  const Rat m1(cfg.m1()), m2(cfg.m2()), n1(cfg.n1()), n2(cfg.n2());
  const Rat np(cfg.n1_prime());

  CornerPointSet set;
  if (alpha.weak()) {
    // At alpha = 0 the weighted bound only grazes the corner (M1, N2), so the
    // region is the box and both Case II corners collapse onto that corner.
    const bool case_one = a.is_zero() || (n1 - m1) / np >= n2 / m2;
    const Rat a2_p1 = (Rat(1) - n2 / m2) * a;
    if (case_one) {
      set.case_id = CaseId::one;
      set.points.push_back(weak_allocation(cfg, alpha, a2_p1));
    } else {
      set.case_id = CaseId::two;
      set.points.push_back(weak_allocation(cfg, alpha, a2_p1));
      set.points.push_back(weak_allocation(cfg, alpha, (Rat(1) - (n1 - m1) / np) * a));
    }
  } else {
    const bool case_one = a >= Rat(1) + n2 / np - m2 * (n1 - m1) / (np * np);
    const Rat a2_axis = Rat(1) - (n1 - m1) / np;
    if (case_one) {
      set.case_id = CaseId::one;
      const StrongAllocation sa = strong_allocation(cfg, alpha, a2_axis);
      set.points.push_back({sa.point, sa.power});
    } else {
      set.case_id = CaseId::two;
      const Rat a2_p1 = Rat(1) - (n2 - (a - Rat(1)) * np) / m2;
      const StrongAllocation p1 = strong_allocation(cfg, alpha, a2_p1);
      const StrongAllocation p2 = strong_allocation(cfg, alpha, a2_axis);
      set.points.push_back({p1.point, p1.power});
      set.points.push_back({p2.point, p2.power});
    }
  }
  return set;
}

bool verify_inner_equals_outer(const AntennaConfig& cfg, const Alpha& alpha) {
  require_canonical(cfg, "verify_inner_equals_outer");
  const Region2D outer = delayed_region(cfg, alpha);
  const CornerPointSet corners = corner_points(cfg, alpha);

  std::vector<GdofPoint> pts{{Rat(0), Rat(0)},
                             {Rat(std::min(cfg.m1(), cfg.n1())), Rat(0)},
                             {Rat(0), Rat(std::min(cfg.m2(), cfg.n2()))}};
  for (const auto& alloc : corners.points) pts.push_back(alloc.point);
  const Region2D inner = Region2D::from_points(pts);

  if (!equals(inner, outer)) {
    std::string msg = "inner hull differs from outer bound for " + cfg.str() +
                      ", alpha = " + alpha.value().str() + "; inner vertices:";
    for (const auto& v : inner.vertices()) msg += " " + v.str();
    msg += "; outer vertices:";
    for (const auto& v : outer.vertices()) msg += " " + v.str();
    throw VerificationFailure(msg);
  }
  for (const auto& alloc : corners.points) {
    const AchievabilityConditions cond = conditions(cfg, alpha, alloc.power.a2);
    const std::string bad = cond.violation(alloc.point, alloc.power.d_eta);
    if (!bad.empty()) {
      throw VerificationFailure("corner " + alloc.point.str() + " of " + cfg.str() +
                                " at alpha = " + alpha.value().str() +
                                " violates achievability: " + bad);
    }
  }
  return true;
}

Rat quantizer_rate(const AntennaConfig& cfg, const Alpha& alpha, const Rat& a2) {
  if (a2.sign() < 0 || a2 > alpha.value()) {
    throw A2OutOfRange("quantizer_rate: a2 outside [0, alpha]");
  }
  return min(Rat(cfg.n2()), (alpha.value() - a2) * Rat(cfg.n1_prime()));
}

}  // namespace zgdof
