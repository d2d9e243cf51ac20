// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zgdof/antenna.hpp"
#include "zgdof/errors.hpp"
#include "zgdof/rational.hpp"

namespace zgdof {

/// Closed half-plane a1*d1 + a2*d2 <= b with exact rational coefficients.
/// Stored normalized: the first nonzero coefficient is +1 or -1, which makes
/// equal half-planes compare equal componentwise.
struct HalfPlane {
  Rat a1;
  Rat a2;
  Rat b;

  HalfPlane(Rat a1_, Rat a2_, Rat b_);

  Rat eval(const GdofPoint& p) const { return a1 * p.d1 + a2 * p.d2; }
  bool contains(const GdofPoint& p) const { return eval(p) <= b; }

  friend bool operator==(const HalfPlane& x, const HalfPlane& y) = default;
  friend bool operator<(const HalfPlane& x, const HalfPlane& y) {
    if (x.a1 != y.a1) return x.a1 < y.a1;
    if (x.a2 != y.a2) return x.a2 < y.a2;
    return x.b < y.b;
  }
  std::string str() const;
};

/// Bounded convex region of the (d1, d2) plane, held in two synchronized
/// exact representations: the irredundant half-planes and the extreme points.
///
/// Vertices are kept in counter-clockwise order starting at the
/// lexicographically smallest (d1, d2); collinear points never appear, and a
/// vertex where more than two half-planes meet appears once. Degenerate
/// regions (a segment or a single point) carry two or one vertices.
class Region2D {
 public:
  /// Exact intersection of half-planes. Redundant half-planes are removed;
  /// vertices are enumerated by pairwise line intersection and feasibility
  /// filtering. Throws EmptyRegion / UnboundedRegion when there is no finite
  /// non-empty vertex set.
  static Region2D intersect(const std::vector<HalfPlane>& halfplanes);

  /// Convex hull of a point set, with half-planes rebuilt from the hull edges.
  static Region2D from_points(const std::vector<GdofPoint>& points);

  const std::vector<HalfPlane>& halfplanes() const { return halfplanes_; }
  const std::vector<GdofPoint>& vertices() const { return vertices_; }

  /// Closed membership (boundary points are inside).
  bool contains(const GdofPoint& p) const;

  /// Maximum of w1*d1 + w2*d2 over the region together with an attaining
  /// vertex; ties go to the lexicographically largest attaining vertex.
  std::pair<Rat, GdofPoint> maximize(const Rat& w1, const Rat& w2) const;

 private:
  Region2D() = default;

  std::vector<HalfPlane> halfplanes_;
  std::vector<GdofPoint> vertices_;
};

/// Exact region equality (same extreme point set).
bool equals(const Region2D& r1, const Region2D& r2);

/// r1 subseteq r2, decided by containment of every vertex of r1 in r2.
bool subset(const Region2D& r1, const Region2D& r2);

}  // namespace zgdof
