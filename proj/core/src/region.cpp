// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#include "zgdof/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace zgdof {

namespace {

Rat cross(const GdofPoint& o, const GdofPoint& a, const GdofPoint& b) {
  return (a.d1 - o.d1) * (b.d2 - o.d2) - (a.d2 - o.d2) * (b.d1 - o.d1);
}

void sort_unique(std::vector<GdofPoint>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Andrew's monotone chain. Input must be sorted and deduplicated. Returns the
// hull counter-clockwise starting at the lexicographically smallest point;
// collinear points are dropped.
std::vector<GdofPoint> convex_hull(const std::vector<GdofPoint>& pts) {
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<GdofPoint> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<HalfPlane> normalize_set(std::vector<HalfPlane> hps) {
  std::sort(hps.begin(), hps.end());
  hps.erase(std::unique(hps.begin(), hps.end()), hps.end());
  return hps;
}

bool all_contain(const std::vector<HalfPlane>& hps, const GdofPoint& p) {
  for (const auto& hp : hps)
    if (!hp.contains(p)) return false;
  return true;
}

// Feasible pairwise boundary intersections, sorted and deduplicated. For a
// bounded non-empty region these are exactly its extreme points.
std::vector<GdofPoint> feasible_corners(const std::vector<HalfPlane>& hps) {
  std::vector<GdofPoint> pts;
  for (std::size_t i = 0; i < hps.size(); ++i) {
    for (std::size_t j = i + 1; j < hps.size(); ++j) {
      const Rat det = hps[i].a1 * hps[j].a2 - hps[i].a2 * hps[j].a1;
      if (det.is_zero()) continue;
      GdofPoint p{(hps[i].b * hps[j].a2 - hps[j].b * hps[i].a2) / det,
                  (hps[i].a1 * hps[j].b - hps[j].a1 * hps[i].b) / det};
      if (all_contain(hps, p)) pts.push_back(p);
    }
  }
  sort_unique(pts);
  return pts;
}

// True iff some nonzero direction d satisfies a_i . d <= 0 for every
// half-plane, i.e. the recession cone is nontrivial and the (non-empty)
// region is unbounded. Any extreme recession ray lies on the boundary line of
// some constraint, so checking the two rotations of each normal is exhaustive.
bool recession_cone_nontrivial(const std::vector<HalfPlane>& hps) {
  if (hps.empty()) return true;
  for (const auto& hp : hps) {
    for (const int s : {1, -1}) {
      const Rat dx = Rat(s) * (-hp.a2);
      const Rat dy = Rat(s) * hp.a1;
      bool ok = true;
      for (const auto& other : hps) {
        if ((other.a1 * dx + other.a2 * dy).sign() > 0) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

bool all_normals_parallel(const std::vector<HalfPlane>& hps) {
  for (std::size_t i = 1; i < hps.size(); ++i) {
    if (!(hps[0].a1 * hps[i].a2 - hps[0].a2 * hps[i].a1).is_zero()) return false;
  }
  return true;
}

// Consistency of a stack of parallel half-planes: project onto the shared
// normal and compare the tightest bounds from the two orientations.
bool parallel_stack_nonempty(const std::vector<HalfPlane>& hps) {
  std::optional<Rat> upper, lower;
  const Rat n1 = hps[0].a1, n2 = hps[0].a2;
  for (const auto& hp : hps) {
    // hp normal = t * (n1, n2) with exact t.
    const Rat t = !n1.is_zero() ? hp.a1 / n1 : hp.a2 / n2;
    const Rat bound = hp.b / t;
    if (t.sign() > 0) {
      if (!upper || bound < *upper) upper = bound;
    } else {
      if (!lower || bound > *lower) lower = bound;
    }
  }
  return !upper || !lower || *lower <= *upper;
}

}  // namespace

HalfPlane::HalfPlane(Rat a1_, Rat a2_, Rat b_)
    : a1(std::move(a1_)), a2(std::move(a2_)), b(std::move(b_)) {
  if (a1.is_zero() && a2.is_zero()) {
    throw std::invalid_argument("HalfPlane: normal must be nonzero");
  }
  const Rat scale = abs(!a1.is_zero() ? a1 : a2);
  a1 /= scale;
  a2 /= scale;
  b /= scale;
}

std::string HalfPlane::str() const {
  return a1.str() + "*d1 + " + a2.str() + "*d2 <= " + b.str();
}

Region2D Region2D::intersect(const std::vector<HalfPlane>& halfplanes) {
  const std::vector<HalfPlane> hps = normalize_set(halfplanes);
  std::vector<GdofPoint> corners = feasible_corners(hps);

  if (corners.empty()) {
    if (hps.empty()) throw UnboundedRegion("no constraints");
    if (all_normals_parallel(hps)) {
      // A consistent stack of parallel half-planes is a slab, half-plane or
      // line: non-empty but without a finite vertex set.
      if (parallel_stack_nonempty(hps)) throw UnboundedRegion();
      throw EmptyRegion();
    }
    // Normals span the plane, so a non-empty region would have a vertex.
    throw EmptyRegion();
  }
  if (recession_cone_nontrivial(hps)) throw UnboundedRegion();

  Region2D region;
  region.vertices_ = convex_hull(corners);

  // A half-plane is redundant iff dropping it leaves the same bounded vertex
  // set. One sequential pass is enough: facets are never dropped, so every
  // later test still runs against a set that pins the region down exactly.
  std::vector<HalfPlane> kept = hps;
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<HalfPlane> rest = kept;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (!rest.empty() && !recession_cone_nontrivial(rest) &&
        convex_hull(feasible_corners(rest)) == region.vertices_) {
      kept = std::move(rest);
    } else {
      ++i;
    }
  }
  region.halfplanes_ = std::move(kept);
  return region;
}

Region2D Region2D::from_points(const std::vector<GdofPoint>& points) {
  if (points.empty()) throw std::invalid_argument("Region2D::from_points: no points");
  std::vector<GdofPoint> pts = points;
  sort_unique(pts);
  std::vector<GdofPoint> hull = convex_hull(pts);

  std::vector<HalfPlane> hps;
  if (hull.size() == 1) {
    const GdofPoint& p = hull[0];
    hps.emplace_back(Rat(1), Rat(0), p.d1);
    hps.emplace_back(Rat(-1), Rat(0), -p.d1);
    hps.emplace_back(Rat(0), Rat(1), p.d2);
    hps.emplace_back(Rat(0), Rat(-1), -p.d2);
  } else if (hull.size() == 2) {
    const GdofPoint& p = hull[0];
    const GdofPoint& q = hull[1];
    const Rat dx = q.d1 - p.d1, dy = q.d2 - p.d2;
    // The carrier line from both sides, plus caps at the endpoints.
    hps.emplace_back(dy, -dx, dy * p.d1 - dx * p.d2);
    hps.emplace_back(-dy, dx, dx * p.d2 - dy * p.d1);
    hps.emplace_back(dx, dy, dx * q.d1 + dy * q.d2);
    hps.emplace_back(-dx, -dy, -(dx * p.d1 + dy * p.d2));
  } else {
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const GdofPoint& p = hull[i];
      const GdofPoint& q = hull[(i + 1) % hull.size()];
      const Rat dx = q.d1 - p.d1, dy = q.d2 - p.d2;
      // Outward normal of a counter-clockwise edge.
      hps.emplace_back(dy, -dx, dy * p.d1 - dx * p.d2);
    }
  }

  Region2D region;
  region.vertices_ = std::move(hull);
  region.halfplanes_ = normalize_set(std::move(hps));
  return region;
}

bool Region2D::contains(const GdofPoint& p) const { return all_contain(halfplanes_, p); }

std::pair<Rat, GdofPoint> Region2D::maximize(const Rat& w1, const Rat& w2) const {
  GdofPoint best = vertices_.front();
  Rat best_value = w1 * best.d1 + w2 * best.d2;
  for (const auto& v : vertices_) {
    const Rat value = w1 * v.d1 + w2 * v.d2;
    if (value > best_value || (value == best_value && best < v)) {
      best = v;
      best_value = value;
    }
  }
  return {best_value, best};
}

bool equals(const Region2D& r1, const Region2D& r2) { return r1.vertices() == r2.vertices(); }

bool subset(const Region2D& r1, const Region2D& r2) {
  for (const auto& v : r1.vertices())
    if (!r2.contains(v)) return false;
  return true;
}

}  // namespace zgdof
