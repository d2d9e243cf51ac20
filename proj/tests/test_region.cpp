// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "zgdof/errors.hpp"
#include "zgdof/region.hpp"

using namespace zgdof;
using test::P;
using test::R;

namespace {

std::vector<HalfPlane> box(const Rat& d1_max, const Rat& d2_max) {
  return {HalfPlane(Rat(-1), Rat(0), Rat(0)), HalfPlane(Rat(0), Rat(-1), Rat(0)),
          HalfPlane(Rat(1), Rat(0), d1_max), HalfPlane(Rat(0), Rat(1), d2_max)};
}

}  // namespace

TEST_CASE("half-plane normalization") {
  CHECK(HalfPlane(Rat(2), Rat(4), Rat(6)) == HalfPlane(Rat(1), Rat(2), Rat(3)));
  CHECK(HalfPlane(Rat(-2), Rat(4), Rat(6)) == HalfPlane(Rat(-1), Rat(2), Rat(3)));
  CHECK(HalfPlane(Rat(0), Rat(-3), Rat(6)) == HalfPlane(Rat(0), Rat(-1), Rat(2)));
  CHECK_THROWS_AS(HalfPlane(Rat(0), Rat(0), Rat(1)), std::invalid_argument);
}

TEST_CASE("intersect: boxes and clipped corners") {
  const Region2D square = Region2D::intersect(box(Rat(2), Rat(2)));
  CHECK(square.vertices() == std::vector<GdofPoint>{P("0", "0"), P("2", "0"), P("2", "2"),
                                                    P("0", "2")});
  CHECK(square.halfplanes().size() == 4);

  auto hps = box(Rat(2), Rat(2));
  hps.emplace_back(Rat(1), Rat(1), Rat(3));
  const Region2D pentagon = Region2D::intersect(hps);
  CHECK(pentagon.vertices() == std::vector<GdofPoint>{P("0", "0"), P("2", "0"), P("2", "1"),
                                                      P("1", "2"), P("0", "2")});
}

TEST_CASE("intersect: delayed-CSIT shaped pentagon with rational corners") {
  // d1 <= 1, d2 <= 1, d1 + d2/2 <= 13/10 — corners (1, 3/5) and (4/5, 1).
  auto hps = box(Rat(1), Rat(1));
  hps.emplace_back(Rat(1), Rat(1, 2), Rat(13, 10));
  const Region2D r = Region2D::intersect(hps);
  CHECK(r.vertices() == std::vector<GdofPoint>{P("0", "0"), P("1", "0"), P("1", "3/5"),
                                               P("4/5", "1"), P("0", "1")});
}

TEST_CASE("intersect: redundant half-planes are dropped") {
  auto hps = box(Rat(2), Rat(2));
  hps.emplace_back(Rat(1), Rat(1), Rat(10));      // far away
  hps.emplace_back(Rat(1), Rat(1), Rat(4));       // touches the corner only
  hps.emplace_back(Rat(1, 2), Rat(0), Rat(1));    // duplicate of d1 <= 2 after scaling
  const Region2D r = Region2D::intersect(hps);
  CHECK(r.halfplanes().size() == 4);
  CHECK(r.vertices().size() == 4);
}

TEST_CASE("intersect: empty and unbounded inputs throw") {
  auto infeasible = box(Rat(2), Rat(2));
  infeasible.emplace_back(Rat(-1), Rat(0), Rat(-3));  // d1 >= 3
  CHECK_THROWS_AS(Region2D::intersect(infeasible), EmptyRegion);

  // Parallel but inconsistent stack.
  CHECK_THROWS_AS(Region2D::intersect({HalfPlane(Rat(1), Rat(0), Rat(0)),
                                       HalfPlane(Rat(-1), Rat(0), Rat(-1))}),
                  EmptyRegion);

  // No upper bound on d2.
  CHECK_THROWS_AS(Region2D::intersect({HalfPlane(Rat(-1), Rat(0), Rat(0)),
                                       HalfPlane(Rat(0), Rat(-1), Rat(0)),
                                       HalfPlane(Rat(1), Rat(0), Rat(1))}),
                  UnboundedRegion);
  // Slab.
  CHECK_THROWS_AS(Region2D::intersect({HalfPlane(Rat(1), Rat(0), Rat(1)),
                                       HalfPlane(Rat(-1), Rat(0), Rat(0))}),
                  UnboundedRegion);
  CHECK_THROWS_AS(Region2D::intersect({}), UnboundedRegion);
}

TEST_CASE("intersect: degenerate regions") {
  // Segment: d1 pinned to 1, d2 in [0, 2].
  const Region2D seg = Region2D::intersect({HalfPlane(Rat(1), Rat(0), Rat(1)),
                                            HalfPlane(Rat(-1), Rat(0), Rat(-1)),
                                            HalfPlane(Rat(0), Rat(-1), Rat(0)),
                                            HalfPlane(Rat(0), Rat(1), Rat(2))});
  CHECK(seg.vertices() == std::vector<GdofPoint>{P("1", "0"), P("1", "2")});

  // Single point.
  const Region2D pt = Region2D::intersect({HalfPlane(Rat(1), Rat(0), Rat(1)),
                                           HalfPlane(Rat(-1), Rat(0), Rat(-1)),
                                           HalfPlane(Rat(0), Rat(1), Rat(2)),
                                           HalfPlane(Rat(0), Rat(-1), Rat(-2))});
  CHECK(pt.vertices() == std::vector<GdofPoint>{P("1", "2")});

  // A vertex where three half-planes meet appears once.
  auto hps = box(Rat(2), Rat(1));
  hps.emplace_back(Rat(1), Rat(1), Rat(3));
  hps.emplace_back(Rat(1), Rat(2), Rat(4));
  const Region2D r = Region2D::intersect(hps);
  CHECK(r.vertices() == std::vector<GdofPoint>{P("0", "0"), P("2", "0"), P("2", "1"),
                                               P("0", "1")});
}

TEST_CASE("contains is closed (boundary inclusive)") {
  const Region2D square = Region2D::intersect(box(Rat(2), Rat(2)));
  CHECK(square.contains(P("2", "2")));
  CHECK(square.contains(P("0", "0")));
  CHECK(square.contains(P("1", "1/3")));
  CHECK_FALSE(square.contains(P("2", "2000000001/1000000000")));
  CHECK_FALSE(square.contains(P("-1/1000", "1")));
}

TEST_CASE("equals and subset") {
  const Region2D square = Region2D::intersect(box(Rat(2), Rat(2)));
  const Region2D square2 = Region2D::from_points(
      {P("0", "0"), P("2", "0"), P("2", "2"), P("0", "2"), P("1", "1")});
  CHECK(equals(square, square2));
  const Region2D small = Region2D::intersect(box(Rat(1), Rat(2)));
  CHECK(subset(small, square));
  CHECK_FALSE(subset(square, small));
  CHECK_FALSE(equals(square, small));
}

TEST_CASE("maximize scans vertices with lexicographic tie-breaking") {
  const Region2D square = Region2D::intersect(box(Rat(2), Rat(2)));
  auto [value, point] = square.maximize(Rat(1), Rat(1));
  CHECK(value == Rat(4));
  CHECK(point == P("2", "2"));

  // Objective constant along the top edge: tie broken to the larger vertex.
  auto [v2, p2] = square.maximize(Rat(0), Rat(1));
  CHECK(v2 == Rat(2));
  CHECK(p2 == P("2", "2"));

  auto hps = box(Rat(1), Rat(1));
  hps.emplace_back(Rat(1), Rat(1, 2), Rat(13, 10));
  auto [v3, p3] = Region2D::intersect(hps).maximize(Rat(1), Rat(1));
  CHECK(v3 == Rat(9, 5));
  CHECK(p3 == P("4/5", "1"));
}

TEST_CASE("round trip: intersect(halfplanes(r)) == r") {
  test::TestRng rng(777);
  for (int it = 0; it < 300; ++it) {
    // Random bounded region: a box plus up to four random cuts.
    std::vector<HalfPlane> hps = box(Rat(rng.range(1, 4)), Rat(rng.range(1, 4)));
    const int cuts = static_cast<int>(rng.range(0, 4));
    for (int c = 0; c < cuts; ++c) {
      Rat a1 = rng.rat(0, 2), a2 = rng.rat(0, 2);
      if (a1.is_zero() && a2.is_zero()) a1 = Rat(1);
      hps.emplace_back(a1, a2, rng.rat(1, 6));
    }
    const Region2D r = Region2D::intersect(hps);
    const Region2D back = Region2D::intersect(r.halfplanes());
    CHECK(equals(back, r));
    CHECK(back.halfplanes() == r.halfplanes());

    // Every vertex is active on at least two half-planes; vertex count is
    // bounded by the number of irredundant half-planes.
    CHECK(r.vertices().size() <= r.halfplanes().size());
    for (const auto& v : r.vertices()) {
      int active = 0;
      for (const auto& hp : r.halfplanes()) {
        if (hp.eval(v) == hp.b) ++active;
      }
      CHECK(active >= 2);
    }

    // from_points on the vertices reproduces the region as well.
    CHECK(equals(Region2D::from_points(r.vertices()), r));
  }
}

TEST_CASE("membership agrees with a float oracle away from boundaries") {
  test::TestRng rng(31337);
  auto hps = box(Rat(2), Rat(2));
  hps.emplace_back(Rat(1), Rat(1, 2), Rat(5, 2));
  const Region2D r = Region2D::intersect(hps);
  int checked = 0;
  for (int it = 0; it < 1000; ++it) {
    const GdofPoint pt{rng.rat(-1, 3), rng.rat(-1, 3)};
    // Float oracle with a safety margin; skip points too close to a boundary.
    const double x = pt.d1.to_double(), y = pt.d2.to_double();
    bool inside_f = true;
    bool near_boundary = false;
    for (const auto& hp : r.halfplanes()) {
      const double lhs = hp.a1.to_double() * x + hp.a2.to_double() * y;
      const double slack = hp.b.to_double() - lhs;
      if (std::fabs(slack) < 1e-9) near_boundary = true;
      if (slack < 0) inside_f = false;
    }
    if (near_boundary) continue;
    ++checked;
    CHECK(r.contains(pt) == inside_f);
  }
  CHECK(checked > 800);
}

TEST_CASE("equals is an equivalence, subset a partial order") {
  const Region2D a = Region2D::intersect(box(Rat(1), Rat(2)));
  const Region2D b = Region2D::from_points(a.vertices());
  const Region2D c = Region2D::intersect(box(Rat(2), Rat(2)));
  CHECK(equals(a, a));
  CHECK(equals(a, b));
  CHECK(equals(b, a));
  CHECK(subset(a, a));
  CHECK((subset(a, c) && subset(c, a)) == equals(a, c));
  CHECK((subset(a, b) && subset(b, a)) == equals(a, b));
  // Transitivity on a chain.
  const Region2D d = Region2D::intersect(box(Rat(3), Rat(3)));
  CHECK(subset(a, c));
  CHECK(subset(c, d));
  CHECK(subset(a, d));
}
