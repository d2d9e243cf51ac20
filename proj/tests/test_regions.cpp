// SPDX-License-Identifier: Apache-2.0
//
// zgdof — GDoF region toolkit for the MIMO Z-interference channel with delayed CSIT
// Copyright (c) 2026 the zgdof authors

#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "zgdof/errors.hpp"
#include "zgdof/regions.hpp"

using namespace zgdof;
using test::A;
using test::P;
using test::R;

TEST_CASE("antenna config: validation, derived values, canonical flag") {
  const AntennaConfig cfg(2, 2, 3, 2);
  CHECK(cfg.n1_prime() == 2);
  CHECK(cfg.p() == 2);
  CHECK(cfg.q() == 2);
  CHECK(cfg.is_canonical());

  CHECK(AntennaConfig(1, 2, 1, 1).n1_prime() == 1);
  CHECK(AntennaConfig(1, 2, 1, 1).p() == 2);

  CHECK_THROWS_AS(AntennaConfig(0, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(AntennaConfig(1, 1, -2, 1), std::invalid_argument);

  CHECK_FALSE(AntennaConfig(3, 1, 2, 1).is_canonical());  // M1 > N1
  CHECK_FALSE(AntennaConfig(1, 1, 3, 1).is_canonical());  // N1 > M1+M2
  CHECK_FALSE(AntennaConfig(1, 1, 1, 2).is_canonical());  // N2 > M2
  CHECK_FALSE(AntennaConfig(2, 6, 3, 2).is_canonical());  // M2 > N1+N2
}

TEST_CASE("canonicalize caps M2 only") {
  CHECK(canonicalize(AntennaConfig(2, 6, 3, 2)) == AntennaConfig(2, 5, 3, 2));
  CHECK(canonicalize(AntennaConfig(2, 2, 3, 2)) == AntennaConfig(2, 2, 3, 2));
  CHECK(canonicalize(AntennaConfig(1, 2, 1, 1)) == AntennaConfig(1, 2, 1, 1));
  CHECK(canonicalize(AntennaConfig(1, 2, 1, 1)).is_canonical());
  // Other violations are flagged, never rewritten.
  CHECK(canonicalize(AntennaConfig(3, 2, 2, 1)) == AntennaConfig(3, 2, 2, 1));
  CHECK_FALSE(canonicalize(AntennaConfig(3, 2, 2, 1)).is_canonical());
}

TEST_CASE("alpha regime classification") {
  CHECK(A("0").weak());
  CHECK(A("1").weak());  // boundary counts as weak
  CHECK(A("0.4").weak());
  CHECK(A("1.2").strong());
  CHECK_THROWS_AS(Alpha(R("-0.1")), std::invalid_argument);
}

TEST_CASE("delayed region worked examples") {
  SUBCASE("(2,2,3,2) at alpha=1 is the DoF pentagon") {
    const Region2D r = delayed_region(AntennaConfig(2, 2, 3, 2), A("1"));
    CHECK(r.vertices() == std::vector<GdofPoint>{P("0", "0"), P("2", "0"), P("2", "1"),
                                                 P("1", "2"), P("0", "2")});
  }
  SUBCASE("(1,2,1,1) at alpha=0 is the unit square") {
    const Region2D r = delayed_region(AntennaConfig(1, 2, 1, 1), A("0"));
    CHECK(r.vertices() == std::vector<GdofPoint>{P("0", "0"), P("1", "0"), P("1", "1"),
                                                 P("0", "1")});
  }
  SUBCASE("(2,2,3,2) at alpha=0.4: weighted bound is d1+d2 <= 18/5") {
    const HalfPlane hp = delayed_weighted_bound(AntennaConfig(2, 2, 3, 2), A("0.4"));
    CHECK(hp == HalfPlane(Rat(1), Rat(1), R("18/5")));
    const Region2D r = delayed_region(AntennaConfig(2, 2, 3, 2), A("0.4"));
    CHECK(r.vertices() == std::vector<GdofPoint>{P("0", "0"), P("2", "0"), P("2", "8/5"),
                                                 P("8/5", "2"), P("0", "2")});
  }
  SUBCASE("(1,2,1,1) at alpha=0.4 matches the Case II corner points") {
    const Region2D r = delayed_region(AntennaConfig(1, 2, 1, 1), A("0.4"));
    CHECK(r.vertices() == std::vector<GdofPoint>{P("0", "0"), P("1", "0"), P("1", "3/5"),
                                                 P("4/5", "1"), P("0", "1")});
  }
  SUBCASE("accepts non-canonical tuples") {
    const Region2D r = delayed_region(AntennaConfig(2, 6, 3, 2), A("0.5"));
    CHECK(r.contains(P("2", "0")));
  }
}

TEST_CASE("perfect CSIT region worked examples") {
  SUBCASE("(2,2,3,2) at alpha=0.6: sum bound 17/5, equal to the delayed bound") {
    const Region2D perfect = perfect_csit_region(AntennaConfig(2, 2, 3, 2), A("0.6"));
    CHECK(perfect.maximize(Rat(1), Rat(1)).first == R("17/5"));
    CHECK(equals(perfect, delayed_region(AntennaConfig(2, 2, 3, 2), A("0.6"))));
  }
  SUBCASE("(1,2,1,1) at alpha=0.4: sum bound inactive, unit square") {
    const Region2D perfect = perfect_csit_region(AntennaConfig(1, 2, 1, 1), A("0.4"));
    CHECK(perfect.vertices() == std::vector<GdofPoint>{P("0", "0"), P("1", "0"), P("1", "1"),
                                                       P("0", "1")});
  }
  SUBCASE("rejects non-canonical tuples") {
    CHECK_THROWS_AS(perfect_csit_region(AntennaConfig(2, 6, 3, 2), A("0.5")),
                    NonCanonicalConfig);
  }
}

TEST_CASE("DoF region worked examples") {
  SUBCASE("(2,2,3,2): pentagon with d1+d2 <= 3") {
    const Region2D r = dof_region_delayed(AntennaConfig(2, 2, 3, 2));
    CHECK(r.vertices() == std::vector<GdofPoint>{P("0", "0"), P("2", "0"), P("2", "1"),
                                                 P("1", "2"), P("0", "2")});
  }
  SUBCASE("(1,2,1,1): d1 + d2/2 <= 1") {
    const Region2D r = dof_region_delayed(AntennaConfig(1, 2, 1, 1));
    CHECK(r.vertices() == std::vector<GdofPoint>{P("0", "0"), P("1", "0"), P("1/2", "1"),
                                                 P("0", "1")});
  }
  SUBCASE("rejects non-canonical tuples") {
    CHECK_THROWS_AS(dof_region_delayed(AntennaConfig(2, 6, 3, 2)), NonCanonicalConfig);
  }
}

TEST_CASE("sum-GDoF closed form worked examples") {
  const AntennaConfig cfg(2, 2, 3, 2);
  CHECK(sum_gdof(cfg, A("0.5")) == R("7/2"));
  CHECK(sum_gdof(cfg, A("1.4")) == R("19/5"));
  CHECK_THROWS_AS(sum_gdof(AntennaConfig(2, 6, 3, 2), A("0.5")), NonCanonicalConfig);
}

TEST_CASE("perfect-CSIT sum-GDoF worked examples") {
  CHECK(perfect_sum_gdof(AntennaConfig(1, 2, 1, 2), A("0.6")) == R("12/5"));
  CHECK(perfect_sum_gdof(AntennaConfig(1, 2, 1, 1), A("1.4")) == Rat(2));
  CHECK(perfect_sum_gdof(AntennaConfig(2, 4, 3, 3), A("1.2")) == R("23/5"));
  // M2 <= N1 falls back to the delayed value (the regions coincide).
  CHECK(perfect_sum_gdof(AntennaConfig(2, 2, 3, 2), A("0.5")) ==
        sum_gdof(AntennaConfig(2, 2, 3, 2), A("0.5")));
  CHECK_THROWS_AS(perfect_sum_gdof(AntennaConfig(2, 6, 3, 2), A("0.5")), NonCanonicalConfig);
}

TEST_CASE("region family invariants over the canonical sweep") {
  // Entries up to 4 here; the acceptance suite runs the full-size sweeps.
  const auto configs = enumerate_configs(4, /*canonical_only=*/true);
  const auto grid = [] {
    std::vector<Alpha> g;
    for (int k = 0; k <= 12; ++k) g.push_back(Alpha(Rat(k, 4)));
    return g;
  }();

  for (const auto& cfg : configs) {
    const Region2D dof = dof_region_delayed(cfg);
    for (const auto& alpha : grid) {
      const Region2D delayed = delayed_region(cfg, alpha);
      const Region2D perfect = perfect_csit_region(cfg, alpha);

      // Delayed never exceeds perfect CSIT; DoF never exceeds GDoF.
      CHECK(subset(delayed, perfect));
      CHECK(subset(dof, delayed));

      // Coincidence whenever the cross link is receiver-limited.
      if (cfg.m2() <= cfg.n1()) CHECK(equals(delayed, perfect));

      // Closed-form sum equals the LP maximum, exactly.
      CHECK(delayed.maximize(Rat(1), Rat(1)).first == sum_gdof(cfg, alpha));
    }

    // The alpha = 1 slice is the DoF region, irredundant half-planes and all.
    const Region2D at_one = delayed_region(cfg, Alpha(Rat(1)));
    CHECK(equals(at_one, dof));
    CHECK(at_one.halfplanes() == dof.halfplanes());

    // V-shape of the sum: non-increasing up to 1, non-decreasing beyond.
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      const Rat lo = sum_gdof(cfg, grid[i]);
      const Rat hi = sum_gdof(cfg, grid[i + 1]);
      if (grid[i + 1].value() <= Rat(1)) {
        CHECK(hi <= lo);
      } else if (grid[i].value() >= Rat(1)) {
        CHECK(hi >= lo);
      }
    }

    // Both closed-form branches agree at alpha = 1 (continuity of the V).
    const Rat m1(cfg.m1()), m2(cfg.m2()), n1(cfg.n1()), n2(cfg.n2());
    const Rat np(cfg.n1_prime());
    const Rat weak_at_one = min(m1 + n2, m1 + n2 - (m1 - n1 + n2 * np / m2));
    const Rat strong_at_one = min(m1 + n2, n2 + n1 - (n2 + np) * np / m2 + np * np / m2);
    CHECK(weak_at_one == strong_at_one);
    CHECK(sum_gdof(cfg, Alpha(Rat(1))) == weak_at_one);
  }
}

TEST_CASE("nesting of delayed regions in alpha on the weak side") {
  const AntennaConfig cfg(2, 2, 3, 2);
  CHECK(subset(delayed_region(cfg, A("0.8")), delayed_region(cfg, A("0.4"))));
  CHECK(subset(delayed_region(cfg, A("1")), delayed_region(cfg, A("0.8"))));
  CHECK(equals(delayed_region(cfg, A("1.4")), perfect_csit_region(cfg, A("1.4"))));
}
