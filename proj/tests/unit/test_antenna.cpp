#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "swbeam/antenna.hpp"
#include "swbeam/rng.hpp"

using namespace swbeam;

TEST_SUITE("antenna") {

TEST_CASE("sector beam length closed form") {
  CHECK(sector_beam_length(kTwoPi, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sector_beam_length(kPi / 2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(sector_beam_length(kPi / 8.0, 1.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS(sector_beam_length(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(sector_beam_length(kTwoPi + 0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(sector_beam_length(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("sector area is conserved for random widths") {
  Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const double theta = rng.next_double(1e-6, kTwoPi);
    const double r = rng.next_double(0.25, 4.0);
    const double len = sector_beam_length(theta, r);
    const double disc = kPi * r * r;
    CHECK(std::abs(0.5 * theta * len * len - disc) <= 1e-9 * disc);
  }
}

TEST_CASE("beam length decreases with width") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    double a = rng.next_double(1e-3, kTwoPi);
    double b = rng.next_double(1e-3, kTwoPi);
    if (a == b) {
      continue;
    }
    if (a > b) {
      std::swap(a, b);
    }
    CHECK(sector_beam_length(a, 1.5) > sector_beam_length(b, 1.5));
  }
}

TEST_CASE("region weights") {
  SUBCASE("quarter sector, eight neighbors") {
    const RegionWeights w = region_weights(kPi / 2.0, 1.0, 8.0);
    const double disc = kPi;
    CHECK(w.area_first / disc == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(w.area_last / disc == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(w.p_first == doctest::Approx(1.0 - std::pow(0.75, 8.0)).epsilon(1e-12));
    CHECK(w.p_last == doctest::Approx(1.0 - std::pow(0.25, 8.0)).epsilon(1e-12));
    CHECK(w.p_first == doctest::Approx(0.89989).epsilon(1e-4));
    CHECK(w.p_last == doctest::Approx(0.99998).epsilon(1e-4));
  }
  SUBCASE("full circle is one region") {
    const RegionWeights w = region_weights(kTwoPi, 1.0, 3.0);
    CHECK(w.area_first == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(w.area_last == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(w.p_first == 1.0);
    CHECK(w.p_last == 1.0);
  }
  SUBCASE("empty neighborhood") {
    const RegionWeights w = region_weights(kPi / 3.0, 1.0, 0.0);
    CHECK(w.p_first == 0.0);
    CHECK(w.p_last == 0.0);
  }
}

TEST_CASE("weighted beam length") {
  const double w = weighted_beam_length(kPi / 2.0, 1.0, 8.0);
  const double expected =
      2.0 * (1.0 - std::pow(0.75, 8.0)) * (1.0 - std::pow(0.25, 8.0));
  CHECK(w == doctest::Approx(expected).epsilon(1e-12));
  CHECK(w == doctest::Approx(1.7998).epsilon(1e-4));
  CHECK(weighted_beam_length(kPi / 2.0, 1.0, 0.0) == 0.0);
  CHECK(weighted_beam_length(kTwoPi, 1.0, 5.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("optimal beamwidth matches exhaustive search") {
  SUBCASE("singleton") {
    const double grid[] = {kTwoPi};
    CHECK(optimal_beamwidth(grid, 1.0, 5.0) == kTwoPi);
  }
  SUBCASE("default grid equals oracle") {
    const auto grid = default_beamwidth_grid();
    CHECK(optimal_beamwidth(grid, 1.0, 8.0) ==
          oracles::brute_best_beamwidth(grid, 1.0, 8.0));
  }
  SUBCASE("random instances") {
    Rng rng(5150);
    for (int i = 0; i < 100; ++i) {
      const double r = rng.next_double(0.3, 3.0);
      const double n = static_cast<double>(rng.next_index(31));
      std::vector<double> grid;
      const std::size_t size = 2 + rng.next_index(9);
      for (std::size_t k = 0; k < size; ++k) {
        grid.push_back(rng.next_double(1e-3, kTwoPi));
      }
      CHECK(optimal_beamwidth(grid, r, n) ==
            oracles::brute_best_beamwidth(grid, r, n));
    }
  }
  SUBCASE("all-zero weights tie-break toward smaller width") {
    const double grid[] = {kPi, kPi / 4.0, kPi / 2.0};
    CHECK(optimal_beamwidth(grid, 1.0, 0.0) == kPi / 4.0);
  }
  SUBCASE("empty candidates rejected") {
    CHECK_THROWS_AS(optimal_beamwidth({}, 1.0, 5.0), std::invalid_argument);
  }
}

TEST_CASE("sector coverage predicate") {
  const Point origin{0.0, 0.0};
  CHECK(sector_covers(origin, 0.0, kPi / 2.0, 2.0, origin));
  CHECK(sector_covers(origin, 0.0, kPi / 2.0, 2.0, {2.0, 0.0}));       // boundary distance
  CHECK_FALSE(sector_covers(origin, 0.0, kPi / 2.0, 2.0, {2.0 + 1e-9, 0.0}));
  CHECK_FALSE(sector_covers(origin, 0.0, kPi / 2.0, 2.0, {-1.0, 0.0})); // opposite side
  // half-angle boundary: bearing pi/4 with orientation 0, width pi/2
  CHECK(sector_covers(origin, 0.0, kPi / 2.0, 2.0, {1.0, 1.0}));
  CHECK_FALSE(sector_covers(origin, 0.0, kPi / 2.0, 2.0, {1.0, 1.001}));
  // wrap-around: orientation just below 2pi, target just above 0
  CHECK(sector_covers(origin, kTwoPi - 0.01, kPi / 4.0, 2.0, {1.0, 0.01}));
  // full-width sector covers every direction in range
  CHECK(sector_covers(origin, 1.0, kTwoPi, 1.0, {-1.0, 0.0}));
}

TEST_CASE("ula gain pattern") {
  SUBCASE("single element is omnidirectional") {
    for (int i = 0; i < 64; ++i) {
      const double phi = kTwoPi * i / 64.0;
      CHECK(ula_gain(1, 1.0, phi) == 1.0);
    }
  }
  SUBCASE("boresight gain equals the element count") {
    Rng rng(11);
    for (int m = 1; m <= 8; ++m) {
      const double boresight = rng.next_double(0.0, kTwoPi);
      CHECK(ula_gain(m, boresight, boresight) == doctest::Approx(m).epsilon(1e-12));
    }
  }
  SUBCASE("first null near boresight vanishes") {
    // m=4, theta_b=pi/2: array-factor nulls at cos(phi) = ±1/2.
    double best_phi = 0.0;
    double best = 1e300;
    for (int i = 0; i <= 200000; ++i) {
      const double phi = kPi / 2.0 - 1.0 + 2.0 * i / 200000.0;
      const double g = ula_gain(4, kPi / 2.0, phi);
      if (g < best) {
        best = g;
        best_phi = phi;
      }
    }
    CHECK(best < 1e-9);
    CHECK(ula_gain(4, kPi / 2.0, std::acos(0.5)) < 1e-9);
    CHECK(best_phi == doctest::Approx(std::acos(0.5)).epsilon(1e-3));
  }
  SUBCASE("gain is bounded by [0, m]") {
    for (int m : {2, 3, 5, 8}) {
      for (int i = 0; i < 10000; ++i) {
        const double g = ula_gain(m, 0.7, kTwoPi * i / 10000.0);
        CHECK(g >= 0.0);
        CHECK(g <= m + 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(ula_gain(0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("ula reach") {
  SUBCASE("single element reaches r everywhere") {
    for (int i = 0; i < 32; ++i) {
      CHECK(ula_reach(1, 0.3, kTwoPi * i / 32.0, 1.5, 2.0) == 1.5);
    }
  }
  SUBCASE("boresight reach is r * m^(1/alpha)") {
    CHECK(ula_reach(4, 1.0, 1.0, 1.0, 2.0) == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("null direction reaches zero") {
    CHECK(ula_reach(4, kPi / 2.0, std::acos(0.5), 1.0, 2.0) ==
          doctest::Approx(0.0).epsilon(1e-6));
  }
  CHECK_THROWS_AS(ula_reach(2, 0.0, 0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("sector to ula element mapping") {
  CHECK(map_sector_to_ula(1.0, 1.0) == 1);
  CHECK(map_sector_to_ula(2.83, 1.0) == 3);
  CHECK(map_sector_to_ula(2.0, 1.0) == 2);
  CHECK(map_sector_to_ula(0.2, 1.0) == 1);  // never below one element
}

TEST_CASE("antenna coverage dispatch") {
  const Point o{0.0, 0.0};
  SUBCASE("omni") {
    CHECK(antenna_covers(OmniAntenna{1.0}, o, 1.0, {1.0, 0.0}));
    CHECK_FALSE(antenna_covers(OmniAntenna{1.0}, o, 1.0, {1.1, 0.0}));
  }
  SUBCASE("sector") {
    const AntennaConfig c = SectorAntenna{kPi / 2.0, 2.0, 0.0};
    CHECK(antenna_covers(c, o, 1.0, {1.5, 0.0}));
    CHECK_FALSE(antenna_covers(c, o, 1.0, {0.0, 0.5}));
  }
  SUBCASE("ula default mode") {
    const AntennaConfig c = UlaAntenna{4, 0.0, 2.0, 0.0};
    CHECK(antenna_covers(c, o, 1.0, {2.0, 0.0}));        // boresight, reach 2r
    CHECK_FALSE(antenna_covers(c, o, 1.0, {2.001, 0.0}));
  }
  SUBCASE("ula calibrated mode pins the peak reach") {
    const AntennaConfig c = UlaAntenna{4, 0.0, 2.0, 3.0};
    CHECK(antenna_covers(c, o, 1.0, {3.0, 0.0}));
    CHECK_FALSE(antenna_covers(c, o, 1.0, {3.001, 0.0}));
  }
}

}  // TEST_SUITE
