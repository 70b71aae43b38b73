#include <doctest.h>

#include <cmath>
#include <numbers>

#include "properties.hpp"
#include "srcid/error.hpp"
#include "srcid/grid.hpp"

using namespace srcid;

TEST_CASE("cell-centred nodes") {
  const Grid g1(cube_spec(1, -1.0, 1.0, 4));
  CHECK(g1.spacing(0) == 0.5);
  const double expect[] = {-0.75, -0.25, 0.25, 0.75};
  for (int i = 0; i < 4; ++i) CHECK(g1.axis_nodes(0)[i] == expect[i]);

  const Grid g2(cube_spec(1, 0.0, 1.0, 2));
  CHECK(g2.axis_nodes(0)[0] == 0.25);
  CHECK(g2.axis_nodes(0)[1] == 0.75);

  const Grid g3(cube_spec(2, 0.0, 1.0, 2));
  REQUIRE(g3.size() == 4);
  double x[2];
  const double rows[4][2] = {{0.25, 0.25}, {0.25, 0.75}, {0.75, 0.25}, {0.75, 0.75}};
  for (std::size_t i = 0; i < 4; ++i) {
    g3.node(i, x);
    CHECK(x[0] == rows[i][0]);
    CHECK(x[1] == rows[i][1]);
  }
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(make_grid(cube_spec(1, 1.0, 1.0, 8)), Error);
  CHECK_THROWS_AS(make_grid(cube_spec(1, 0.0, 1.0, 1)), Error);
  CHECK_THROWS_AS(make_grid(GridSpec{{0.0, 0.0}, {1.0}, {4, 4}}), Error);
  CHECK_THROWS_AS(make_grid(GridSpec{{}, {}, {}}), Error);
  try {
    make_grid(cube_spec(1, 2.0, 1.0, 8));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSpec);
  }
}

TEST_CASE("frequency lattice examples") {
  const auto lat = frequency_lattice(cube_spec(1, 0.0, 2.0 * std::numbers::pi, 4));
  const double expect[] = {0.0, 1.0, -2.0, -1.0};
  for (int j = 0; j < 4; ++j) CHECK(lat.axis(0)[j] == doctest::Approx(expect[j]).epsilon(1e-15));

  const GridSpec two = cube_spec(1, -3.0, 4.0, 2);
  const auto lat2 = frequency_lattice(two);
  CHECK(lat2.axis(0)[0] == 0.0);
  CHECK(lat2.axis(0)[1] == doctest::Approx(-std::numbers::pi / two.spacing(0)).epsilon(1e-15));
  CHECK(lat2.is_nyquist(0, 1));
  CHECK(lat2.odd_frequency(0, 1) == 0.0);
}

TEST_CASE("grid and lattice invariants over random specs") {
  testing::Gen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const GridSpec spec = gen.grid(4096);
    const Grid grid(spec);
    const FrequencyLattice lat(spec);
    std::size_t product = 1;
    for (auto n : spec.samples) product *= n;
    CHECK(grid.size() == product);
    CHECK(lat.size() == product);
    for (std::size_t k = 0; k < spec.dim(); ++k) {
      const std::size_t n = spec.samples[k];
      CHECK(spec.spacing(k) * static_cast<double>(n) == doctest::Approx(spec.length(k)).epsilon(1e-15));
      // Last node sits half a cell below the upper edge.
      CHECK(grid.axis_nodes(k)[n - 1] + 0.5 * grid.spacing(k) ==
            doctest::Approx(spec.upper[k]).epsilon(1e-13));
      int zeros = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const double xi = lat.axis(k)[j];
        if (xi == 0.0) ++zeros;
        CHECK(xi == doctest::Approx(2.0 * std::numbers::pi * static_cast<double>(signed_index(j, n)) /
                                    spec.length(k)).epsilon(1e-14));
        if (lat.is_nyquist(k, j)) continue;
        // -xi is on the lattice.
        const std::size_t mirror = (n - j) % n;
        CHECK(lat.axis(k)[mirror] == doctest::Approx(-xi).epsilon(1e-14));
      }
      CHECK(zeros == 1);
    }
  }
}
