#include <doctest.h>

#include <cmath>
#include <numbers>

#include "properties.hpp"
#include "srcid/error.hpp"
#include "srcid/noise.hpp"

using namespace srcid;

TEST_CASE("the Gaussian stream is pinned") {
  // mt19937_64 reference value required by the C++ standard.
  std::mt19937_64 engine;
  engine.discard(9999);
  CHECK(engine() == 9981545732273789042ULL);

  // First draws, from an independent MT19937-64 and Box-Muller evaluated in 50 digits.
  GaussianStream s1(1);
  const double seed1[] = {0.3509924978084910245, 0.40529019332161596692, 1.0859449105047104931,
                          0.14429265930606542525};
  for (double v : seed1) CHECK(s1.next() == doctest::Approx(v).epsilon(1e-14));
  GaussianStream s42(42);
  const double seed42[] = {-1.0771745442782879053, -1.2860634502166487381, 1.0945198485006107329,
                           1.2616856516484892987};
  for (double v : seed42) CHECK(s42.next() == doctest::Approx(v).epsilon(1e-14));
}

TEST_CASE("zero noise leaves data untouched and seeds reproduce") {
  testing::Gen gen(2);
  auto grid = share_grid(cube_spec(2, 0.0, 1.0, 16));
  const auto y = gen.field(grid);
  const auto same = add_noise(y, {0.0, 9});
  for (std::size_t i = 0; i < y.size(); ++i) CHECK(same[i] == y[i]);
  const auto a = add_noise(y, {0.1, 9});
  const auto b = add_noise(y, {0.1, 9});
  const auto c = add_noise(y, {0.1, 10});
  bool differs = false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    CHECK(a[i] == b[i]);
    differs = differs || a[i] != c[i];
  }
  CHECK(differs);
  CHECK_THROWS_AS(add_noise(y, {-0.1, 1}), Error);
}

TEST_CASE("noise statistics over a million nodes") {
  auto grid = share_grid(cube_spec(1, 0.0, 1.0, 1000000));
  const double eps = 0.05;
  const auto yd = add_noise(RealField::zeros(grid), {eps, 77});
  double mean = 0.0;
  for (double v : yd.values()) mean += v;
  mean /= 1e6;
  double var = 0.0;
  for (double v : yd.values()) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / (1e6 - 1));
  CHECK(std::fabs(mean) < 4.0 * eps / 1000.0);
  CHECK(std::fabs(sd - eps) < 0.01 * eps);
}

TEST_CASE("composite Simpson") {
  const double c3[] = {1.0, 1.0, 1.0};
  CHECK(composite_simpson(c3, 0.5) == doctest::Approx(1.0));
  // Exact for monomials up to degree 3.
  for (int deg = 0; deg <= 3; ++deg) {
    std::vector<double> s(11);
    for (int i = 0; i <= 10; ++i) s[i] = std::pow(-1.0 + 0.3 * i, deg);
    const double exact = (std::pow(2.0, deg + 1) - std::pow(-1.0, deg + 1)) / (deg + 1);
    CHECK(composite_simpson(s, 0.3) == doctest::Approx(exact).epsilon(1e-13));
  }
  const double four[] = {1.0, 2.0, 3.0, 4.0};
  try {
    composite_simpson(four, 1.0);
    FAIL("expected OddIntervalCount");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OddIntervalCount);
  }
}

TEST_CASE("noise level estimates") {
  auto grid = share_grid(cube_spec(1, 2.0, 7.0, 40));
  const RealField y = RealField::zeros(grid);
  CHECK(estimate_noise_level(y, y) == 0.0);
  const RealField shifted(grid, std::vector<double>(40, -0.3));
  CHECK(estimate_noise_level(y, shifted) == doctest::Approx(0.3 * std::sqrt(5.0)).epsilon(1e-14));

  auto circle = share_grid(cube_spec(1, 0.0, 2.0 * std::numbers::pi, 64));
  std::vector<double> s(64);
  for (std::size_t i = 0; i < 64; ++i) s[i] = std::sin(circle->axis_nodes(0)[i]);
  CHECK(std::fabs(estimate_noise_level(RealField::zeros(circle), RealField(circle, s)) - std::sqrt(std::numbers::pi)) <
        1e-6);

  auto odd = share_grid(cube_spec(1, 0.0, 1.0, 9));
  CHECK_THROWS_AS(estimate_noise_level(RealField::zeros(odd), RealField::zeros(odd)), Error);
  CHECK_THROWS_AS(estimate_noise_level(RealField::zeros(grid), RealField::zeros(circle)), Error);
}

TEST_CASE("delta grows linearly in epsilon with slope sqrt(box volume)") {
  auto grid = share_grid(GridSpec{{-4.0, 0.0}, {4.0, 3.0}, {128, 64}});
  const RealField y = RealField::zeros(grid);
  std::vector<double> eps{0.01, 0.03, 0.05, 0.08, 0.1}, delta;
  for (double e : eps) delta.push_back(estimate_noise_level(y, add_noise(y, {e, 5})));
  CHECK(testing::ls_slope(eps, delta) == doctest::Approx(std::sqrt(24.0)).epsilon(0.1));
}
