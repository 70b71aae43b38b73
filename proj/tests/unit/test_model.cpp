#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "properties.hpp"
#include "srcid/error.hpp"
#include "srcid/model.hpp"
#include "srcid/regularize.hpp"
#include "srcid/sources.hpp"

using namespace srcid;

namespace {

ModelParams example2() { return preset_for(SourceId::Triangle1d).params; }

double l2(const RealField& f) {
  double s = 0.0;
  for (double v : f.values()) s += v * v;
  return std::sqrt(s * f.grid().cell_volume());
}

}  // namespace

TEST_CASE("symbol examples") {
  ModelParams m{2.0, {3.0}, 1.0, 1.0};
  const double zero[] = {0.0};
  const double one[] = {1.0};
  CHECK(symbol_z(zero, m) == cplx(1.0, 0.0));
  CHECK(symbol_z(one, m) == cplx(3.0, 3.0));

  ModelParams unit{1.0, {0.0}, 1.0, 1.0};
  // 1 / (1 - e^{-1}) evaluated in 50 digits.
  CHECK(std::abs(lambda_multiplier(zero, unit) - 1.5819767068693264244) < 1e-15);
}

TEST_CASE("one_minus_exp_neg matches a high-precision evaluation") {
  testing::Gen gen(17);
  for (int i = 0; i < 2000; ++i) {
    const double a = gen.log_uniform(1e-12, 60.0), b = gen.uniform(-1e-3, 1e-3) * (i % 2 ? 1.0 : 1e4);
    const cplx got = one_minus_exp_neg(cplx(a, b));
    using testing::Hp;
    const Hp e = boost::multiprecision::exp(-Hp(a));
    const Hp re = 1 - e * boost::multiprecision::cos(Hp(b));
    const Hp im = e * boost::multiprecision::sin(Hp(b));
    const double mag = std::hypot(static_cast<double>(re), static_cast<double>(im));
    CHECK(std::abs(got - cplx(static_cast<double>(re), static_cast<double>(im))) <= 4e-16 * mag);
  }
  CHECK(one_minus_exp_neg(cplx(800.0, 3.0)) == cplx(1.0, 0.0));
}

TEST_CASE("Lambda approaches z at high frequency and grows without bound") {
  ModelParams m{0.5, {1.0}, 1.0, 2.0};
  for (double xi = 4.0; xi < 1e4; xi *= 1.7) {
    const double x[] = {xi};
    const cplx z = symbol_z(x, m);
    const cplx lam = lambda_multiplier(x, m);
    if ((m.alpha2 * xi * xi + m.nu) * m.t0 > 14.0) CHECK(std::abs(lam - z) / std::abs(z) < 1e-6);
    CHECK(std::abs(lam) >= std::abs(z) / (1.0 + std::exp(-(m.alpha2 * xi * xi + m.nu) * m.t0)));
  }
}

TEST_CASE("forward multiplier limits") {
  ModelParams m{1.0, {0.0}, 1.0, 1.0};
  const double zero[] = {0.0};
  CHECK(forward_multiplier(zero, std::log(2.0), m).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(forward_multiplier(zero, 1e-12, m)) < 2e-12);
  const double xi[] = {2.0};
  ModelParams adv{1.0, {0.7}, 1.0, 1.0};
  CHECK(std::abs(forward_multiplier(xi, 1e3, adv) - 1.0 / symbol_z(xi, adv)) < 1e-15);
}

TEST_CASE("lattice invariants of the symbol and multipliers") {
  testing::Gen gen(23);
  for (int trial = 0; trial < 200; ++trial) {
    const GridSpec spec = gen.grid(4096);
    const ModelParams m = gen.model(spec.dim());
    const FrequencyLattice lat(spec);
    const auto z = lattice_symbol(lat, m);
    const auto lam = lambda_on_lattice(lat, m);
    for (std::size_t j = 0; j < z.size(); ++j) {
      CHECK(z[j].real() >= m.nu);
      const cplx fwd = one_minus_exp_neg(z[j] * m.t0) / z[j];
      CHECK(std::abs(lam[j] * fwd - 1.0) < 1e-12);
      const double re = m.alpha2 * lat.norm_squared(j) + m.nu;
      CHECK(std::abs(lam[j]) >= std::abs(z[j]) / (1.0 + std::exp(-re * m.t0)) * (1.0 - 1e-15));
    }
  }
}

TEST_CASE("validation") {
  ModelParams bad{0.0, {0.0}, 1.0, 1.0};
  CHECK_THROWS_AS(bad.validate(1), Error);
  ModelParams ok{1.0, {0.0, 0.0}, 1.0, 1.0};
  try {
    ok.validate(1);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("synthesized observation of the triangle source") {
  const auto src = builtin_source(SourceId::Triangle1d);
  const auto f = sample_source(src, src.default_grid);
  CHECK(l2(synthesize_observation(RealField::zeros(f.grid_ptr()), example2())) == 0.0);
  const auto y = synthesize_observation(f, example2());
  const auto& m = example2();
  CHECK(l2(y) < l2(f) * (-std::expm1(-m.nu * m.t0)) / m.nu);
  // Smooth bump: positive peak at the origin, no sign changes of note.
  double peak = 0.0;
  for (double v : y.values()) peak = std::max(peak, v);
  CHECK(peak > 0.0);
  for (double v : y.values()) CHECK(v > -1e-12 * peak);
  CHECK(testing::relative_l2(unregularized_invert(y, m), f) < 1e-10);
}

TEST_CASE("constant source gives the spatially constant ODE solution") {
  auto grid = share_grid(GridSpec{{-3.0, 0.0}, {3.0, 4.0}, {16, 8}});
  const ModelParams m{0.3, {1.5, -2.0}, 0.8, 1.3};
  const double c = 2.5;
  const RealField f(grid, std::vector<double>(grid->size(), c));
  const double expect = c * -std::expm1(-m.nu * m.t0) / m.nu;
  const auto spectral = synthesize_observation(f, m);
  const auto stepped = timestep_oracle(f, m, 200);
  const auto quiet = timestep_oracle(RealField::zeros(grid), m, 10);
  for (double v : spectral.values()) CHECK(v == doctest::Approx(expect).epsilon(1e-12));
  for (double v : stepped.values()) CHECK(v == doctest::Approx(expect).epsilon(1e-5));
  for (double v : quiet.values()) CHECK(v == 0.0);
}

TEST_CASE("finite-difference oracle converges to the spectral map") {
  // Smooth periodic-compatible source; dt proportional to h.
  const ModelParams m{0.5, {0.8}, 1.0, 0.5};
  std::vector<double> diffs;
  for (std::size_t n : {32, 64, 128}) {
    auto grid = share_grid(cube_spec(1, -10.0, 10.0, n));
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = grid->axis_nodes(0)[i];
      v[i] = std::exp(-x * x / 2.0);
    }
    const RealField f(grid, v);
    diffs.push_back(testing::relative_l2(timestep_oracle(f, m, static_cast<int>(n)), synthesize_observation(f, m)));
  }
  for (std::size_t i = 1; i < diffs.size(); ++i) CHECK(diffs[i - 1] / diffs[i] > 1.8);
}

TEST_CASE("oracle rejects bad step counts") {
  auto grid = share_grid(cube_spec(1, 0.0, 1.0, 8));
  CHECK_THROWS_AS(timestep_oracle(RealField::zeros(grid), example2(), 0), Error);
}
