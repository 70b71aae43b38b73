#include <doctest.h>

#include <cmath>
#include <numbers>

#include "properties.hpp"
#include "srcid/error.hpp"
#include "srcid/spectral.hpp"

using namespace srcid;

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

}  // namespace

TEST_CASE("transform of zero and constant fields") {
  auto grid = share_grid(cube_spec(1, -5.0, 5.0, 64));
  const auto F0 = forward_transform(RealField::zeros(grid));
  for (auto c : F0.coeffs()) CHECK(c == cplx(0.0, 0.0));
  CHECK(inverse_transform_real(F0).values()[7] == 0.0);

  std::vector<double> ones(64, 1.0);
  const auto F1 = forward_transform(RealField(grid, ones));
  CHECK(std::abs(F1[0] - cplx(kInvSqrt2Pi * 10.0, 0.0)) < 1e-13);
  for (std::size_t j = 1; j < 64; ++j) CHECK(std::abs(F1[j]) < 1e-12);
}

TEST_CASE("indicator transform approximates the closed-form integral") {
  // [-10, 10] inside [-20, 20]; the edges fall on cell boundaries, so the
  // Riemann sum is the midpoint rule with error <= L h^2 max|g''| / 24 per part.
  auto grid = share_grid(cube_spec(1, -20.0, 20.0, 1024));
  std::vector<double> v(1024);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::fabs(grid->axis_nodes(0)[i]) < 10.0 ? 1.0 : 0.0;
  const auto F = forward_transform(RealField(grid, v));
  const auto lat = F.lattice();
  const double h = grid->spacing(0);
  for (std::size_t j = 1; j < 1024; ++j) {
    const double xi = lat.axis(0)[j];
    if (std::fabs(xi) > 20.0) continue;
    const double exact = kInvSqrt2Pi * 2.0 * std::sin(10.0 * xi) / xi;
    const double tol = 2.0 * kInvSqrt2Pi * 20.0 * h * h * xi * xi / 24.0 + 1e-12;
    CHECK(std::abs(F[j] - exact) <= tol);
  }
}

TEST_CASE("round trip, linearity and Parseval on random fields") {
  testing::Gen gen(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto grid = share_grid(gen.grid(8192));
    const auto f = gen.field(grid, gen.log_uniform(1e-3, 1e3));
    const auto g = gen.field(grid);
    const auto F = forward_transform(f);
    const auto back = inverse_transform_real(F);
    double err = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) err = std::max(err, std::fabs(back[i] - f[i]));
    CHECK(err <= 1e-12 * max_abs(f.values()));

    const double a = gen.uniform(-3, 3), b = gen.uniform(-3, 3);
    std::vector<double> comb(f.size());
    for (std::size_t i = 0; i < comb.size(); ++i) comb[i] = a * f[i] + b * g[i];
    const auto C = forward_transform(RealField(grid, comb));
    const auto G = forward_transform(g);
    double diff = 0.0, scale = 0.0;
    for (std::size_t j = 0; j < C.size(); ++j) {
      diff = std::max(diff, std::abs(C[j] - (a * F[j] + b * G[j])));
      scale = std::max(scale, std::abs(C[j]));
    }
    CHECK(diff <= 1e-12 * scale);

    double space = 0.0, freq = 0.0;
    for (double x : f.values()) space += x * x;
    for (auto c : F.coeffs()) freq += std::norm(c);
    space *= grid->cell_volume();
    freq *= F.lattice().cell_volume();
    CHECK(std::fabs(space - freq) <= 1e-10 * space);
  }
}

TEST_CASE("single coefficient inverts to a sampled exponential") {
  const GridSpec spec{{-2.0, 1.0}, {3.0, 4.5}, {12, 10}};
  auto grid = share_grid(spec);
  const FrequencyLattice lat(spec);
  const std::size_t target = 3 * 10 + 7;
  std::vector<cplx> coeffs(grid->size());
  coeffs[target] = 1.0;
  const auto u = inverse_transform(SpectralField(grid, coeffs));
  double xi[2], x[2];
  lat.frequency(target, xi);
  // u(x) = c e^{i xi.x} with c = dxi^n (2 pi)^{-n/2}.
  const double c = lat.cell_volume() / (2.0 * std::numbers::pi);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    grid->node(i, x);
    const cplx expect = c * std::exp(cplx(0.0, xi[0] * x[0] + xi[1] * x[1]));
    CHECK(std::abs(u.values()[i] - expect) < 1e-14);
  }
}

TEST_CASE("naive DFT oracle agrees with the FFT path") {
  testing::Gen gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto grid = share_grid(gen.grid(4096));
    const auto f = gen.field(grid);
    const auto A = forward_transform(f);
    const auto B = naive_dft(f);
    double err = 0.0;
    for (std::size_t j = 0; j < A.size(); ++j) err = std::max(err, std::abs(A[j] - B[j]));
    CHECK(err <= 1e-10);
  }
  auto big = share_grid(cube_spec(1, 0.0, 1.0, kNaiveDftMaxNodes + 2));
  try {
    naive_dft(RealField::zeros(big));
    FAIL("expected GridTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GridTooLarge);
  }
  auto small = share_grid(cube_spec(2, 0.0, 1.0, 4));
  std::vector<double> ones(16, 2.0);
  const auto Z = naive_dft(RealField(small, ones));
  for (std::size_t j = 1; j < Z.size(); ++j) CHECK(std::abs(Z[j]) < 1e-12);
}

TEST_CASE("non-Hermitian spectra are rejected by the real inverse") {
  auto grid = share_grid(cube_spec(1, 0.0, 1.0, 16));
  std::vector<cplx> coeffs(16);
  coeffs[3] = cplx(1.0, 0.0);
  try {
    inverse_transform_real(SpectralField(grid, coeffs));
    FAIL("expected SymmetryViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SymmetryViolation);
  }
}

TEST_CASE("mirror index pairs xi with -xi") {
  const GridSpec spec{{0.0, 0.0}, {1.0, 2.0}, {6, 5}};
  const Grid grid(spec);
  const FrequencyLattice lat(spec);
  double a[2], b[2];
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const std::size_t m = mirror_index(grid, j);
    if (m == grid.size()) {
      CHECK(lat.is_nyquist(0, lat.axis_index(j, 0)));
      continue;
    }
    lat.frequency(j, a);
    lat.frequency(m, b);
    CHECK(a[0] == doctest::Approx(-b[0]));
    CHECK(a[1] == doctest::Approx(-b[1]));
  }
}

TEST_CASE("non-finite input is rejected") {
  auto grid = share_grid(cube_spec(1, 0.0, 1.0, 8));
  std::vector<double> v(8, 0.0);
  v[2] = std::nan("");
  CHECK_THROWS_AS(forward_transform(RealField(grid, v)), Error);
}
