#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "properties.hpp"
#include "srcid/error.hpp"
#include "srcid/noise.hpp"
#include "srcid/regularize.hpp"
#include "srcid/sources.hpp"

using namespace srcid;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Io;
}

struct Example2 {
  SourceSpec src = builtin_source(SourceId::Triangle1d);
  ModelParams m = preset_for(SourceId::Triangle1d).params;
};

}  // namespace

TEST_CASE("parameter choice rules") {
  CHECK(choose_mu({2.0, PlainDelta{}, {}}, 0.01) == doctest::Approx(0.3162277660168379332).epsilon(1e-15));
  CHECK(choose_mu({1.7, KnownC{0.4}, {}}, 0.4) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(choose_mu({1.0, MaxNoise{0.105}, {}}, 0.05) == doctest::Approx(0.78089666561908001555).epsilon(1e-15));
  CHECK(choose_mu({1.0, MaxNoise{0.105}, 0.25}, 0.05) == 0.25);

  CHECK(code_of([] { choose_mu({1.0, PlainDelta{}, {}}, 0.0); }) == ErrorCode::NonpositiveDelta);
  CHECK(code_of([] { choose_mu({1.0, MaxNoise{0.1}, {}}, 0.2); }) == ErrorCode::DeltaExceedsDeltaM);
  CHECK(code_of([] { choose_mu({1.0, KnownC{}, {}}, 0.2); }) == ErrorCode::InvalidConfig);
  CHECK(code_of([] { choose_mu({1.0, MaxNoise{}, {}}, 0.2); }) == ErrorCode::InvalidConfig);
  CHECK(code_of([] { choose_mu({0.0, PlainDelta{}, {}}, 0.2); }) == ErrorCode::InvalidSpec);
  CHECK(code_of([] { choose_mu({INFINITY, PlainDelta{}, {}}, 0.2); }) == ErrorCode::InvalidSpec);
}

TEST_CASE("rules agree with a high-precision evaluation") {
  testing::Gen gen(8);
  for (int i = 0; i < 300; ++i) {
    const double delta = gen.log_uniform(1e-8, 1.0), p = gen.log_uniform(0.05, 8.0);
    const double C = gen.log_uniform(1e-3, 1e3), dM = delta * gen.uniform(1.0, 50.0);
    auto near = [](double v) { return doctest::Approx(v).epsilon(1e-14); };
    CHECK(choose_mu({p, KnownC{C}, {}}, delta) == near(testing::hp_rule_mu(delta, C, p)));
    CHECK(choose_mu({p, PlainDelta{}, {}}, delta) == near(testing::hp_rule_mu(delta, 1.0, p)));
    CHECK(choose_mu({p, MaxNoise{dM}, {}}, delta) == near(testing::hp_rule_mu(delta, dM, p)));
  }
}

TEST_CASE("regime warnings") {
  CHECK_FALSE(regime_warning({1.0, PlainDelta{}, {}}, 0.01, 0.5));
  CHECK(regime_warning({1.0, PlainDelta{}, {}}, 0.01, 1.0));
  CHECK(regime_warning({1.0, KnownC{0.1}, {}}, 0.2, 0.9));
}

TEST_CASE("bound constants") {
  CHECK(bound_M({2.0, {0.0}, 1.0, 1.0}, 1) == 3.0);
  CHECK(bound_M({2.0, {0.0}, 1.0, 1e12}, 1) == doctest::Approx(3.0));
  const ModelParams ex5 = preset_for(SourceId::Sine3d).params;
  CHECK(bound_M(ex5, 3) == doctest::Approx(2.2630254037844386468).epsilon(1e-15));

  const ModelParams three{2.0, {0.0}, 1.0, 1.0};
  CHECK(bound_K(three, {1.0, PlainDelta{}, {}}, 1, 1.0) == 7.0);
  CHECK(bound_K(three, {1.0, MaxNoise{1.0}, {}}, 1, 1.0) == 7.0);
  CHECK(bound_K(ex5, {3.0, PlainDelta{}, {}}, 3, 2.0) == doctest::Approx(6.5260508075688772935).epsilon(1e-15));
}

TEST_CASE("Holder bounds") {
  CHECK(holder_bound(7.0, 0.01, 1.0) == doctest::Approx(1.5081042830223186052).epsilon(1e-14));
  for (double d : {1e-6, 1e-3, 0.2}) CHECK(holder_bound(3.0, d, 2.0) == doctest::Approx(3.0 * std::sqrt(d)));
  double prev = INFINITY;
  for (double d = 1.0; d > 1e-12; d /= 10.0) {
    const double b = holder_bound(5.0, d, 1.5);
    CHECK(b < prev);
    prev = b;
  }
  CHECK(prev < 1e-4);
  // Known-C form, evaluated by hand for p = 2: 2 sqrt(delta) sqrt(C) (M + 1/2).
  CHECK(known_c_bound(0.04, 4.0, 2.0, 3.0) == doctest::Approx(2.0 * 0.2 * 2.0 * 3.5));
}

TEST_CASE("sampled inequality suites") {
  testing::Gen gen(1);
  for (const auto& r : {testing::resolvent_bound(gen), testing::rational_bounds(gen), testing::amplification_cap(gen),
                        testing::multiplier_bound(gen, 200), testing::smoothing_bound(gen, 200)}) {
    INFO(r.name << " worst ratio " << r.worst_ratio);
    CHECK(r.ok());
  }
}

TEST_CASE("zero data and noiseless limits") {
  Example2 ex;
  const auto f = sample_source(ex.src, ex.src.default_grid);
  const auto zero = regularized_invert(RealField::zeros(f.grid_ptr()), ex.m, 0.3);
  for (double v : zero.values()) CHECK(v == 0.0);

  const auto y = synthesize_observation(f, ex.m);
  CHECK(testing::relative_l2(unregularized_invert(y, ex.m), f) < 1e-10);
  CHECK(testing::relative_l2(regularized_invert(y, ex.m, 1e-4), f) < 1e-3);
  CHECK(code_of([&] { regularized_invert(y, ex.m, 0.0); }) == ErrorCode::InvalidSpec);
}

TEST_CASE("regularization beats the raw inverse on noisy data") {
  Example2 ex;
  const auto f = sample_source(ex.src, ex.src.default_grid);
  const auto y = synthesize_observation(f, ex.m);
  const auto yd = add_noise(y, {0.1, 1});
  const double delta = estimate_noise_level(y, yd);
  const double mu = choose_mu({2.0, PlainDelta{}, {}}, delta);
  const double unreg = testing::relative_l2(unregularized_invert(yd, ex.m), f);
  const double reg = testing::relative_l2(regularized_invert(yd, ex.m, mu), f);
  CHECK(unreg > 20.0 * reg);
}

TEST_CASE("raw inverse error grows as the lattice refines") {
  Example2 ex;
  double prev = 0.0;
  for (std::size_t n : {256, 512, 1024}) {
    auto grid = share_grid(cube_spec(1, -8.0, 8.0, n));
    const auto f = sample_source(ex.src, grid);
    const auto yd = add_noise(synthesize_observation(f, ex.m), {0.1, 1});
    const double err = testing::relative_l2(unregularized_invert(yd, ex.m), f);
    CHECK(err > prev);
    prev = err;
  }
}
