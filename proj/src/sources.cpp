#include "srcid/sources.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "srcid/error.hpp"

namespace srcid {

namespace {

constexpr double kPi = std::numbers::pi;

double square1d(double x) {
  if (-20.0 <= x && x < -10.0) return -1.0;
  if (-10.0 <= x && x < 0.0) return 1.0;
  if (0.0 <= x && x < 10.0) return -1.0;
  if (10.0 <= x && x <= 20.0) return 1.0;
  return 0.0;
}

double triangle1d(double x) {
  if (-1.0 <= x && x < 0.0) return x + 1.0;
  if (0.0 <= x && x <= 1.0) return -x + 1.0;
  return 0.0;
}

double cosine2d(double x1, double x2) {
  if (-40.0 <= x1 && x1 <= 40.0 && -40.0 <= x2 && x2 <= 40.0) return std::cos(x1 / 20.0) * std::cos(x2 / 20.0);
  return 0.0;
}

// The fourth branch reads 0 <= x1 <= 10 (the pyramid over |x1| + |x2| <= 10).
double pyramid2d(double x1, double x2) {
  if (-10.0 <= x1 && x1 <= 0.0) {
    if (0.0 <= x2 && x2 <= 10.0 + x1) return 10.0 + x1 - x2;
    if (-10.0 - x1 <= x2 && x2 <= 0.0) return 10.0 + x1 + x2;
  }
  if (0.0 <= x1 && x1 <= 10.0) {
    if (0.0 <= x2 && x2 <= 10.0 - x1) return 10.0 - x1 - x2;
    if (-10.0 + x1 <= x2 && x2 <= 0.0) return 10.0 - x1 + x2;
  }
  return 0.0;
}

double sine3d(double x1, double x2, double x3) {
  const double r = 2.0 * kPi;
  if (-r <= x1 && x1 <= r && -r <= x2 && x2 <= r && -r <= x3 && x3 <= r) return std::sin((x1 + x2 + x3) / 20.0);
  return 0.0;
}

std::string number(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string_view to_string(SourceId id) noexcept {
  switch (id) {
    case SourceId::Square1d: return "square1d";
    case SourceId::Triangle1d: return "triangle1d";
    case SourceId::Cosine2d: return "cosine2d";
    case SourceId::Pyramid2d: return "pyramid2d";
    case SourceId::Sine3d: return "sine3d";
    case SourceId::Custom: return "custom";
  }
  return "unknown";
}

SourceId source_id_from_string(std::string_view name) {
  for (auto id : {SourceId::Square1d, SourceId::Triangle1d, SourceId::Cosine2d, SourceId::Pyramid2d, SourceId::Sine3d,
                  SourceId::Custom}) {
    if (to_string(id) == name) return id;
  }
  throw Error(ErrorCode::InvalidConfig, "unknown source id '" + std::string(name) + "'");
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> catalog{
      {"example1", 1, SourceId::Square1d, {2e-5, {1e-5}, 1.0, 5.0}, 1.0, {0.2, 0.15, 0.1, 0.05}},
      {"example2", 2, SourceId::Triangle1d, {2.0, {0.0}, 1.0, 0.2}, 2.0, {0.004, 0.003, 0.002, 0.001}},
      {"example3", 3, SourceId::Cosine2d, {0.2, {0.0, 0.0}, 0.999, 1.0}, 1.0, {0.025}},
      {"example4", 4, SourceId::Pyramid2d, {1.0, {0.0, 0.0}, 1.0, 0.4}, 0.6, {0.05}},
      {"example5", 5, SourceId::Sine3d, {0.4, {1.0, -0.5, -0.5}, 0.997, 3.0}, 3.0, {0.035}},
  };
  return catalog;
}

const Preset& preset_for(SourceId id) {
  for (const auto& p : presets()) {
    if (p.source == id) return p;
  }
  throw Error(ErrorCode::InvalidConfig, "no preset for source '" + std::string(to_string(id)) + "'");
}

std::string describe(const Preset& preset) {
  std::ostringstream s;
  s << "alpha2=" << number(preset.params.alpha2) << ", beta=";
  const auto& b = preset.params.beta;
  if (b.size() == 1) {
    s << number(b[0]);
  } else {
    s << '(';
    for (std::size_t k = 0; k < b.size(); ++k) s << (k ? "," : "") << number(b[k]);
    s << ')';
  }
  s << ", nu=" << number(preset.params.nu) << ", t0=" << number(preset.params.t0) << ", p=" << number(preset.p);
  return s.str();
}

SourceSpec builtin_source(SourceId id) {
  SourceSpec spec;
  spec.id = id;
  switch (id) {
    case SourceId::Square1d:
      // At N = 1024 the lattice stops short of the frequencies where the
      // inversion becomes unstable, so the default resolves them.
      spec.default_grid = cube_spec(1, -40.0, 40.0, 65536);
      break;
    case SourceId::Triangle1d: spec.default_grid = cube_spec(1, -8.0, 8.0, 1024); break;
    case SourceId::Cosine2d: spec.default_grid = cube_spec(2, -80.0, 80.0, 256); break;
    case SourceId::Pyramid2d: spec.default_grid = cube_spec(2, -20.0, 20.0, 256); break;
    case SourceId::Sine3d: spec.default_grid = cube_spec(3, -4.0 * kPi, 4.0 * kPi, 64); break;
    case SourceId::Custom: throw Error(ErrorCode::InvalidConfig, "custom sources have no catalog entry");
  }
  spec.dim = spec.default_grid.dim();
  spec.default_params = preset_for(id).params;
  return spec;
}

SourceSpec custom_source(GridSpec default_grid, ModelParams params, PointFunction eval) {
  default_grid.validate();
  if (!eval) throw Error(ErrorCode::InvalidConfig, "custom source needs an evaluator");
  SourceSpec spec;
  spec.id = SourceId::Custom;
  spec.dim = default_grid.dim();
  spec.default_grid = std::move(default_grid);
  spec.default_params = std::move(params);
  spec.custom_eval = std::move(eval);
  return spec;
}

double evaluate_source(const SourceSpec& spec, std::span<const double> x) {
  if (x.size() != spec.dim) {
    std::ostringstream msg;
    msg << "source '" << to_string(spec.id) << "' is " << spec.dim << "-dimensional, point has " << x.size()
        << " coordinates";
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
  switch (spec.id) {
    case SourceId::Square1d: return square1d(x[0]);
    case SourceId::Triangle1d: return triangle1d(x[0]);
    case SourceId::Cosine2d: return cosine2d(x[0], x[1]);
    case SourceId::Pyramid2d: return pyramid2d(x[0], x[1]);
    case SourceId::Sine3d: return sine3d(x[0], x[1], x[2]);
    case SourceId::Custom:
      if (!spec.custom_eval) throw Error(ErrorCode::InvalidConfig, "custom source has no evaluator");
      return spec.custom_eval(x);
  }
  return 0.0;
}

RealField sample_source(const SourceSpec& spec, const GridPtr& grid) {
  if (grid->dim() != spec.dim) {
    std::ostringstream msg;
    msg << "source '" << to_string(spec.id) << "' is " << spec.dim << "-dimensional, grid is " << grid->dim()
        << "-dimensional";
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
  std::vector<double> values(grid->size());
  std::vector<double> x(grid->dim());
  for (std::size_t i = 0; i < values.size(); ++i) {
    grid->node(i, x);
    values[i] = evaluate_source(spec, x);
  }
  RealField f(grid, std::move(values));
  f.require_finite("sample_source");
  return f;
}

RealField sample_source(const SourceSpec& spec, const GridSpec& grid) { return sample_source(spec, share_grid(grid)); }

}  // namespace srcid
