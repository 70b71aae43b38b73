#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srcid/grid.hpp"
#include "srcid/model.hpp"
#include "srcid/spectral.hpp"

namespace srcid {

enum class SourceId { Square1d, Triangle1d, Cosine2d, Pyramid2d, Sine3d, Custom };

std::string_view to_string(SourceId id) noexcept;
/// Throws Error(InvalidConfig) for an unknown name.
SourceId source_id_from_string(std::string_view name);

using PointFunction = std::function<double(std::span<const double>)>;

struct SourceSpec {
  SourceId id = SourceId::Square1d;
  std::size_t dim = 1;
  /// Truncation box and resolution used when a run does not name a grid.
  GridSpec default_grid;
  ModelParams default_params;
  /// Pointwise evaluator for SourceId::Custom; ignored otherwise.
  PointFunction custom_eval;
};

/// Built-in catalog entry. Throws Error(InvalidConfig) for Custom, which has
/// no catalog entry.
SourceSpec builtin_source(SourceId id);

/// Custom source: caller supplies dimension, default grid and evaluator.
SourceSpec custom_source(GridSpec default_grid, ModelParams params, PointFunction eval);

/// Exact value at x. Intervals are half-open exactly where the defining
/// formulas write "a <= x < b". Throws Error(DimensionMismatch).
double evaluate_source(const SourceSpec& spec, std::span<const double> x);

/// evaluate_source at every node of the grid.
RealField sample_source(const SourceSpec& spec, const GridSpec& grid);
RealField sample_source(const SourceSpec& spec, const GridPtr& grid);

/// One example of the benchmark set with the parameters of its text.
struct Preset {
  std::string name;
  int example = 0;
  SourceId source = SourceId::Square1d;
  ModelParams params;
  double p = 1.0;
  /// Noise amplitudes of the example's figure.
  std::vector<double> figure_epsilons;
};

/// Noise amplitudes shared by every error table.
inline const std::vector<double> kTableEpsilons{0.01, 0.03, 0.05, 0.08, 0.1};

/// The five examples in order.
const std::vector<Preset>& presets();
const Preset& preset_for(SourceId id);

/// Parameter line of a preset, e.g. "alpha2=0.2, beta=(0,0), nu=0.999, t0=1, p=1".
std::string describe(const Preset& preset);

}  // namespace srcid
