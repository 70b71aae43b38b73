#include "srcid/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "srcid/error.hpp"

namespace srcid {

std::size_t GridSpec::size() const noexcept {
  std::size_t total = samples.empty() ? 0 : 1;
  for (auto n : samples) total *= n;
  return total;
}

void GridSpec::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidSpec, "invalid grid: " + what); };
  if (samples.empty()) fail("dimension must be at least 1");
  if (lower.size() != samples.size() || upper.size() != samples.size()) {
    fail("lower/upper/samples must all have length n");
  }
  for (std::size_t k = 0; k < samples.size(); ++k) {
    std::ostringstream axis;
    axis << " on axis " << k;
    if (!std::isfinite(lower[k]) || !std::isfinite(upper[k])) fail("non-finite bound" + axis.str());
    if (!(upper[k] > lower[k])) fail("upper must exceed lower" + axis.str());
    if (samples[k] < 2) fail("at least 2 samples required" + axis.str());
    if (!(spacing(k) > 0.0)) fail("spacing underflows" + axis.str());
  }
}

GridSpec cube_spec(std::size_t dim, double lower, double upper, std::size_t samples) {
  return GridSpec{std::vector<double>(dim, lower), std::vector<double>(dim, upper),
                  std::vector<std::size_t>(dim, samples)};
}

namespace {

std::vector<std::size_t> row_major_strides(const std::vector<std::size_t>& samples) {
  std::vector<std::size_t> strides(samples.size(), 1);
  for (std::size_t k = samples.size(); k-- > 1;) strides[k - 1] = strides[k] * samples[k];
  return strides;
}

}  // namespace

Grid::Grid(GridSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  size_ = spec_.size();
  strides_ = row_major_strides(spec_.samples);
  spacing_.resize(dim());
  nodes_.resize(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    const double h = spec_.spacing(k);
    spacing_[k] = h;
    cell_volume_ *= h;
    auto& axis = nodes_[k];
    axis.resize(spec_.samples[k]);
    for (std::size_t i = 0; i < axis.size(); ++i) {
      axis[i] = spec_.lower[k] + (static_cast<double>(i) + 0.5) * h;
    }
  }
}

double Grid::box_volume() const noexcept {
  double v = 1.0;
  for (std::size_t k = 0; k < dim(); ++k) v *= spec_.length(k);
  return v;
}

void Grid::node(std::size_t flat, std::span<double> out) const {
  for (std::size_t k = 0; k < dim(); ++k) out[k] = nodes_[k][axis_index(flat, k)];
}

Grid make_grid(const GridSpec& spec) { return Grid(spec); }

GridPtr share_grid(const GridSpec& spec) { return std::make_shared<const Grid>(spec); }

FrequencyLattice::FrequencyLattice(const GridSpec& spec) {
  spec.validate();
  size_ = spec.size();
  strides_ = row_major_strides(spec.samples);
  freqs_.resize(spec.dim());
  step_.resize(spec.dim());
  for (std::size_t k = 0; k < spec.dim(); ++k) {
    const std::size_t n = spec.samples[k];
    // 2 pi m / (N h) == 2 pi m / L; using L avoids the rounding of h.
    const double dxi = 2.0 * std::numbers::pi / spec.length(k);
    step_[k] = dxi;
    cell_volume_ *= dxi;
    freqs_[k].resize(n);
    for (std::size_t j = 0; j < n; ++j) freqs_[k][j] = dxi * static_cast<double>(signed_index(j, n));
  }
}

void FrequencyLattice::frequency(std::size_t flat, std::span<double> out) const {
  for (std::size_t k = 0; k < dim(); ++k) out[k] = freqs_[k][axis_index(flat, k)];
}

double FrequencyLattice::norm_squared(std::size_t flat) const noexcept {
  double s = 0.0;
  for (std::size_t k = 0; k < dim(); ++k) {
    const double xi = freqs_[k][axis_index(flat, k)];
    s += xi * xi;
  }
  return s;
}

FrequencyLattice frequency_lattice(const GridSpec& spec) { return FrequencyLattice(spec); }

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidSpec: return "invalid-spec";
    case ErrorCode::NonFinite: return "non-finite";
    case ErrorCode::SymmetryViolation: return "symmetry-violation";
    case ErrorCode::GridTooLarge: return "grid-too-large";
    case ErrorCode::SingularSolve: return "singular-solve";
    case ErrorCode::GridMismatch: return "grid-mismatch";
    case ErrorCode::OddIntervalCount: return "odd-interval-count";
    case ErrorCode::DeltaExceedsDeltaM: return "delta-exceeds-deltaM";
    case ErrorCode::NonpositiveDelta: return "nonpositive-delta";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::SliceOutOfBox: return "slice-out-of-box";
    case ErrorCode::BoundViolation: return "bound-violation";
    case ErrorCode::InvalidConfig: return "invalid-config";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

}  // namespace srcid
