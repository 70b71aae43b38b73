#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace srcid {

/// Box [lower, upper] in R^n sampled with samples[k] cells along axis k.
struct GridSpec {
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<std::size_t> samples;

  std::size_t dim() const noexcept { return samples.size(); }
  std::size_t size() const noexcept;
  double spacing(std::size_t axis) const { return (upper[axis] - lower[axis]) / static_cast<double>(samples[axis]); }
  double length(std::size_t axis) const { return upper[axis] - lower[axis]; }

  /// Throws Error(InvalidSpec) if any structural invariant fails.
  void validate() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Convenience for the common cube case.
GridSpec cube_spec(std::size_t dim, double lower, double upper, std::size_t samples);

/// Cell-centred nodes x_i = lower + (i + 1/2) h, row-major multi-index
/// ordering (last axis fastest).
class Grid {
 public:
  explicit Grid(GridSpec spec);

  const GridSpec& spec() const noexcept { return spec_; }
  std::size_t dim() const noexcept { return spec_.dim(); }
  std::size_t size() const noexcept { return size_; }
  double spacing(std::size_t axis) const noexcept { return spacing_[axis]; }
  /// Product of the per-axis spacings, the quadrature weight of every node.
  double cell_volume() const noexcept { return cell_volume_; }
  double box_volume() const noexcept;

  std::span<const double> axis_nodes(std::size_t axis) const noexcept { return nodes_[axis]; }
  std::size_t stride(std::size_t axis) const noexcept { return strides_[axis]; }

  /// Writes the coordinates of the node with the given flat index.
  void node(std::size_t flat, std::span<double> out) const;
  /// Per-axis index of a flat index.
  std::size_t axis_index(std::size_t flat, std::size_t axis) const noexcept {
    return (flat / strides_[axis]) % spec_.samples[axis];
  }

 private:
  GridSpec spec_;
  std::size_t size_ = 0;
  double cell_volume_ = 1.0;
  std::vector<double> spacing_;
  std::vector<std::size_t> strides_;
  std::vector<std::vector<double>> nodes_;
};

using GridPtr = std::shared_ptr<const Grid>;

Grid make_grid(const GridSpec& spec);
GridPtr share_grid(const GridSpec& spec);

/// Signed DFT index of storage position j on an axis of n samples:
/// j for j < ceil(n/2), j - n otherwise.
inline long signed_index(std::size_t j, std::size_t n) noexcept {
  return j < (n + 1) / 2 ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(n);
}

/// Angular frequencies xi = 2 pi m / (N h) per axis, DFT ordering.
class FrequencyLattice {
 public:
  explicit FrequencyLattice(const GridSpec& spec);

  std::size_t dim() const noexcept { return freqs_.size(); }
  std::size_t size() const noexcept { return size_; }
  std::span<const double> axis(std::size_t k) const noexcept { return freqs_[k]; }
  /// Spacing 2 pi / L_k between neighbouring frequencies.
  double step(std::size_t k) const noexcept { return step_[k]; }
  /// Product of the per-axis steps, the quadrature weight in frequency space.
  double cell_volume() const noexcept { return cell_volume_; }

  /// True at the storage position of the unpaired -pi/h frequency of an even axis.
  bool is_nyquist(std::size_t k, std::size_t j) const noexcept {
    return freqs_[k].size() % 2 == 0 && j == freqs_[k].size() / 2;
  }

  /// Frequency used by first-order (odd) terms. Zero at the Nyquist position,
  /// where a real field carries no odd component.
  double odd_frequency(std::size_t k, std::size_t j) const noexcept {
    return is_nyquist(k, j) ? 0.0 : freqs_[k][j];
  }

  void frequency(std::size_t flat, std::span<double> out) const;
  double norm_squared(std::size_t flat) const noexcept;

  /// Per-axis index of a flat index (same ordering as Grid).
  std::size_t axis_index(std::size_t flat, std::size_t k) const noexcept {
    return (flat / strides_[k]) % freqs_[k].size();
  }

 private:
  std::size_t size_ = 0;
  double cell_volume_ = 1.0;
  std::vector<std::vector<double>> freqs_;
  std::vector<double> step_;
  std::vector<std::size_t> strides_;
};

FrequencyLattice frequency_lattice(const GridSpec& spec);

}  // namespace srcid
