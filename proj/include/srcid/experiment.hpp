#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "srcid/metrics.hpp"
#include "srcid/model.hpp"
#include "srcid/regularize.hpp"
#include "srcid/sources.hpp"

namespace srcid {

/// A plane x_axis = value; the nearest grid plane is used.
struct SliceRequest {
  std::size_t axis = 0;
  double value = 0.0;
};

/// Parses "z=0", "x=1.5", "x2=-3" (x, y, z or x1, x2, ...). Throws Error(InvalidConfig).
SliceRequest parse_slice(const std::string& text);

struct OutputOptions {
  std::filesystem::path dir = "out";
  /// Write gridded dumps of every field.
  bool fields = true;
  std::vector<SliceRequest> slices;
};

struct ExperimentConfig {
  std::string name;
  SourceSpec source;
  ModelParams model;
  GridSpec grid;
  std::vector<double> epsilons;
  std::uint64_t seed = 0;
  RegConfig reg;
  OutputOptions outputs;

  /// Throws Error(InvalidConfig) / Error(DimensionMismatch) on inconsistencies.
  void validate() const;
};

/// Parses a JSON config. Relative paths inside it resolve against base_dir.
ExperimentConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir = ".");
ExperimentConfig load_config(const std::filesystem::path& path);

struct EpsilonRun {
  ErrorReport report;
  std::uint64_t seed = 0;
  RealField y_delta;
  RealField f_unreg;
  RealField f_reg;
  std::optional<std::string> warning;
};

struct RunArtifacts {
  std::string name;
  /// The regularization settings after delta_M and C were resolved.
  RegConfig reg;
  double C_norm = 0.0;
  double M = 0.0;
  RealField f;
  RealField y;
  /// One row per configured epsilon, in configured order.
  std::vector<EpsilonRun> rows;
};

/// synthesize -> add noise -> estimate delta -> choose mu -> invert both ways
/// -> report. The row for epsilons[i] uses seed + i. A module error is
/// rethrown with the same code and the stage name prefixed to its message.
RunArtifacts run_experiment(const ExperimentConfig& config);

/// CSV with header epsilon,delta,mu,abs_unreg,abs_reg,rel_unreg,rel_reg,theoretical_bound.
/// Numbers use the shortest round-trip representation.
std::string format_csv(const RunArtifacts& artifacts);
std::string format_table(const RunArtifacts& artifacts);
std::string format_json(const RunArtifacts& artifacts);

/// Writes errors.csv, errors.txt, errors.json and, when requested, field dumps
/// and slices into options.dir. Returns the files written.
std::vector<std::filesystem::path> write_artifacts(const RunArtifacts& artifacts, const OutputOptions& options);

/// Writes, for every row and request, the plane of each field nearest the
/// requested coordinate. Throws Error(SliceOutOfBox) when the coordinate lies
/// outside the box and Error(InvalidSpec) for 1D runs.
std::vector<std::filesystem::path> emit_slices(const RunArtifacts& artifacts, const std::vector<SliceRequest>& requests,
                                               const std::filesystem::path& dir);

/// Self-describing text format: header lines "dims", "lower", "upper",
/// "samples", one "axis k" block of node coordinates per axis, then a "field
/// <name>" block per field (row-major, one last-axis run per line).
struct NamedField {
  std::string name;
  const RealField* field;
};
void write_gridded(const std::filesystem::path& path, const std::vector<NamedField>& fields);

struct GriddedData {
  GridSpec spec;
  std::vector<std::string> names;
  std::vector<std::vector<double>> values;
};
GriddedData read_gridded(const std::filesystem::path& path);

/// Human-readable catalog of the five example presets.
std::string list_presets();

}  // namespace srcid
