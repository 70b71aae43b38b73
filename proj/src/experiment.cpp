#include "srcid/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "srcid/error.hpp"
#include "srcid/noise.hpp"

namespace srcid {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string num(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <class Fn>
auto stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), std::string("stage '") + name + "': " + e.what());
  }
}

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::InvalidConfig, "config: " + what); }

void check_keys(const json& obj, const char* where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) config_error(std::string(where) + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      config_error("unknown key '" + key + "' in " + where);
    }
  }
}

double get_number(const json& v, const std::string& what) {
  if (!v.is_number()) config_error(what + " must be a number");
  return v.get<double>();
}

/// A scalar is broadcast to every axis.
std::vector<double> get_axis_numbers(const json& v, std::size_t dim, const std::string& what) {
  if (v.is_number()) return std::vector<double>(dim, v.get<double>());
  if (!v.is_array() || v.size() != dim) {
    throw Error(ErrorCode::DimensionMismatch, "config: " + what + " needs " + std::to_string(dim) + " entries");
  }
  std::vector<double> out;
  for (const auto& e : v) out.push_back(get_number(e, what));
  return out;
}

std::size_t get_count(const json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<long long>() < 1) config_error(what + " must be a positive integer");
  return v.get<std::size_t>();
}

PointFunction nearest_cell_lookup(const GriddedData& data, std::size_t which) {
  const Grid grid(data.spec);
  auto values = data.values[which];
  return [grid, values = std::move(values)](std::span<const double> x) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < grid.dim(); ++k) {
      const double t = (x[k] - grid.spec().lower[k]) / grid.spacing(k);
      if (!(t >= 0.0) || t >= static_cast<double>(grid.spec().samples[k])) return 0.0;
      flat += static_cast<std::size_t>(t) * grid.stride(k);
    }
    return values[flat];
  };
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

SliceRequest parse_slice(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) config_error("slice '" + text + "' must look like z=0");
  const std::string axis = trim(text.substr(0, eq));
  const std::string value = trim(text.substr(eq + 1));
  SliceRequest r;
  if (axis == "x") {
    r.axis = 0;
  } else if (axis == "y") {
    r.axis = 1;
  } else if (axis == "z") {
    r.axis = 2;
  } else if (axis.size() >= 2 && axis[0] == 'x') {
    std::size_t k = 0;
    auto res = std::from_chars(axis.data() + 1, axis.data() + axis.size(), k);
    if (res.ec != std::errc() || res.ptr != axis.data() + axis.size() || k < 1) {
      config_error("slice axis '" + axis + "' not understood");
    }
    r.axis = k - 1;
  } else {
    config_error("slice axis '" + axis + "' not understood");
  }
  auto res = std::from_chars(value.data(), value.data() + value.size(), r.value);
  if (value.empty() || res.ec != std::errc() || res.ptr != value.data() + value.size()) {
    config_error("slice value '" + value + "' is not a number");
  }
  return r;
}

void ExperimentConfig::validate() const {
  if (name.empty()) config_error("name must not be empty");
  grid.validate();
  if (source.dim != grid.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "config: source dimension " + std::to_string(source.dim) +
                                                  " differs from grid dimension " + std::to_string(grid.dim()));
  }
  model.validate(grid.dim());
  reg.validate();
  if (epsilons.empty()) config_error("noise.epsilon must list at least one value");
  for (double e : epsilons) {
    if (!(e >= 0.0) || !std::isfinite(e)) config_error("noise amplitudes must be finite and >= 0");
  }
  for (const auto& s : outputs.slices) {
    if (s.axis >= grid.dim()) {
      throw Error(ErrorCode::DimensionMismatch, "config: slice axis " + std::to_string(s.axis + 1) +
                                                    " exceeds grid dimension " + std::to_string(grid.dim()));
    }
  }
}

ExperimentConfig parse_config(const std::string& json_text, const fs::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    config_error(std::string("malformed JSON: ") + e.what());
  }
  check_keys(doc, "config", {"name", "source", "model", "grid", "noise", "regularization", "outputs"});
  for (const char* key : {"name", "source", "noise"}) {
    if (!doc.contains(key)) config_error(std::string("missing '") + key + "'");
  }

  ExperimentConfig cfg;
  if (!doc["name"].is_string()) config_error("name must be a string");
  cfg.name = doc["name"].get<std::string>();

  // Source: a catalog id, or {"id": "custom", "file": ..., "field": ...}.
  const json& src = doc["source"];
  std::optional<Preset> preset;
  if (src.is_string()) {
    const SourceId id = source_id_from_string(src.get<std::string>());
    if (id == SourceId::Custom) config_error("a custom source needs an object with 'file'");
    cfg.source = builtin_source(id);
    preset = preset_for(id);
  } else {
    check_keys(src, "source", {"id", "file", "field"});
    if (!src.contains("id") || src["id"] != "custom") config_error("source objects must have id 'custom'");
    if (!src.contains("file") || !src["file"].is_string()) config_error("custom source needs 'file'");
    const auto data = read_gridded(base_dir / src["file"].get<std::string>());
    std::size_t which = 0;
    if (src.contains("field")) {
      const auto name = src["field"].get<std::string>();
      auto it = std::find(data.names.begin(), data.names.end(), name);
      if (it == data.names.end()) config_error("custom source file has no field '" + name + "'");
      which = static_cast<std::size_t>(it - data.names.begin());
    }
    if (!doc.contains("model")) config_error("a custom source needs an explicit model");
    ModelParams placeholder;
    placeholder.beta.assign(data.spec.dim(), 0.0);
    cfg.source = custom_source(data.spec, placeholder, nearest_cell_lookup(data, which));
  }
  const std::size_t dim = cfg.source.dim;

  cfg.model = cfg.source.default_params;
  if (doc.contains("model")) {
    const json& m = doc["model"];
    check_keys(m, "model", {"alpha2", "beta", "nu", "t0"});
    if (!preset) {
      for (const char* key : {"alpha2", "beta", "nu", "t0"}) {
        if (!m.contains(key)) config_error(std::string("model.") + key + " is required for a custom source");
      }
    }
    if (m.contains("alpha2")) cfg.model.alpha2 = get_number(m["alpha2"], "model.alpha2");
    if (m.contains("beta")) cfg.model.beta = get_axis_numbers(m["beta"], dim, "model.beta");
    if (m.contains("nu")) cfg.model.nu = get_number(m["nu"], "model.nu");
    if (m.contains("t0")) cfg.model.t0 = get_number(m["t0"], "model.t0");
  }

  cfg.grid = cfg.source.default_grid;
  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    check_keys(g, "grid", {"lower", "upper", "samples"});
    if (g.contains("lower")) cfg.grid.lower = get_axis_numbers(g["lower"], dim, "grid.lower");
    if (g.contains("upper")) cfg.grid.upper = get_axis_numbers(g["upper"], dim, "grid.upper");
    if (g.contains("samples")) {
      const json& s = g["samples"];
      if (s.is_array()) {
        if (s.size() != dim) throw Error(ErrorCode::DimensionMismatch, "config: grid.samples needs one entry per axis");
        cfg.grid.samples.clear();
        for (const auto& e : s) cfg.grid.samples.push_back(get_count(e, "grid.samples"));
      } else {
        cfg.grid.samples.assign(dim, get_count(s, "grid.samples"));
      }
    }
  }

  const json& noise = doc["noise"];
  check_keys(noise, "noise", {"epsilon", "seed"});
  if (!noise.contains("epsilon")) config_error("noise.epsilon is required");
  if (noise["epsilon"].is_number()) {
    cfg.epsilons.push_back(noise["epsilon"].get<double>());
  } else if (noise["epsilon"].is_array()) {
    for (const auto& e : noise["epsilon"]) cfg.epsilons.push_back(get_number(e, "noise.epsilon"));
  } else {
    config_error("noise.epsilon must be a number or a list");
  }
  if (noise.contains("seed")) {
    if (!noise["seed"].is_number_unsigned()) config_error("noise.seed must be a nonnegative integer");
    cfg.seed = noise["seed"].get<std::uint64_t>();
  }

  cfg.reg.p = preset ? preset->p : 1.0;
  cfg.reg.rule = MaxNoise{};
  if (doc.contains("regularization")) {
    const json& r = doc["regularization"];
    check_keys(r, "regularization", {"p", "rule", "delta_M", "C", "mu"});
    if (r.contains("p")) cfg.reg.p = get_number(r["p"], "regularization.p");
    const std::string rule = r.value("rule", std::string("max-noise"));
    if (rule == "max-noise") {
      MaxNoise mn;
      if (r.contains("delta_M")) mn.delta_M = get_number(r["delta_M"], "regularization.delta_M");
      cfg.reg.rule = mn;
    } else if (rule == "plain-delta") {
      cfg.reg.rule = PlainDelta{};
    } else if (rule == "known-c") {
      KnownC kc;
      if (r.contains("C")) kc.C = get_number(r["C"], "regularization.C");
      cfg.reg.rule = kc;
    } else {
      config_error("regularization.rule must be max-noise, plain-delta or known-c");
    }
    if (r.contains("delta_M") && rule != "max-noise") config_error("delta_M only applies to the max-noise rule");
    if (r.contains("C") && rule != "known-c") config_error("C only applies to the known-c rule");
    if (r.contains("mu")) cfg.reg.mu_override = get_number(r["mu"], "regularization.mu");
  } else if (!preset) {
    config_error("a custom source needs regularization.p");
  }

  cfg.outputs.dir = fs::path("out") / cfg.name;
  if (doc.contains("outputs")) {
    const json& o = doc["outputs"];
    check_keys(o, "outputs", {"dir", "fields", "slices"});
    if (o.contains("dir")) cfg.outputs.dir = o["dir"].get<std::string>();
    if (o.contains("fields")) {
      if (!o["fields"].is_boolean()) config_error("outputs.fields must be true or false");
      cfg.outputs.fields = o["fields"].get<bool>();
    }
    if (o.contains("slices")) {
      for (const auto& s : o["slices"]) {
        if (!s.is_string()) config_error("outputs.slices entries look like \"z=0\"");
        cfg.outputs.slices.push_back(parse_slice(s.get<std::string>()));
      }
    }
  }

  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open config '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.parent_path());
}

RunArtifacts run_experiment(const ExperimentConfig& config) {
  stage("config", [&] { config.validate(); });
  const GridPtr grid = stage("grid", [&] { return share_grid(config.grid); });
  RealField f = stage("sample_source", [&] { return sample_source(config.source, grid); });
  RealField y = stage("synthesize", [&] { return synthesize_observation(f, config.model); });

  RegConfig reg = config.reg;
  const double C_norm = stage("hp_norm", [&] { return hp_norm(f, reg.p); });
  if (auto* kc = std::get_if<KnownC>(&reg.rule); kc && !kc->C) kc->C = C_norm;

  struct Noisy {
    RealField y_delta;
    double delta;
  };
  std::vector<Noisy> noisy;
  double max_delta = 0.0;
  for (std::size_t i = 0; i < config.epsilons.size(); ++i) {
    RealField y_delta = stage("add_noise", [&] { return add_noise(y, {config.epsilons[i], config.seed + i}); });
    const double delta = stage("estimate_delta", [&] { return estimate_noise_level(y, y_delta); });
    max_delta = std::max(max_delta, delta);
    noisy.push_back({std::move(y_delta), delta});
  }
  if (auto* mn = std::get_if<MaxNoise>(&reg.rule); mn && !mn->delta_M && max_delta > 0.0) {
    mn->delta_M = 1.05 * max_delta;
  }

  RunArtifacts out{config.name, reg, C_norm, bound_M(config.model, grid->dim()), std::move(f), std::move(y), {}};
  for (std::size_t i = 0; i < noisy.size(); ++i) {
    const double delta = noisy[i].delta;
    const RealField& y_delta = noisy[i].y_delta;
    // Exact data needs no regularization; mu = 0 is the exact inverse.
    const bool exact = delta == 0.0 && !reg.mu_override;
    const double mu = exact ? 0.0 : stage("choose_mu", [&] { return choose_mu(reg, delta); });
    RealField f_unreg = stage("unregularized_invert", [&] { return unregularized_invert(y_delta, config.model); });
    RealField f_reg = exact ? f_unreg : stage("regularized_invert", [&] {
      return regularized_invert(y_delta, config.model, mu);
    });
    const double bound =
        stage("theoretical_bound", [&] { return theoretical_bound(reg, delta, config.model, grid->dim(), C_norm); });
    ErrorReport report = stage("error_report", [&] {
      return error_report(out.f, f_unreg, f_reg, {config.epsilons[i], delta, mu, bound});
    });
    std::optional<std::string> warning = exact ? std::nullopt : regime_warning(reg, delta, mu);
    out.rows.push_back({report, config.seed + i, y_delta, std::move(f_unreg), std::move(f_reg), std::move(warning)});
  }
  return out;
}

std::string format_csv(const RunArtifacts& artifacts) {
  std::string s = "epsilon,delta,mu,abs_unreg,abs_reg,rel_unreg,rel_reg,theoretical_bound\n";
  for (const auto& row : artifacts.rows) {
    const auto& r = row.report;
    s += num(r.epsilon) + ',' + num(r.delta) + ',' + num(r.mu) + ',' + num(r.abs_unreg) + ',' + num(r.abs_reg) + ',' +
         num(r.rel_unreg) + ',' + num(r.rel_reg) + ',' + num(r.theoretical_bound) + '\n';
  }
  return s;
}

std::string format_table(const RunArtifacts& artifacts) {
  std::ostringstream s;
  s << artifacts.name << "  rule=" << rule_name(artifacts.reg.rule) << "  p=" << num(artifacts.reg.p);
  if (const auto* mn = std::get_if<MaxNoise>(&artifacts.reg.rule); mn && mn->delta_M) {
    s << "  delta_M=" << num(*mn->delta_M);
  }
  if (const auto* kc = std::get_if<KnownC>(&artifacts.reg.rule); kc && kc->C) s << "  C=" << num(*kc->C);
  if (artifacts.reg.mu_override) s << "  mu(fixed)=" << num(*artifacts.reg.mu_override);
  s << "  |f|_Hp=" << num(artifacts.C_norm) << "  M=" << num(artifacts.M) << '\n';
  char line[256];
  std::snprintf(line, sizeof line, "%10s %10s %8s | %12s %12s | %12s %12s | %10s\n", "epsilon", "delta", "mu",
                "|f-f_d|", "|f-f_d,mu|", "rel unreg", "rel reg", "bound");
  s << line;
  for (const auto& row : artifacts.rows) {
    const auto& r = row.report;
    std::snprintf(line, sizeof line, "%10.4g %10.4g %8.4f | %12.4f %12.4f | %12.4f %12.4f | %10.4g\n", r.epsilon,
                  r.delta, r.mu, r.abs_unreg, r.abs_reg, r.rel_unreg, r.rel_reg, r.theoretical_bound);
    s << line;
  }
  for (const auto& row : artifacts.rows) {
    if (row.warning) s << "note (epsilon=" << num(row.report.epsilon) << "): " << *row.warning << '\n';
  }
  return s.str();
}

std::string format_json(const RunArtifacts& artifacts) {
  json doc;
  doc["name"] = artifacts.name;
  doc["rule"] = rule_name(artifacts.reg.rule);
  doc["p"] = artifacts.reg.p;
  doc["hp_norm"] = artifacts.C_norm;
  doc["M"] = artifacts.M;
  if (const auto* mn = std::get_if<MaxNoise>(&artifacts.reg.rule); mn && mn->delta_M) doc["delta_M"] = *mn->delta_M;
  if (const auto* kc = std::get_if<KnownC>(&artifacts.reg.rule); kc && kc->C) doc["C"] = *kc->C;
  json rows = json::array();
  for (const auto& row : artifacts.rows) {
    const auto& r = row.report;
    json j{{"epsilon", r.epsilon},     {"seed", row.seed},           {"delta", r.delta},
           {"mu", r.mu},               {"abs_unreg", r.abs_unreg},   {"abs_reg", r.abs_reg},
           {"rel_unreg", r.rel_unreg}, {"rel_reg", r.rel_reg},       {"theoretical_bound", r.theoretical_bound}};
    // Known-C rows carry known_c_bound in theoretical_bound; the Holder form
    // with K = C + 2M is reported alongside.
    if (const auto* kc = std::get_if<KnownC>(&artifacts.reg.rule); kc && kc->C && r.delta > 0.0) {
      j["holder_bound"] = holder_bound(*kc->C + 2.0 * artifacts.M, r.delta, artifacts.reg.p);
    }
    if (row.warning) j["warning"] = *row.warning;
    rows.push_back(std::move(j));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + '\n';
}

void write_gridded(const fs::path& path, const std::vector<NamedField>& fields) {
  if (fields.empty()) throw Error(ErrorCode::InvalidSpec, "write_gridded: no fields");
  const Grid& grid = fields.front().field->grid();
  for (const auto& nf : fields) {
    if (nf.field->grid().spec() != grid.spec()) throw Error(ErrorCode::GridMismatch, "write_gridded: mixed grids");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
  const auto& spec = grid.spec();
  out << "srcid-grid 1\ndims " << spec.dim() << "\nlower";
  for (double v : spec.lower) out << ' ' << num(v);
  out << "\nupper";
  for (double v : spec.upper) out << ' ' << num(v);
  out << "\nsamples";
  for (auto n : spec.samples) out << ' ' << n;
  out << '\n';
  for (std::size_t k = 0; k < spec.dim(); ++k) {
    out << "axis " << k << '\n';
    for (double x : grid.axis_nodes(k)) out << num(x) << '\n';
  }
  const std::size_t run = spec.samples.back();
  std::string line;
  for (const auto& nf : fields) {
    out << "field " << nf.name << '\n';
    const auto v = nf.field->values();
    for (std::size_t i = 0; i < v.size(); i += run) {
      line.clear();
      for (std::size_t j = 0; j < run; ++j) {
        if (j) line += ' ';
        line += num(v[i + j]);
      }
      line += '\n';
      out << line;
    }
  }
  if (!out) throw Error(ErrorCode::Io, "write to '" + path.string() + "' failed");
}

GriddedData read_gridded(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open gridded file '" + path.string() + "'");
  auto fail = [&](const std::string& what) -> void {
    throw Error(ErrorCode::InvalidConfig, "gridded file '" + path.string() + "': " + what);
  };
  std::string word;
  int version = 0;
  if (!(in >> word >> version) || word != "srcid-grid" || version != 1) fail("bad header");
  std::size_t dim = 0;
  if (!(in >> word >> dim) || word != "dims" || dim == 0) fail("bad dims line");
  GriddedData data;
  auto read_list = [&](const char* key, auto& target) {
    if (!(in >> word) || word != key) fail(std::string("expected '") + key + "'");
    target.resize(dim);
    for (auto& v : target) {
      if (!(in >> v)) fail(std::string("short '") + key + "' line");
    }
  };
  read_list("lower", data.spec.lower);
  read_list("upper", data.spec.upper);
  read_list("samples", data.spec.samples);
  data.spec.validate();
  for (std::size_t k = 0; k < dim; ++k) {
    std::size_t idx = 0;
    if (!(in >> word >> idx) || word != "axis" || idx != k) fail("expected 'axis " + std::to_string(k) + "'");
    double skip = 0.0;
    for (std::size_t i = 0; i < data.spec.samples[k]; ++i) {
      if (!(in >> skip)) fail("short axis block");
    }
  }
  const std::size_t n = data.spec.size();
  std::string name;
  while (in >> word >> name) {
    if (word != "field") fail("expected 'field'");
    std::vector<double> values(n);
    for (auto& v : values) {
      if (!(in >> v)) fail("short field '" + name + "'");
    }
    data.names.push_back(name);
    data.values.push_back(std::move(values));
  }
  if (data.names.empty()) fail("no fields");
  return data;
}

namespace {

fs::path eps_file(const fs::path& dir, const std::string& stem, std::size_t i, const std::string& suffix) {
  return dir / (stem + "-eps" + std::to_string(i) + suffix);
}

RealField plane(const RealField& f, std::size_t axis, std::size_t index) {
  const auto& spec = f.grid().spec();
  GridSpec sub;
  for (std::size_t k = 0; k < spec.dim(); ++k) {
    if (k == axis) continue;
    sub.lower.push_back(spec.lower[k]);
    sub.upper.push_back(spec.upper[k]);
    sub.samples.push_back(spec.samples[k]);
  }
  auto grid = share_grid(sub);
  std::vector<double> values;
  values.reserve(grid->size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.grid().axis_index(i, axis) == index) values.push_back(f[i]);
  }
  return RealField(grid, std::move(values));
}

}  // namespace

std::vector<fs::path> emit_slices(const RunArtifacts& artifacts, const std::vector<SliceRequest>& requests,
                                  const fs::path& dir) {
  const Grid& grid = artifacts.f.grid();
  if (grid.dim() < 2) throw Error(ErrorCode::InvalidSpec, "slices need a grid of dimension 2 or more");
  std::vector<std::size_t> indices;
  for (const auto& r : requests) {
    if (r.axis >= grid.dim()) {
      throw Error(ErrorCode::DimensionMismatch, "slice axis " + std::to_string(r.axis + 1) + " exceeds dimension");
    }
    const auto& spec = grid.spec();
    if (!(r.value >= spec.lower[r.axis] && r.value <= spec.upper[r.axis])) {
      throw Error(ErrorCode::SliceOutOfBox, "slice x" + std::to_string(r.axis + 1) + "=" + num(r.value) +
                                                " lies outside [" + num(spec.lower[r.axis]) + ", " +
                                                num(spec.upper[r.axis]) + "]");
    }
    const double t = (r.value - spec.lower[r.axis]) / grid.spacing(r.axis) - 0.5;
    const auto n = static_cast<long>(spec.samples[r.axis]);
    indices.push_back(static_cast<std::size_t>(std::clamp(std::lround(t), 0L, n - 1)));
  }
  fs::create_directories(dir);
  static const char* kAxisNames[] = {"x", "y", "z"};
  std::vector<fs::path> written;
  for (std::size_t i = 0; i < artifacts.rows.size(); ++i) {
    const auto& row = artifacts.rows[i];
    for (std::size_t q = 0; q < requests.size(); ++q) {
      const std::size_t axis = requests[q].axis;
      const std::string axis_name = axis < 3 ? kAxisNames[axis] : "x" + std::to_string(axis + 1);
      const RealField f = plane(artifacts.f, axis, indices[q]);
      const RealField yd = plane(row.y_delta, axis, indices[q]);
      const RealField fu = plane(row.f_unreg, axis, indices[q]);
      const RealField fr = plane(row.f_reg, axis, indices[q]);
      const auto path = eps_file(dir, "slice-" + axis_name + std::to_string(indices[q]), i, ".grid");
      write_gridded(path, {{"source", &f}, {"noisy_data", &yd}, {"unregularized", &fu}, {"regularized", &fr}});
      written.push_back(path);
    }
  }
  return written;
}

std::vector<fs::path> write_artifacts(const RunArtifacts& artifacts, const OutputOptions& options) {
  std::error_code ec;
  fs::create_directories(options.dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create '" + options.dir.string() + "': " + ec.message());
  std::vector<fs::path> written;
  auto put = [&](const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw Error(ErrorCode::Io, "write to '" + path.string() + "' failed");
    written.push_back(path);
  };
  put(options.dir / "errors.csv", format_csv(artifacts));
  put(options.dir / "errors.txt", format_table(artifacts));
  put(options.dir / "errors.json", format_json(artifacts));
  if (options.fields) {
    const auto path = options.dir / "truth.grid";
    write_gridded(path, {{"source", &artifacts.f}, {"observation", &artifacts.y}});
    written.push_back(path);
    for (std::size_t i = 0; i < artifacts.rows.size(); ++i) {
      const auto& row = artifacts.rows[i];
      const auto p = eps_file(options.dir, "fields", i, ".grid");
      write_gridded(p, {{"noisy_data", &row.y_delta}, {"unregularized", &row.f_unreg}, {"regularized", &row.f_reg}});
      written.push_back(p);
    }
  }
  if (!options.slices.empty()) {
    auto more = emit_slices(artifacts, options.slices, options.dir);
    written.insert(written.end(), more.begin(), more.end());
  }
  return written;
}

std::string list_presets() {
  std::ostringstream s;
  for (const auto& p : presets()) {
    const auto spec = builtin_source(p.source);
    const auto& g = spec.default_grid;
    s << p.name << "  source=" << to_string(p.source) << "  " << describe(p) << "\n    box=[" << num(g.lower[0])
      << ", " << num(g.upper[0]) << "]^" << g.dim() << "  samples=" << g.samples[0] << "^" << g.dim()
      << "  figure epsilon={";
    for (std::size_t i = 0; i < p.figure_epsilons.size(); ++i) s << (i ? ", " : "") << num(p.figure_epsilons[i]);
    s << "}\n";
  }
  return s.str();
}

}  // namespace srcid
