#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace ringdyn::cli {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& context) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("config: unknown key '" + key + "' in " + context);
    }
  }
}

const json* find(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double get_number(const json& obj, const std::string& key, const std::string& context,
                  double fallback) {
  const json* v = find(obj, key);
  if (v == nullptr) return fallback;
  if (!v->is_number()) throw ConfigError("config: " + context + "." + key + " must be a number");
  return v->get<double>();
}

long get_integer(const json& obj, const std::string& key, const std::string& context,
                 long fallback) {
  const json* v = find(obj, key);
  if (v == nullptr) return fallback;
  if (!v->is_number_integer()) {
    throw ConfigError("config: " + context + "." + key + " must be an integer");
  }
  return v->get<long>();
}

GridSpec parse_grid(const json& obj, const std::string& context) {
  if (!obj.is_object()) throw ConfigError("config: " + context + " must be an object");
  reject_unknown_keys(obj, {"min", "max", "count", "scale"}, context);
  GridSpec grid;
  if (find(obj, "min") == nullptr || find(obj, "count") == nullptr) {
    throw ConfigError("config: " + context + " needs at least 'min' and 'count'");
  }
  grid.min = get_number(obj, "min", context, 0.0);
  grid.max = get_number(obj, "max", context, grid.min);
  grid.count = static_cast<int>(get_integer(obj, "count", context, 1));
  if (const json* scale = find(obj, "scale")) {
    if (!scale->is_string()) throw ConfigError("config: " + context + ".scale must be a string");
    const std::string s = scale->get<std::string>();
    if (s == "linear") {
      grid.scale = GridSpec::Scale::kLinear;
    } else if (s == "log2") {
      grid.scale = GridSpec::Scale::kLog2;
    } else {
      throw ConfigError("config: " + context + ".scale must be 'linear' or 'log2', got '" + s +
                        "'");
    }
  }
  grid.validate(context);
  return grid;
}

json grid_to_json(const GridSpec& grid) {
  json j;
  j["min"] = grid.min;
  j["max"] = grid.max;
  j["count"] = grid.count;
  j["scale"] = grid.scale == GridSpec::Scale::kLinear ? "linear" : "log2";
  return j;
}

}  // namespace

void GridSpec::validate(const std::string& name) const {
  if (count < 1) throw ConfigError("config: " + name + ".count must be >= 1");
  if (!std::isfinite(min) || !std::isfinite(max)) {
    throw ConfigError("config: " + name + " bounds must be finite");
  }
  if (count > 1 && min == max) {
    throw ConfigError("config: " + name + " with count > 1 needs distinct bounds");
  }
  if (scale == Scale::kLog2 && (min <= 0.0 || max <= 0.0)) {
    throw ConfigError("config: " + name + " with log2 scale needs positive bounds");
  }
}

std::vector<double> GridSpec::points() const {
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = min;
    return out;
  }
  if (scale == Scale::kLinear) {
    const double step = (max - min) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) out[i] = min + step * static_cast<double>(i);
    out[count - 1] = max;  // endpoint exact regardless of rounding
  } else {
    const double lo = std::log2(min);
    const double hi = std::log2(max);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) out[i] = std::exp2(lo + step * static_cast<double>(i));
    out[0] = min;
    out[count - 1] = max;
  }
  return out;
}

void RunConfig::validate() const {
  ring.validate();
  if (!std::isfinite(theta0) || !std::isfinite(psi0)) {
    throw ConfigError("config: initial point must be finite");
  }
  if (!(dt > 0.0)) throw ConfigError("config: integration.dt must be positive");
  if (n_steps < 1) throw ConfigError("config: integration.n_steps must be >= 1");
  if (sample_stride < 1) throw ConfigError("config: integration.sample_stride must be >= 1");
  if (floquet_steps < 1) throw ConfigError("config: integration.floquet_steps must be >= 1");
  if (psi_grid) psi_grid->validate("sweep.psi_grid");
  if (omega_grid) omega_grid->validate("sweep.omega_grid");
  if (alpha_grid) alpha_grid->validate("sweep.alpha_grid");
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: top level must be a JSON object");
  reject_unknown_keys(doc, {"ring", "initial", "integration", "sweep", "output"}, "top level");

  RunConfig config;
  const json* ring = find(doc, "ring");
  if (ring == nullptr || !ring->is_object()) {
    throw ConfigError("config: missing 'ring' object");
  }
  reject_unknown_keys(*ring, {"n", "alpha", "beta", "omega", "detuning"}, "'ring'");
  config.ring.n = static_cast<int>(get_integer(*ring, "n", "ring", 8));
  config.ring.alpha = get_number(*ring, "alpha", "ring", 0.0);
  config.ring.beta = get_number(*ring, "beta", "ring", 0.0);
  config.ring.omega = get_number(*ring, "omega", "ring", 0.0);
  config.ring.detuning = get_number(*ring, "detuning", "ring", 0.0);

  if (const json* initial = find(doc, "initial")) {
    if (!initial->is_object()) throw ConfigError("config: 'initial' must be an object");
    reject_unknown_keys(*initial, {"theta0", "psi0"}, "'initial'");
    config.theta0 = get_number(*initial, "theta0", "initial", 0.0);
    config.psi0 = get_number(*initial, "psi0", "initial", 0.0);
  }
  if (const json* integration = find(doc, "integration")) {
    if (!integration->is_object()) throw ConfigError("config: 'integration' must be an object");
    reject_unknown_keys(*integration, {"dt", "n_steps", "sample_stride", "floquet_steps"},
                        "'integration'");
    config.dt = get_number(*integration, "dt", "integration", 0.01);
    config.n_steps = get_integer(*integration, "n_steps", "integration", 1000);
    config.sample_stride = get_integer(*integration, "sample_stride", "integration", 1);
    config.floquet_steps = get_integer(*integration, "floquet_steps", "integration", 1000);
  }
  if (const json* sweep = find(doc, "sweep")) {
    if (!sweep->is_object()) throw ConfigError("config: 'sweep' must be an object");
    reject_unknown_keys(*sweep, {"psi_grid", "omega_grid", "alpha_grid"}, "'sweep'");
    if (const json* g = find(*sweep, "psi_grid")) config.psi_grid = parse_grid(*g, "sweep.psi_grid");
    if (const json* g = find(*sweep, "omega_grid")) {
      config.omega_grid = parse_grid(*g, "sweep.omega_grid");
    }
    if (const json* g = find(*sweep, "alpha_grid")) {
      config.alpha_grid = parse_grid(*g, "sweep.alpha_grid");
    }
  }
  if (const json* output = find(doc, "output")) {
    if (!output->is_string()) throw ConfigError("config: 'output' must be a string");
    config.output = output->get<std::string>();
  }

  config.validate();
  return config;
}

RunConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  return parse_config(doc);
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

json to_json(const RunConfig& config) {
  json doc;
  doc["ring"] = {{"n", config.ring.n},
                 {"alpha", config.ring.alpha},
                 {"beta", config.ring.beta},
                 {"omega", config.ring.omega},
                 {"detuning", config.ring.detuning}};
  doc["initial"] = {{"theta0", config.theta0}, {"psi0", config.psi0}};
  doc["integration"] = {{"dt", config.dt},
                        {"n_steps", config.n_steps},
                        {"sample_stride", config.sample_stride},
                        {"floquet_steps", config.floquet_steps}};
  json sweep = json::object();
  if (config.psi_grid) sweep["psi_grid"] = grid_to_json(*config.psi_grid);
  if (config.omega_grid) sweep["omega_grid"] = grid_to_json(*config.omega_grid);
  if (config.alpha_grid) sweep["alpha_grid"] = grid_to_json(*config.alpha_grid);
  if (!sweep.empty()) doc["sweep"] = sweep;
  if (config.output) doc["output"] = *config.output;
  return doc;
}

namespace {

const std::map<std::string, std::string>& preset_table() {
  static const std::map<std::string, std::string> table = {
      {"fig1b", R"json({
  "ring": {"n": 8, "alpha": 0.1, "beta": 1.0, "omega": 2.0, "detuning": 0.0},
  "initial": {"theta0": 0.0, "psi0": 1.5707963267948966},
  "integration": {"dt": 0.01, "n_steps": 10000, "sample_stride": 10}
})json"},
      {"fig1c", R"json({
  "ring": {"n": 8, "alpha": 0.1, "beta": 1.0, "omega": 2.0, "detuning": 0.2},
  "initial": {"theta0": 0.0, "psi0": 1.5707963267948966},
  "integration": {"dt": 0.01, "n_steps": 10000, "sample_stride": 10}
})json"},
      {"fig3a", R"json({
  "ring": {"n": 8, "alpha": 0.25, "beta": 1.0, "omega": 2.0, "detuning": 0.0},
  "sweep": {"psi_grid": {"min": 0.0, "max": 6.283185307179586, "count": 401, "scale": "linear"}}
})json"},
      {"fig3b", R"json({
  "ring": {"n": 8, "alpha": 0.5, "beta": 1.0, "omega": 2.0, "detuning": 0.0},
  "sweep": {"psi_grid": {"min": 0.0, "max": 6.283185307179586, "count": 401, "scale": "linear"}}
})json"},
      {"fig3c", R"json({
  "ring": {"n": 8, "alpha": 0.0, "beta": 1.0, "omega": 2.0, "detuning": 0.0},
  "sweep": {
    "alpha_grid": {"min": 0.0, "max": 1.0, "count": 101, "scale": "linear"},
    "psi_grid": {"min": 0.0, "max": 6.283185307179586, "count": 101, "scale": "linear"}
  }
})json"},
      {"fig4", R"json({
  "ring": {"n": 8, "alpha": 0.0, "beta": 1.0, "omega": 2.0, "detuning": 0.2},
  "initial": {"theta0": 0.0, "psi0": 0.0},
  "integration": {"floquet_steps": 1000},
  "sweep": {
    "alpha_grid": {"min": 0.0, "max": 1.0, "count": 64, "scale": "linear"},
    "omega_grid": {"min": 0.0625, "max": 2.0, "count": 64, "scale": "log2"}
  }
})json"}};
  return table;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, text] : preset_table()) out.push_back(name);
    return out;
  }();
  return names;
}

const std::string& preset_text(const std::string& name) {
  const auto& table = preset_table();
  const auto it = table.find(name);
  if (it == table.end()) {
    std::string known;
    for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown preset '" + name + "' (available: " + known + ")");
  }
  return it->second;
}

RunConfig preset(const std::string& name) { return parse_config_text(preset_text(name)); }

}  // namespace ringdyn::cli
