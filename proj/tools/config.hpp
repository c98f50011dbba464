#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringdyn/errors.hpp"
#include "ringdyn/params.hpp"

namespace ringdyn::cli {

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// One sweep axis: `count` points from min to max, spaced linearly or
/// logarithmically (base 2). A count of 1 yields just {min}.
struct GridSpec {
  enum class Scale { kLinear, kLog2 };

  double min = 0.0;
  double max = 0.0;
  int count = 1;
  Scale scale = Scale::kLinear;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

  void validate(const std::string& name) const;
  std::vector<double> points() const;
};

/// Full run configuration, parsed from a single JSON document. Unknown
/// keys are rejected so typos in physics parameters fail loudly.
struct RunConfig {
  RingParams ring;
  double theta0 = 0.0;
  double psi0 = 0.0;
  double dt = 0.01;
  long n_steps = 1000;
  long sample_stride = 1;
  long floquet_steps = 1000;
  std::optional<GridSpec> psi_grid;
  std::optional<GridSpec> omega_grid;
  std::optional<GridSpec> alpha_grid;
  std::optional<std::string> output;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;

  void validate() const;
};

RunConfig parse_config(const nlohmann::json& doc);
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);
nlohmann::json to_json(const RunConfig& config);

/// Bundled preset names (fig1b, fig1c, fig3a, fig3b, fig3c, fig4).
const std::vector<std::string>& preset_names();
/// Raw JSON text of a bundled preset; ConfigError for unknown names.
const std::string& preset_text(const std::string& name);
RunConfig preset(const std::string& name);

}  // namespace ringdyn::cli
