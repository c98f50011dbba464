#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "ringdyn/version.hpp"
#include "verify.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::string preset_name;
  std::string out_path;
  int workers = 1;
};

void add_common_options(CLI::App* sub, CommonOptions& opts, bool with_workers) {
  auto* config = sub->add_option("--config", opts.config_path, "JSON configuration file");
  auto* preset =
      sub->add_option("--preset", opts.preset_name, "bundled preset (fig1b, fig1c, fig3a, fig3b, fig3c, fig4)");
  config->excludes(preset);
  preset->excludes(config);
  sub->add_option("--out", opts.out_path,
                  "output CSV path (falls back to the config's 'output', then stdout)");
  if (with_workers) {
    sub->add_option("--workers", opts.workers, "worker threads for sweep cells")
        ->check(CLI::PositiveNumber);
  }
}

ringdyn::cli::RunConfig resolve_config(const CommonOptions& opts) {
  if (!opts.preset_name.empty()) return ringdyn::cli::preset(opts.preset_name);
  if (!opts.config_path.empty()) return ringdyn::cli::load_config_file(opts.config_path);
  throw ringdyn::cli::ConfigError("pass --config <path> or --preset <name>");
}

void emit_to_output(const CommonOptions& opts, const ringdyn::cli::RunConfig& config,
                    const std::function<void(std::ostream&)>& emit) {
  std::string path = opts.out_path;
  if (path.empty() && config.output) path = *config.output;
  if (path.empty()) {
    emit(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ringdyn::Error("cannot open output file '" + path + "'");
  emit(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ring-oscillator decoupled-cluster simulation and stability toolkit"};
  app.set_version_flag("--version", std::string("ringdyn ") + ringdyn::kVersion);
  app.require_subcommand(1);

  CommonOptions simulate_opts, eigs_opts, sweep_u_opts, sweep_a_opts, floquet_opts;
  std::string verify_out;

  auto* simulate = app.add_subcommand(
      "simulate", "integrate the ring from a decoupled initial point and emit the trajectory");
  add_common_options(simulate, simulate_opts, false);

  auto* eigs = app.add_subcommand(
      "eigs", "block eigenvalues versus cluster phase difference (uniform frequencies)");
  add_common_options(eigs, eigs_opts, false);

  auto* sweep_uniform = app.add_subcommand(
      "sweep-uniform", "max transverse growth rate over an (alpha, psi) grid");
  add_common_options(sweep_uniform, sweep_u_opts, true);

  auto* sweep_alternating = app.add_subcommand(
      "sweep-alternating", "max transverse Floquet exponent over an (alpha, detuning) grid");
  add_common_options(sweep_alternating, sweep_a_opts, true);

  auto* floquet = app.add_subcommand(
      "floquet", "per-block Floquet exponents for one detuned configuration");
  add_common_options(floquet, floquet_opts, false);

  auto* verify = app.add_subcommand("verify", "run the library invariant suite");
  verify->add_option("--out", verify_out, "report path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      const auto config = resolve_config(simulate_opts);
      emit_to_output(simulate_opts, config,
                     [&](std::ostream& out) { ringdyn::cli::cmd_simulate(config, out); });
    } else if (eigs->parsed()) {
      const auto config = resolve_config(eigs_opts);
      emit_to_output(eigs_opts, config,
                     [&](std::ostream& out) { ringdyn::cli::cmd_eigs(config, out); });
    } else if (sweep_uniform->parsed()) {
      const auto config = resolve_config(sweep_u_opts);
      emit_to_output(sweep_u_opts, config, [&](std::ostream& out) {
        ringdyn::cli::cmd_sweep_uniform(config, out, sweep_u_opts.workers);
      });
    } else if (sweep_alternating->parsed()) {
      const auto config = resolve_config(sweep_a_opts);
      emit_to_output(sweep_a_opts, config, [&](std::ostream& out) {
        ringdyn::cli::cmd_sweep_alternating(config, out, sweep_a_opts.workers);
      });
    } else if (floquet->parsed()) {
      const auto config = resolve_config(floquet_opts);
      emit_to_output(floquet_opts, config,
                     [&](std::ostream& out) { ringdyn::cli::cmd_floquet(config, out); });
    } else if (verify->parsed()) {
      int failures = 0;
      if (verify_out.empty()) {
        failures = ringdyn::cli::cmd_verify(std::cout);
      } else {
        std::ofstream out(verify_out, std::ios::binary);
        if (!out) throw ringdyn::Error("cannot open output file '" + verify_out + "'");
        failures = ringdyn::cli::cmd_verify(out);
      }
      if (failures > 0) {
        std::cerr << failures << " verification check(s) failed\n";
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
