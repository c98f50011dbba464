#include "commands.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <thread>
#include <vector>

#include "csv.hpp"
#include "ringdyn/integrate.hpp"
#include "ringdyn/stability.hpp"
#include "ringdyn/symmetry.hpp"
#include "ringdyn/version.hpp"

namespace ringdyn::cli {

namespace {

void write_ring_provenance(CsvWriter& csv, const std::string& command, const RingParams& ring) {
  csv.comment(std::string("ringdyn ") + kVersion);
  csv.comment("command: " + command);
  csv.comment("n = " + std::to_string(ring.n));
  csv.comment("alpha = " + format_double(ring.alpha));
  csv.comment("beta = " + format_double(ring.beta));
  csv.comment("omega = " + format_double(ring.omega));
  csv.comment("detuning = " + format_double(ring.detuning));
}

std::string grid_text(const GridSpec& grid) {
  return std::string(grid.scale == GridSpec::Scale::kLinear ? "linear" : "log2") + " [" +
         format_double(grid.min) + ", " + format_double(grid.max) + "] count " +
         std::to_string(grid.count);
}

// Runs work(cell) for every cell index, over `workers` threads. Results
// must be written to preallocated slots so emission order stays
// deterministic; the first exception wins and is rethrown after join.
void parallel_for(long cells, int workers, const std::function<void(long)>& work) {
  if (workers < 1) workers = 1;
  if (workers == 1 || cells <= 1) {
    for (long i = 0; i < cells; ++i) work(i);
    return;
  }
  std::atomic<long> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const long i = next.fetch_add(1);
      if (i >= cells) return;
      try {
        work(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int n_threads = static_cast<int>(std::min<long>(workers, cells));
  pool.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(body);
  for (auto& thread : pool) thread.join();
  if (first_error) std::rethrow_exception(first_error);
}

const GridSpec& require_grid(const std::optional<GridSpec>& grid, const std::string& name) {
  if (!grid) throw ConfigError("config: this command needs sweep." + name);
  return *grid;
}

}  // namespace

void cmd_simulate(const RunConfig& config, std::ostream& out) {
  config.validate();
  const RingParams& ring = config.ring;
  const RingState state0 = decoupled_state(ring, {config.theta0, config.psi0});
  const auto samples =
      integrate_orbit(ring, state0, config.dt, config.n_steps, config.sample_stride);

  CsvWriter csv(out);
  write_ring_provenance(csv, "simulate", ring);
  csv.comment("theta0 = " + format_double(config.theta0));
  csv.comment("psi0 = " + format_double(config.psi0));
  csv.comment("dt = " + format_double(config.dt) + ", n_steps = " + std::to_string(config.n_steps) +
              ", sample_stride = " + std::to_string(config.sample_stride));

  std::vector<std::string> columns = {"t"};
  for (int j = 0; j < ring.n; ++j) columns.push_back("a_" + std::to_string(j));
  for (int j = 0; j < ring.n; ++j) columns.push_back("phi_" + std::to_string(j));
  columns.push_back("theta");
  columns.push_back("psi");
  csv.header(columns);

  std::vector<std::string> cells(columns.size());
  for (const auto& sample : samples) {
    cells[0] = format_double(sample.t);
    for (int j = 0; j < ring.n; ++j) {
      cells[1 + j] = format_double(sample.y[amp_index(j)]);
      cells[1 + ring.n + j] = format_double(reduce_phase(sample.y[phase_index(j)]));
    }
    cells[1 + 2 * ring.n] = format_double(sample.y[phase_index(0)]);
    cells[2 + 2 * ring.n] = format_double(sample.y[phase_index(1)] - sample.y[phase_index(0)]);
    csv.row(cells);
  }
}

void cmd_eigs(const RunConfig& config, std::ostream& out) {
  config.validate();
  if (!config.ring.uniform()) throw DetunedSystem(config.ring.detuning);
  const GridSpec& grid = require_grid(config.psi_grid, "psi_grid");

  CsvWriter csv(out);
  write_ring_provenance(csv, "eigs", config.ring);
  csv.comment("psi_grid = " + grid_text(grid));
  csv.header({"psi", "k", "re_1", "im_1", "re_2", "im_2", "re_3", "im_3", "re_4", "im_4"});

  for (const double psi : grid.points()) {
    for (int k = 0; k < config.ring.pairs(); ++k) {
      const auto values = eigenvalues_closed_form(config.ring, psi, k);
      std::vector<std::string> cells = {format_double(psi), std::to_string(k)};
      for (const auto& value : values) {
        cells.push_back(format_double(value.real()));
        cells.push_back(format_double(value.imag()));
      }
      csv.row(cells);
    }
  }
}

void cmd_sweep_uniform(const RunConfig& config, std::ostream& out, int workers) {
  config.validate();
  if (!config.ring.uniform()) throw DetunedSystem(config.ring.detuning);
  const std::vector<double> alphas = require_grid(config.alpha_grid, "alpha_grid").points();
  const std::vector<double> psis = require_grid(config.psi_grid, "psi_grid").points();

  const long cells = static_cast<long>(alphas.size()) * static_cast<long>(psis.size());
  std::vector<double> values(cells);
  parallel_for(cells, workers, [&](long cell) {
    RingParams ring = config.ring;
    ring.alpha = alphas[cell / static_cast<long>(psis.size())];
    const double psi = psis[cell % static_cast<long>(psis.size())];
    values[cell] = spectrum_uniform(ring, psi).max_transverse;
  });

  CsvWriter csv(out);
  write_ring_provenance(csv, "sweep-uniform", config.ring);
  csv.comment("alpha_grid = " + grid_text(*config.alpha_grid));
  csv.comment("psi_grid = " + grid_text(*config.psi_grid));
  csv.header({"alpha", "psi", "max_transverse"});
  long cell = 0;
  for (const double alpha : alphas) {
    for (const double psi : psis) {
      csv.row({format_double(alpha), format_double(psi), format_double(values[cell++])});
    }
  }
}

void cmd_sweep_alternating(const RunConfig& config, std::ostream& out, int workers) {
  config.validate();
  const std::vector<double> alphas = require_grid(config.alpha_grid, "alpha_grid").points();
  const std::vector<double> omegas = require_grid(config.omega_grid, "omega_grid").points();
  for (const double detuning : omegas) {
    if (detuning == 0.0) throw ZeroDetuning();
  }

  const long cells = static_cast<long>(alphas.size()) * static_cast<long>(omegas.size());
  std::vector<double> values(cells);
  parallel_for(cells, workers, [&](long cell) {
    RingParams ring = config.ring;
    ring.alpha = alphas[cell / static_cast<long>(omegas.size())];
    ring.detuning = omegas[cell % static_cast<long>(omegas.size())];
    values[cell] =
        spectrum_alternating(ring, config.floquet_steps, config.psi0).max_transverse;
  });

  CsvWriter csv(out);
  write_ring_provenance(csv, "sweep-alternating", config.ring);
  csv.comment("alpha_grid = " + grid_text(*config.alpha_grid));
  csv.comment("omega_grid = " + grid_text(*config.omega_grid));
  csv.comment("floquet_steps = " + std::to_string(config.floquet_steps));
  csv.comment("psi0 = " + format_double(config.psi0));
  csv.header({"alpha", "omega_detuning", "max_transverse_floquet"});
  long cell = 0;
  for (const double alpha : alphas) {
    for (const double detuning : omegas) {
      csv.row({format_double(alpha), format_double(detuning), format_double(values[cell++])});
    }
  }
}

void cmd_floquet(const RunConfig& config, std::ostream& out) {
  config.validate();
  if (config.ring.detuning == 0.0) throw ZeroDetuning();

  CsvWriter csv(out);
  write_ring_provenance(csv, "floquet", config.ring);
  csv.comment("psi0 = " + format_double(config.psi0));
  csv.comment("floquet_steps = " + std::to_string(config.floquet_steps));
  csv.comment("period = " +
              format_double(2.0 * std::numbers::pi / std::abs(config.ring.detuning)));
  csv.header({"k", "exp_1", "exp_2", "exp_3", "exp_4"});
  for (int k = 0; k < config.ring.pairs(); ++k) {
    const auto exponents = floquet_block(config.ring, k, config.psi0, config.floquet_steps);
    csv.row({std::to_string(k), format_double(exponents[0]), format_double(exponents[1]),
             format_double(exponents[2]), format_double(exponents[3])});
  }
}

}  // namespace ringdyn::cli
