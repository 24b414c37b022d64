#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hstnet/config.hpp"
#include "hstnet/solver.hpp"

namespace {

using namespace hstnet;

struct CommonOpts {
  std::string config_path = "configs/default.cfg";
  std::optional<long> frames;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::string policies;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_run_controls) {
  cmd->add_option("--config", opts.config_path, "Config file path")
      ->capture_default_str();
  if (!with_run_controls) return;
  cmd->add_option("--frames", opts.frames, "Simulation frames");
  cmd->add_option("--seed", opts.seed, "Base RNG seed");
  cmd->add_option("--threads", opts.threads, "Worker threads");
  cmd->add_option("--policy", opts.policies,
                  "Comma-separated policy list (optimal, no_wait_direct, "
                  "no_wait_assisted, no_wait_no_ts_cache)");
}

ExperimentConfig load_with_overrides(const CommonOpts& opts) {
  ExperimentConfig cfg = load_config(opts.config_path);
  if (opts.frames) cfg.frames = *opts.frames;
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.threads) cfg.threads = *opts.threads;
  if (!opts.policies.empty()) {
    cfg.policies.clear();
    std::istringstream in(opts.policies);
    std::string name;
    while (std::getline(in, name, ',')) {
      cfg.policies.push_back(policy_from_name(name));
    }
  }
  return cfg;
}

void emit_csv(const std::vector<CsvRow>& rows, const std::string& out_path) {
  std::string text = csv_header() + "\n";
  for (const CsvRow& row : rows) text += csv_format(row) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Offline throughput solver and renewal simulator for cache-aided "
      "hybrid satellite-terrestrial scheduling"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string out_path;
  std::string axis;
  std::vector<double> grid;

  CLI::App* solve = app.add_subcommand(
      "solve", "Solve the maximal-throughput fixed point eta*");
  add_common(solve, opts, false);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Simulate the configured policies at one scenario point");
  add_common(simulate, opts, true);
  simulate->add_option("--out", out_path, "CSV output path ('-' for stdout)");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Sweep one axis, re-solving eta* at each grid point");
  add_common(sweep, opts, true);
  sweep->add_option("--axis", axis, "Sweep axis: p_ts_dbm, p_tr_dbm or tau_s");
  sweep->add_option("--grid", grid,
                    "Grid values (dBm for power axes, seconds for tau_s)")
      ->delimiter(',');
  sweep->add_option("--out", out_path, "CSV output path ('-' for stdout)");

  CLI::App* validate = app.add_subcommand(
      "validate", "Load and validate a config, run no experiment");
  add_common(validate, opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      load_with_overrides(opts);
      std::cout << "config ok: " << opts.config_path << "\n";
      return 0;
    }
    ExperimentConfig cfg = load_with_overrides(opts);
    if (solve->parsed()) {
      RewardEngine engine(cfg.network, cfg.quadrature);
      const EtaSolution sol = solve_eta_star(engine);
      std::printf("eta_star_bps = %.10g\n", sol.eta_star_bps);
      std::printf("residual_bits = %.4g (iterations %d, bracket [%.4g, %.4g])\n",
                  sol.residual_bits, sol.iterations, sol.bracket_low,
                  sol.bracket_high);
      return 0;
    }
    if (simulate->parsed()) {
      emit_csv(run_point(cfg), out_path);
      return 0;
    }
    // sweep
    if (axis.empty()) axis = cfg.sweep_axis;
    if (grid.empty()) grid = cfg.sweep_grid;
    if (axis.empty()) throw ConfigError("sweep: no axis given (--axis or sweep_axis)");
    if (grid.empty()) throw ConfigError("sweep: no grid given (--grid or sweep_grid)");
    emit_csv(run_sweep(cfg, axis, grid), out_path);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
