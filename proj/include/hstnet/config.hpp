#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hstnet/network_config.hpp"
#include "hstnet/reward.hpp"
#include "hstnet/sim.hpp"

namespace hstnet {

/// A run specification loaded from a flat key=value file. Keys carry their
/// units (p_ts_dbm, tau_s_ms, rates_mbps, ...); everything inside `network`
/// is already converted to SI / linear scale and finalized.
struct ExperimentConfig {
  NetworkConfig network;
  QuadratureSpec quadrature;

  // Run controls
  long frames = 100000;
  std::uint64_t seed = 1;
  int threads = 1;
  std::vector<PolicyKind> policies{PolicyKind::Optimal};

  // Sweep controls (optional in the file, required by the sweep verb).
  // Axis is one of p_ts_dbm, p_tr_dbm, tau_s; tau_s grid values are seconds.
  std::string sweep_axis;
  std::vector<double> sweep_grid;

  // Raw dB-scale values retained for CSV emission.
  double p_ts_dbm = 0.0;
  double p_tr_dbm = 0.0;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses, unit-converts and validates a config file. Unknown keys are
/// rejected; violations are reported with the key and constraint name.
ExperimentConfig load_config(const std::string& path);

/// Same, from file contents (used by tests).
ExperimentConfig parse_config(const std::string& text);

const char* policy_name(PolicyKind kind);
PolicyKind policy_from_name(const std::string& name);

/// One sweep/simulate result row.
struct CsvRow {
  PolicyKind policy = PolicyKind::Optimal;
  double p_ts_dbm = 0.0;
  double p_tr_dbm = 0.0;
  double tau_s_s = 0.0;
  long frames = 0;
  std::uint64_t seed = 0;
  double eta_star_bps = 0.0;
  double throughput_bps = 0.0;
  double ci95_bps = 0.0;
};

std::string csv_header();
std::string csv_format(const CsvRow& row);

/// Re-solves eta* and simulates every requested policy at one grid point.
std::vector<CsvRow> run_point(const ExperimentConfig& cfg);

/// Full sweep: for each grid point, apply the axis value, re-solve eta*,
/// simulate each policy. Rows come back in grid order.
std::vector<CsvRow> run_sweep(const ExperimentConfig& cfg,
                              const std::string& axis,
                              const std::vector<double>& grid);

}  // namespace hstnet
