#include "hstnet/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hstnet/solver.hpp"

namespace hstnet {

namespace {

double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }
double dbm_to_w(double dbm) { return db_to_lin(dbm) * 1e-3; }

class KeyValueFile {
 public:
  explicit KeyValueFile(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto trimmed = trim(line);
      if (trimmed.empty()) continue;
      const auto eq = trimmed.find('=');
      if (eq == std::string::npos) {
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": expected key = value");
      }
      const std::string key = trim(trimmed.substr(0, eq));
      const std::string value = trim(trimmed.substr(eq + 1));
      if (key.empty()) {
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": empty key");
      }
      if (!values_.emplace(key, value).second) {
        throw ConfigError("duplicate config key '" + key + "'");
      }
    }
  }

  double number(const std::string& key) { return parse_number(key, raw(key)); }

  double number(const std::string& key, double fallback) {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    used_.insert(key);
    return parse_number(key, it->second);
  }

  std::string text(const std::string& key, const std::string& fallback) {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    used_.insert(key);
    return it->second;
  }

  std::vector<double> list(const std::string& key) {
    return parse_list(key, raw(key));
  }

  std::vector<double> list(const std::string& key,
                           std::vector<double> fallback) {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    used_.insert(key);
    return parse_list(key, it->second);
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  void reject_unknown() const {
    for (const auto& [key, value] : values_) {
      if (!used_.count(key)) {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  }

 private:
  std::string raw(const std::string& key) {
    const auto it = values_.find(key);
    if (it == values_.end()) {
      throw ConfigError("missing required config key '" + key + "'");
    }
    used_.insert(key);
    return it->second;
  }

  static std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  }

  static double parse_number(const std::string& key, const std::string& text) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != text.size() || text.empty()) {
      throw ConfigError("config key '" + key + "': '" + text +
                        "' is not a number");
    }
    return value;
  }

  static std::vector<double> parse_list(const std::string& key,
                                        const std::string& text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      out.push_back(parse_number(key, item));
    }
    if (out.empty()) {
      throw ConfigError("config key '" + key + "': empty list");
    }
    return out;
  }

  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

void require_positive(const std::string& key, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError("config key '" + key + "': must be positive, got " +
                      std::to_string(value));
  }
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

const char* policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::Optimal: return "optimal";
    case PolicyKind::NoWaitDirect: return "no_wait_direct";
    case PolicyKind::NoWaitAssisted: return "no_wait_assisted";
    case PolicyKind::NoWaitNoTsCache: return "no_wait_no_ts_cache";
  }
  return "?";
}

PolicyKind policy_from_name(const std::string& name) {
  for (PolicyKind kind :
       {PolicyKind::Optimal, PolicyKind::NoWaitDirect,
        PolicyKind::NoWaitAssisted, PolicyKind::NoWaitNoTsCache}) {
    if (name == policy_name(kind)) return kind;
  }
  throw ConfigError(
      "unknown policy '" + name +
      "' (expected optimal, no_wait_direct, no_wait_assisted or "
      "no_wait_no_ts_cache)");
}

ExperimentConfig parse_config(const std::string& text) {
  KeyValueFile kv(text);
  ExperimentConfig cfg;
  NetworkConfig& net = cfg.network;

  cfg.p_ts_dbm = kv.number("p_ts_dbm");
  cfg.p_tr_dbm = kv.number("p_tr_dbm");
  net.p_ts_w = dbm_to_w(cfg.p_ts_dbm);
  net.p_tr_w = dbm_to_w(cfg.p_tr_dbm);
  net.gain_sat = db_to_lin(kv.number("gain_sat_dbi"));
  net.gain_ts = db_to_lin(kv.number("gain_ts_dbi"));
  net.gain_user = db_to_lin(kv.number("gain_user_dbi"));
  net.carrier_hz = kv.number("carrier_ghz") * 1e9;

  const double noise_psd = kv.number("noise_psd_dbm_hz");
  const double bandwidth_hz = kv.number("bandwidth_mhz") * 1e6;
  require_positive("bandwidth_mhz", bandwidth_hz);
  net.noise_w = dbm_to_w(noise_psd) * bandwidth_hz;

  net.sat_altitude_m = kv.number("sat_altitude_km") * 1e3;
  net.cell_radius_m = kv.number("cell_radius_m");
  net.l_cells = int(kv.number("l_cells"));
  net.pathloss_ref_lin = db_to_lin(kv.number("pathloss_ref_db"));
  net.beta0 = kv.number("pathloss_exponent");

  net.fading_sat = {kv.number("m_sat"), kv.number("b_sat"),
                    kv.number("omega_sat")};
  net.fading_ts = {kv.number("m_ts"), kv.number("b_ts"),
                   kv.number("omega_ts")};

  const std::vector<double> sizes_mbit = kv.list("file_sizes_mbit");
  net.catalog.zeta = kv.number("zeta");
  net.catalog.sizes_bits.clear();
  for (double s : sizes_mbit) {
    require_positive("file_sizes_mbit", s);
    net.catalog.sizes_bits.push_back(s * 1e6);
  }
  net.catalog.popularity =
      zipf_popularity(net.catalog.sizes_bits.size(), net.catalog.zeta);

  net.cache.sat_capacity_bits = kv.number("sat_cache_mbit") * 1e6;
  net.cache.ts_capacity_bits = kv.number("ts_cache_mbit") * 1e6;
  net.cache.sat_probs = kv.list("sat_cache_probs");
  net.cache.ts_probs = kv.list("ts_cache_probs");

  net.rates.rates_bps.clear();
  for (double r : kv.list("rates_mbps")) {
    net.rates.rates_bps.push_back(r * 1e6);
  }
  net.rates.thresholds_lin.clear();
  for (double g : kv.list("thresholds_db")) {
    net.rates.thresholds_lin.push_back(db_to_lin(g));
  }

  net.timing.t1_s = kv.number("t1_ms") * 1e-3;
  net.timing.t2_s = kv.number("t2_ms") * 1e-3;
  net.timing.tau_p_s = kv.number("tau_p_ms") * 1e-3;
  net.tau_s_s = kv.number("tau_s_ms") * 1e-3;

  const std::string reading = kv.text("lambda_reading", "consistent");
  if (reading == "consistent") {
    net.lambda_reading = NetworkConfig::LambdaReading::Consistent;
  } else if (reading == "eq7_literal") {
    net.lambda_reading = NetworkConfig::LambdaReading::Eq7Literal;
  } else {
    throw ConfigError("config key 'lambda_reading': expected consistent or "
                      "eq7_literal, got '" + reading + "'");
  }

  cfg.frames = long(kv.number("frames", double(cfg.frames)));
  cfg.seed = std::uint64_t(kv.number("seed", double(cfg.seed)));
  cfg.threads = int(kv.number("threads", double(cfg.threads)));
  cfg.quadrature.radial_nodes =
      int(kv.number("radial_nodes", cfg.quadrature.radial_nodes));
  cfg.quadrature.snr_nodes =
      int(kv.number("snr_nodes", cfg.quadrature.snr_nodes));

  cfg.policies.clear();
  for (const auto& name : split_names(kv.text("policies", "optimal"))) {
    cfg.policies.push_back(policy_from_name(name));
  }
  cfg.sweep_axis = kv.text("sweep_axis", "");
  if (kv.has("sweep_grid")) cfg.sweep_grid = kv.list("sweep_grid");

  kv.reject_unknown();

  if (cfg.frames <= 0) throw ConfigError("config key 'frames': must be >= 1");
  if (cfg.threads <= 0) cfg.threads = 1;

  try {
    cfg.quadrature.validate();
    net.finalize();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config validation: ") + e.what());
  }
  const CacheViolation cache = validate_cache_profile(net.cache, net.catalog);
  if (!cache.ok) {
    throw ConfigError("config validation: cache_profile: " + cache.detail);
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string csv_header() {
  return "policy,p_ts_dbm,p_tr_dbm,tau_s_s,frames,seed,eta_star_bps,"
         "throughput_bps,ci95_bps";
}

std::string csv_format(const CsvRow& row) {
  char buf[320];
  std::snprintf(buf, sizeof(buf),
                "%s,%.17g,%.17g,%.17g,%ld,%llu,%.17g,%.17g,%.17g",
                policy_name(row.policy), row.p_ts_dbm, row.p_tr_dbm,
                row.tau_s_s, row.frames,
                static_cast<unsigned long long>(row.seed), row.eta_star_bps,
                row.throughput_bps, row.ci95_bps);
  return buf;
}

std::vector<CsvRow> run_point(const ExperimentConfig& cfg) {
  RewardEngine engine(cfg.network, cfg.quadrature);
  const EtaSolution sol = solve_eta_star(engine);
  Simulator sim(engine);
  std::vector<CsvRow> rows;
  rows.reserve(cfg.policies.size());
  for (PolicyKind kind : cfg.policies) {
    const ThroughputEstimate est = sim.run_experiment(
        kind, sol.eta_star_bps, cfg.frames, cfg.seed, cfg.threads);
    CsvRow row;
    row.policy = kind;
    row.p_ts_dbm = cfg.p_ts_dbm;
    row.p_tr_dbm = cfg.p_tr_dbm;
    row.tau_s_s = cfg.network.tau_s_s;
    row.frames = est.frames;
    row.seed = est.seed;
    row.eta_star_bps = sol.eta_star_bps;
    row.throughput_bps = est.throughput_bps;
    row.ci95_bps = est.ci95_halfwidth_bps;
    rows.push_back(row);
  }
  return rows;
}

std::vector<CsvRow> run_sweep(const ExperimentConfig& cfg,
                              const std::string& axis,
                              const std::vector<double>& grid) {
  if (grid.empty()) throw ConfigError("sweep grid is empty");
  std::vector<CsvRow> rows;
  for (double value : grid) {
    ExperimentConfig point = cfg;
    if (axis == "p_ts_dbm") {
      point.p_ts_dbm = value;
      point.network.p_ts_w = dbm_to_w(value);
    } else if (axis == "p_tr_dbm") {
      point.p_tr_dbm = value;
      point.network.p_tr_w = dbm_to_w(value);
    } else if (axis == "tau_s") {
      point.network.tau_s_s = value;
    } else {
      throw ConfigError("unknown sweep axis '" + axis +
                        "' (expected p_ts_dbm, p_tr_dbm or tau_s)");
    }
    point.network.finalize();
    const std::vector<CsvRow> point_rows = run_point(point);
    rows.insert(rows.end(), point_rows.begin(), point_rows.end());
  }
  return rows;
}

}  // namespace hstnet
