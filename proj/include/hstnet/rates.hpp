#pragma once

#include <optional>
#include <vector>

namespace hstnet {

/// Discrete rate adaptation table: rates R_1..R_M (bits/s) with SNR
/// thresholds gamma_1..gamma_M (linear), both strictly increasing.
/// Implicitly R_0 = 0 below gamma_1 and gamma_{M+1} = +inf.
struct RateTable {
  std::vector<double> rates_bps;
  std::vector<double> thresholds_lin;

  void validate() const;
  std::size_t mode_count() const { return rates_bps.size(); }
};

struct TimingConstants {
  double t1_s = 0.0;     // satellite-ground link latency
  double t2_s = 0.0;     // gateway fetch time
  double tau_p_s = 0.0;  // TS probe duration
};

/// The R_m whose threshold bracket contains gamma; 0 in outage.
double rate_from_snr(double gamma, const RateTable& table);

/// T_{k,1} = b/rate + T_1 + [beta_s = 0] T_2. Empty on outage (rate = 0).
std::optional<double> direct_latency(double b_bits, double rate_bps,
                                     bool beta_s, const TimingConstants& t);

/// T_{k,2}: cache branch b/rate_cache, relay branch b/rate_relay + T_1.
/// Empty when the selected branch's rate is 0.
std::optional<double> assisted_latency(double b_bits, bool beta_r,
                                       double rate_cache_bps,
                                       double rate_relay_bps,
                                       const TimingConstants& t);

}  // namespace hstnet
