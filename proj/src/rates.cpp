#include "hstnet/rates.hpp"

#include <algorithm>
#include <stdexcept>

namespace hstnet {

void RateTable::validate() const {
  if (rates_bps.empty() || rates_bps.size() != thresholds_lin.size()) {
    throw std::invalid_argument("RateTable: need equal-length non-empty sequences");
  }
  for (std::size_t i = 0; i < rates_bps.size(); ++i) {
    if (rates_bps[i] <= 0.0 || thresholds_lin[i] <= 0.0) {
      throw std::invalid_argument("RateTable: entries must be positive");
    }
    if (i > 0 && rates_bps[i] <= rates_bps[i - 1]) {
      throw std::invalid_argument(
          "RateTable: rates must be strictly increasing");
    }
    if (i > 0 && thresholds_lin[i] <= thresholds_lin[i - 1]) {
      throw std::invalid_argument(
          "RateTable: thresholds must be strictly increasing");
    }
  }
}

double rate_from_snr(double gamma, const RateTable& table) {
  if (gamma < 0.0) throw std::invalid_argument("rate_from_snr: gamma must be >= 0");
  const auto it = std::upper_bound(table.thresholds_lin.begin(),
                                   table.thresholds_lin.end(), gamma);
  const auto idx = static_cast<std::size_t>(it - table.thresholds_lin.begin());
  return idx == 0 ? 0.0 : table.rates_bps[idx - 1];
}

std::optional<double> direct_latency(double b_bits, double rate_bps,
                                     bool beta_s, const TimingConstants& t) {
  if (!(b_bits > 0.0)) throw std::invalid_argument("direct_latency: b must be > 0");
  if (rate_bps <= 0.0) return std::nullopt;
  return b_bits / rate_bps + t.t1_s + (beta_s ? 0.0 : t.t2_s);
}

std::optional<double> assisted_latency(double b_bits, bool beta_r,
                                       double rate_cache_bps,
                                       double rate_relay_bps,
                                       const TimingConstants& t) {
  if (!(b_bits > 0.0)) throw std::invalid_argument("assisted_latency: b must be > 0");
  if (beta_r) {
    if (rate_cache_bps <= 0.0) return std::nullopt;
    return b_bits / rate_cache_bps;
  }
  if (rate_relay_bps <= 0.0) return std::nullopt;
  return b_bits / rate_relay_bps + t.t1_s;
}

}  // namespace hstnet
