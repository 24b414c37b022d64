#pragma once

#include <memory>

#include "hstnet/network_config.hpp"
#include "hstnet/quadrature.hpp"

namespace hstnet {

struct PricedReward {
  double value_bits = 0.0;
  double time_cost_s = 0.0;
  double priced_bits = 0.0;  // value - eta * time_cost
};

PricedReward priced(double value_bits, double time_cost_s, double eta);

struct QuadratureSpec {
  int radial_nodes = 48;
  int snr_nodes = 256;
  double snr_truncation_quantile = 1.0 - 1e-7;

  void validate() const;
};

/// Evaluates the probe-expected reward (the value of probing the located TS
/// at zero continuation value) and the offline throughput functional whose
/// fixed point is eta*. Construction precomputes the relay-term CDF table,
/// which both evaluation paths and the online policy share.
class RewardEngine {
 public:
  explicit RewardEngine(const NetworkConfig& env, QuadratureSpec quad = {});

  /// Probe-expected reward for a request of b bits whose file has TS caching
  /// probability ts_cache_prob, given Sat-User gain h_sq and TS-User
  /// distance d. Includes the -eta*tau_p probing charge.
  double omega_reward(double b_bits, double ts_cache_prob, double h_sq,
                      double d, double eta) const;

  /// Same, parameterized by the direct-link SNR x = gbar_s * h_sq.
  double omega_from_snr(double b_bits, double ts_cache_prob, double x,
                        double d, double eta) const;

  /// Expected one-step value Lambda(eta): double quadrature over user
  /// position and direct-link SNR of max{direct, 0, omega}, mixed over the
  /// catalog and satellite cache states.
  double lambda_of_eta(double eta) const;

  const NetworkConfig& env() const { return env_; }
  const QuadratureSpec& quad() const { return quad_; }
  const RelayCdfTable& relay_table() const { return *relay_; }

  /// Direct-SNR point where the CDF reaches the truncation quantile.
  double snr_truncation_point() const { return x_trunc_; }

 private:
  NetworkConfig env_;
  QuadratureSpec quad_;
  std::shared_ptr<const RelayCdfTable> relay_;
  GaussLegendre gl_radial_;
  GaussLegendre gl_snr_;
  double x_trunc_ = 0.0;
};

}  // namespace hstnet
