#pragma once

#include "hstnet/catalog.hpp"
#include "hstnet/channel.hpp"
#include "hstnet/rates.hpp"

namespace hstnet {

/// Immutable scenario record. All fields are SI / linear scale; dB and Mbit
/// conversions happen at the config-loading boundary. Call finalize() after
/// filling the fields.
struct NetworkConfig {
  // Transmit chain
  double p_ts_w = 10.0;    // satellite transmit power
  double p_tr_w = 2.0;     // TS transmit power
  double gain_sat = 1.0;   // linear
  double gain_ts = 1.0;
  double gain_user = 1.0;
  double noise_w = 1.0;
  double carrier_hz = 2e9;

  // Geometry
  double sat_altitude_m = 600e3;  // Sat-ground distance d_0
  double cell_radius_m = 1000.0;
  int l_cells = 7;

  // Terrestrial path loss: ref_loss_lin at 1 m, exponent beta0
  double pathloss_ref_lin = 1e-4;
  double beta0 = 3.76;

  FadingParams fading_sat;  // Sat-User and Sat-TS links
  FadingParams fading_ts;

  Catalog catalog;
  CacheProfile cache;
  RateTable rates;
  TimingConstants timing;
  double tau_s_s = 0.5e-3;  // mean request inter-arrival time

  // Two readings of the direct-delivery latency inside the offline
  // throughput functional; Consistent uses the same accounting as the
  // simulator, Eq7Literal adds the extra propagation terms literally.
  enum class LambdaReading { Consistent, Eq7Literal };
  LambdaReading lambda_reading = LambdaReading::Consistent;

  /// Validates and precomputes the derived average SNRs.
  void finalize();

  // Derived link budgets (finalize() must have run).
  double gbar_s() const { return gbar_s_; }           // Sat-User
  double gbar_t() const { return gbar_t_; }           // Sat-TS
  double gbar_u(double d) const;                      // TS-User at distance d
  double top_rate_bps() const { return rates.rates_bps.back(); }

 private:
  double gbar_s_ = 0.0, gbar_t_ = 0.0, gbar_u_coef_ = 0.0;
};

}  // namespace hstnet
