#include "hstnet/network_config.hpp"

#include <cmath>
#include <stdexcept>

namespace hstnet {

void NetworkConfig::finalize() {
  if (!(p_ts_w > 0 && p_tr_w > 0 && gain_sat > 0 && gain_ts > 0 &&
        gain_user > 0 && noise_w > 0 && carrier_hz > 0 && sat_altitude_m > 0 &&
        cell_radius_m > 0 && l_cells >= 1 && pathloss_ref_lin > 0 &&
        beta0 > 0 && tau_s_s > 0)) {
    throw std::invalid_argument("NetworkConfig: all physical quantities must be positive");
  }
  fading_sat.validate();
  fading_ts.validate();
  rates.validate();
  if (timing.t1_s < 0 || timing.t2_s < 0 || timing.tau_p_s < 0) {
    throw std::invalid_argument("NetworkConfig: timing constants must be >= 0");
  }
  if (catalog.file_count() == 0) {
    throw std::invalid_argument("NetworkConfig: catalog is empty");
  }
  const auto check = validate_cache_profile(cache, catalog);
  if (!check.ok) {
    throw std::invalid_argument("NetworkConfig: " + check.detail);
  }

  LinkBudget sat_user{p_ts_w, gain_sat, gain_user, noise_w,
                      LinkBudget::Pathloss::FreeSpaceSquared, carrier_hz};
  LinkBudget sat_ts{p_ts_w, gain_sat, gain_ts, noise_w,
                    LinkBudget::Pathloss::FreeSpaceSquared, carrier_hz};
  sat_user.validate();
  sat_ts.validate();
  gbar_s_ = avg_snr(sat_user, sat_altitude_m);
  gbar_t_ = avg_snr(sat_ts, sat_altitude_m);
  gbar_u_coef_ = p_tr_w * gain_ts * gain_user * pathloss_ref_lin / noise_w;
}

double NetworkConfig::gbar_u(double d) const {
  if (!(d > 0.0)) throw std::invalid_argument("gbar_u: d must be > 0");
  return gbar_u_coef_ * std::pow(d, -beta0);
}

}  // namespace hstnet
