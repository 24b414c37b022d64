#pragma once

#include <functional>
#include <vector>

#include "hstnet/quadrature.hpp"
#include "hstnet/rng.hpp"

namespace hstnet {

/// Shadowed-Rician fading triple: Nakagami order m of the LoS shadowing,
/// half average scattered power b, average LoS power omega.
struct FadingParams {
  double m = 1.0;
  double b = 0.5;
  double omega = 0.0;
  void validate() const;
};

/// Transmit/receive chain of one link. Path loss is either wavelength-
/// referenced free space with exponent 2 or a terrestrial power law anchored
/// at a reference loss at 1 m.
struct LinkBudget {
  enum class Pathloss { FreeSpaceSquared, Terrestrial };

  double p_tx_w = 1.0;
  double g_tx = 1.0;
  double g_rx = 1.0;
  double noise_w = 1.0;
  Pathloss model = Pathloss::FreeSpaceSquared;
  double carrier_hz = 2e9;        // FreeSpaceSquared only
  double ref_loss_lin = 1.0;      // Terrestrial: linear loss at 1 m
  double beta0 = 2.0;             // Terrestrial exponent

  void validate() const;
};

/// One joint draw of the three channel power gains seen by a request.
struct ChannelDraw {
  double h_sq = 0.0;      // Sat-User
  double alpha_sq = 0.0;  // Sat-TS
  double g_sq = 0.0;      // TS-User
};

/// Linear-scale average SNR at distance d (meters).
double avg_snr(const LinkBudget& link, double d);

/// One power-gain sample |h|^2: Rician scattered component around a
/// Nakagami-m shadowed LoS amplitude. Exact composition, no rejection.
double sample_shadowed_rician(const FadingParams& params, Rng& rng);

/// Density of gamma = gbar * |h|^2 under shadowed-Rician fading.
double pdf_snr_direct(double x, double gbar, const FadingParams& params);

/// CDF of the terrestrial (Rayleigh) link SNR: 1 - exp(-x / gbar_u).
double cdf_snr_terrestrial(double x, double gbar_u);

/// gamma_2 = gbar_s*h_sq + harmonic combination of the two relay hops.
double combined_relay_snr(const ChannelDraw& draw, double gbar_s,
                          double gbar_t, double gbar_u);

/// Survival P(W > y) of the relay-only term
/// W = (gbar_t|a|^2 * gbar_u|g|^2) / (gbar_t|a|^2 + gbar_u|g|^2),
/// evaluated by Gauss-Legendre quadrature of the exact conditional integral.
double relay_term_survival(double y, double gbar_t, double gbar_u,
                           const FadingParams& params_t,
                           const GaussLegendre& gl);

/// Conditional CDF of gamma_2 given |h|^2 = h_sq. Exact quadrature path;
/// returns 0 for x <= gbar_s*h_sq, tends to 1 as x grows.
double cdf_snr_relay(double x, double gbar_s, double gbar_t, double gbar_u,
                     double h_sq, const FadingParams& params_t);

/// The closed-form relay CDF as printed (with the exponential argument
/// negated and the result clamped to [0,1]). Kept for diagnostics; it does
/// not track the harmonic-mean combiner when the Sat-TS hop is weak relative
/// to the TS-User hop. Use cdf_snr_relay for anything load-bearing.
double cdf_snr_relay_closed_form(double x, double gbar_s, double gbar_t,
                                 double gbar_u, double h_sq,
                                 const FadingParams& params_t);

/// Precomputed bilinear table of the relay-term CDF F_W(y; d) on a
/// (log d, log y) grid. Shared by the reward quadrature and the online
/// policy so analysis and simulation see the identical distribution.
class RelayCdfTable {
 public:
  RelayCdfTable(double gbar_t, const FadingParams& params_t,
                std::function<double(double)> gbar_u_of_d, double d_min,
                double d_max, double y_max, int n_d = 96, int n_y = 512,
                int quad_nodes = 96);

  /// F_W(y) at TS-User distance d; d clamped to the table range.
  double cdf(double y, double d) const;

  double y_max() const { return y_hi_; }

 private:
  int n_d_, n_y_;
  double ld_lo_, ld_hi_, ly_lo_, ly_hi_, y_hi_;
  std::vector<double> f_;  // n_d_ x n_y_
};

}  // namespace hstnet
