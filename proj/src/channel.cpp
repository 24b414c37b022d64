#include "hstnet/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hstnet/kernels.hpp"
#include "hstnet/series.hpp"

namespace hstnet {

namespace {
constexpr double kSpeedOfLight = 299792458.0;

const GaussLegendre& default_gl() {
  static const GaussLegendre gl(96);
  return gl;
}
}  // namespace

void FadingParams::validate() const {
  if (!(m >= 0.5)) throw std::invalid_argument("FadingParams: m must be >= 0.5");
  if (!(b > 0.0)) throw std::invalid_argument("FadingParams: b must be > 0");
  if (!(omega >= 0.0)) throw std::invalid_argument("FadingParams: omega must be >= 0");
}

void LinkBudget::validate() const {
  if (!(p_tx_w > 0.0 && g_tx > 0.0 && g_rx > 0.0 && noise_w > 0.0)) {
    throw std::invalid_argument("LinkBudget: powers and gains must be positive");
  }
  if (model == Pathloss::FreeSpaceSquared && !(carrier_hz > 0.0)) {
    throw std::invalid_argument("LinkBudget: carrier frequency must be positive");
  }
  if (model == Pathloss::Terrestrial && !(ref_loss_lin > 0.0 && beta0 > 0.0)) {
    throw std::invalid_argument("LinkBudget: reference loss and beta0 must be positive");
  }
}

double avg_snr(const LinkBudget& link, double d) {
  if (!(d > 0.0)) throw std::invalid_argument("avg_snr: d must be > 0");
  double pathloss;
  if (link.model == LinkBudget::Pathloss::FreeSpaceSquared) {
    const double lam = kSpeedOfLight / link.carrier_hz;
    const double x = lam / (4.0 * std::acos(-1.0) * d);
    pathloss = x * x;
  } else {
    pathloss = link.ref_loss_lin * std::pow(d, -link.beta0);
  }
  return link.p_tx_w * link.g_tx * link.g_rx * pathloss / link.noise_w;
}

double sample_shadowed_rician(const FadingParams& params, Rng& rng) {
  const double los_power =
      params.omega > 0.0 ? rng.gamma(params.m, params.omega / params.m) : 0.0;
  const double a = std::sqrt(los_power);
  const double s = std::sqrt(params.b);
  const double re = a + s * rng.normal();
  const double im = s * rng.normal();
  return re * re + im * im;
}

double pdf_snr_direct(double x, double gbar, const FadingParams& params) {
  if (!(gbar > 0.0)) throw std::invalid_argument("pdf_snr_direct: gbar must be > 0");
  return kernels::sr_snr_pdf_scalar(x, gbar, params.m, params.b, params.omega);
}

double cdf_snr_terrestrial(double x, double gbar_u) {
  if (x <= 0.0) return 0.0;
  return 1.0 - std::exp(-x / gbar_u);
}

double combined_relay_snr(const ChannelDraw& draw, double gbar_s,
                          double gbar_t, double gbar_u) {
  const double ta = gbar_t * draw.alpha_sq;
  const double tg = gbar_u * draw.g_sq;
  const double denom = ta + tg;
  return gbar_s * draw.h_sq + (denom > 0.0 ? ta * tg / denom : 0.0);
}

double relay_term_survival(double y, double gbar_t, double gbar_u,
                           const FadingParams& params_t,
                           const GaussLegendre& gl) {
  if (y <= 0.0) return 1.0;
  // W > y requires the Sat-TS SNR t to exceed y; conditioned on t, the
  // TS-User hop must exceed y*t/(t-y). Substituting s = t - y and moving to
  // log-s gives a smooth single-hump integrand.
  const double prefactor = std::exp(-y / gbar_u);
  if (prefactor == 0.0) return 0.0;
  const double sigma_a = 2.0 * params_t.b * gbar_t;
  const double s_hi = 50.0 * sigma_a + y;
  const double s_lo = std::max(y * y / (45.0 * gbar_u), s_hi * 1e-18);
  const double lo = std::log(s_lo), hi = std::log(s_hi);
  const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);

  const int n = static_cast<int>(gl.x.size());
  std::vector<double> s(n), arg(n), damp(n), pdf(n);
  for (int i = 0; i < n; ++i) {
    s[i] = std::exp(mid + half * gl.x[i]);
    arg[i] = -y * y / (s[i] * gbar_u);
  }
  const auto& ops = kernels::active();
  ops.exp_v(arg.data(), damp.data(), n);
  for (int i = 0; i < n; ++i) arg[i] = y + s[i];
  ops.sr_snr_pdf(arg.data(), gbar_t, params_t.m, params_t.b, params_t.omega,
                 pdf.data(), n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += gl.w[i] * pdf[i] * damp[i] * s[i];
  return std::clamp(prefactor * half * sum, 0.0, 1.0);
}

double cdf_snr_relay(double x, double gbar_s, double gbar_t, double gbar_u,
                     double h_sq, const FadingParams& params_t) {
  if (!(gbar_s > 0.0 && gbar_t > 0.0 && gbar_u > 0.0)) {
    throw std::invalid_argument("cdf_snr_relay: average SNRs must be positive");
  }
  const double y = x - gbar_s * h_sq;
  if (y <= 0.0) return 0.0;
  return 1.0 - relay_term_survival(y, gbar_t, gbar_u, params_t, default_gl());
}

double cdf_snr_relay_closed_form(double x, double gbar_s, double gbar_t,
                                 double gbar_u, double h_sq,
                                 const FadingParams& params_t) {
  const double y = x - gbar_s * h_sq;
  if (y <= 0.0) return 0.0;
  const double m = params_t.m, b = params_t.b, om = params_t.omega;
  const double denom = 2.0 * b * m + om;
  const double z = om * om * y / (2.0 * gbar_t * b * denom);
  const double c1 = om * std::pow(2.0 * b * m, m) /
                    (2.0 * b * gbar_t * std::pow(denom, m));
  const double c2 = om * om / (8.0 * b * b) * std::pow(2.0 * b * m / denom, m) *
                    (y / gbar_t) * (y / gbar_t);
  const double inner = 1.0 - c1 * y * kummer_1f1(m, 2.0, z) +
                       c2 * hyp_2f2(2.0, m, 3.0, 1.0, z);
  return std::clamp(1.0 - std::exp(-y / gbar_u) * inner, 0.0, 1.0);
}

RelayCdfTable::RelayCdfTable(double gbar_t, const FadingParams& params_t,
                             std::function<double(double)> gbar_u_of_d,
                             double d_min, double d_max, double y_max, int n_d,
                             int n_y, int quad_nodes)
    : n_d_(n_d), n_y_(n_y) {
  if (n_d < 2 || n_y < 2) {
    throw std::invalid_argument("RelayCdfTable: grid must be at least 2x2");
  }
  const GaussLegendre gl(quad_nodes);
  ld_lo_ = std::log(d_min);
  ld_hi_ = std::log(d_max);
  y_hi_ = y_max;
  ly_hi_ = std::log(y_max);
  ly_lo_ = std::log(y_max * 1e-9);
  f_.resize(static_cast<std::size_t>(n_d) * n_y);
  for (int i = 0; i < n_d; ++i) {
    const double d = std::exp(ld_lo_ + (ld_hi_ - ld_lo_) * i / (n_d - 1.0));
    const double gu = gbar_u_of_d(d);
    double running = 0.0;
    for (int j = 0; j < n_y; ++j) {
      const double y = std::exp(ly_lo_ + (ly_hi_ - ly_lo_) * j / (n_y - 1.0));
      const double v = 1.0 - relay_term_survival(y, gbar_t, gu, params_t, gl);
      running = std::max(running, v);  // repair sub-tolerance quadrature dips
      f_[static_cast<std::size_t>(i) * n_y + j] = running;
    }
  }
}

double RelayCdfTable::cdf(double y, double d) const {
  if (y <= 0.0) return 0.0;
  const double ld =
      std::clamp(std::log(d), ld_lo_, ld_hi_);
  const double td = (ld - ld_lo_) / (ld_hi_ - ld_lo_) * (n_d_ - 1);
  const int i0 = std::min(static_cast<int>(td), n_d_ - 2);
  const double fd = td - i0;

  double ly = std::log(y);
  double scale = 1.0;
  if (ly < ly_lo_) {
    // below the grid the CDF vanishes linearly in y
    scale = y / std::exp(ly_lo_);
    ly = ly_lo_;
  }
  if (ly >= ly_hi_) {
    const double v0 = f_[static_cast<std::size_t>(i0) * n_y_ + n_y_ - 1];
    const double v1 = f_[static_cast<std::size_t>(i0 + 1) * n_y_ + n_y_ - 1];
    return v0 + fd * (v1 - v0);
  }
  const double ty = (ly - ly_lo_) / (ly_hi_ - ly_lo_) * (n_y_ - 1);
  const int j0 = std::min(static_cast<int>(ty), n_y_ - 2);
  const double fy = ty - j0;
  const auto at = [&](int i, int j) {
    return f_[static_cast<std::size_t>(i) * n_y_ + j];
  };
  const double r0 = at(i0, j0) + fy * (at(i0, j0 + 1) - at(i0, j0));
  const double r1 = at(i0 + 1, j0) + fy * (at(i0 + 1, j0 + 1) - at(i0 + 1, j0));
  return scale * (r0 + fd * (r1 - r0));
}

}  // namespace hstnet
