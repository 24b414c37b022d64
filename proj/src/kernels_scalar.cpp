#include "hstnet/kernels.hpp"

#include <cmath>

namespace hstnet::kernels {

double sr_snr_pdf_scalar(double x, double gbar, double m, double b,
                         double omega) {
  if (x < 0.0) return 0.0;
  const double sigma = 2.0 * b * gbar;
  const double denom = 2.0 * b * m + omega;
  const double K = std::pow(2.0 * b * m / denom, m) / sigma;
  const double z = omega * x / (sigma * denom);
  if (z < 600.0) {
    // 1F1(m, 1, z) power series; terminating guard mirrors SeriesControl
    // defaults but avoids the exception machinery in this hot path.
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < 500; ++n) {
      term *= (m + n) * z / ((1.0 + n) * (n + 1));
      sum += term;
      if (term <= 1e-14 * sum) break;
    }
    return K * std::exp(-x / sigma) * sum;
  }
  // Large-argument branch: 1F1(m,1,z) ~ e^z z^(m-1)/Gamma(m); combine the
  // exponentials in log space to avoid overflow.
  return K * std::exp(z - x / sigma + (m - 1.0) * std::log(z) - std::lgamma(m));
}

namespace {

void exp_v_scalar(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::exp(x[i]);
}

void exp_cdf_scalar(const double* x, double mean, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = 1.0 - std::exp(-x[i] / mean);
}

void sr_snr_pdf_batch(const double* x, double gbar, double m, double b,
                      double omega, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = sr_snr_pdf_scalar(x[i], gbar, m, b, omega);
  }
}

void relay_combine_scalar(const double* h, const double* a, const double* g,
                          double gs, double gt, double gu, double* y,
                          std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ta = gt * a[i];
    const double tg = gu * g[i];
    const double denom = ta + tg;
    y[i] = gs * h[i] + (denom > 0.0 ? ta * tg / denom : 0.0);
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar", exp_v_scalar, exp_cdf_scalar,
                       sr_snr_pdf_batch, relay_combine_scalar};
  return ops;
}

}  // namespace hstnet::kernels
