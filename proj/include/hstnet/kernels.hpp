#pragma once

#include <cstddef>

namespace hstnet::kernels {

// Batch kernels for the arithmetic inner loops (CDF table builds, quadrature
// node sweeps, Monte Carlo oracles). Scalar reference implementations always
// exist; an AVX2+FMA variant is selected at runtime when the CPU supports it.
// Set HSTNET_KERNELS=scalar in the environment to force the reference path.

struct Ops {
  const char* name;

  // y[i] = exp(x[i])
  void (*exp_v)(const double* x, double* y, std::size_t n);

  // y[i] = 1 - exp(-x[i] / mean)   (exponential SNR CDF)
  void (*exp_cdf)(const double* x, double mean, double* y, std::size_t n);

  // Shadowed-Rician SNR density at gamma = x[i], average SNR gbar,
  // fading parameters (m, b, omega).
  void (*sr_snr_pdf)(const double* x, double gbar, double m, double b,
                     double omega, double* y, std::size_t n);

  // gamma2[i] = gs*h[i] + (gt*a[i] * gu*g[i]) / (gt*a[i] + gu*g[i]),
  // with the relay fraction defined as 0 when both hop SNRs are 0.
  void (*relay_combine)(const double* h, const double* a, const double* g,
                        double gs, double gt, double gu, double* y,
                        std::size_t n);
};

const Ops& scalar_ops();
const Ops& avx2_ops();  // valid only if avx2_available()
bool avx2_available();

/// The runtime-selected implementation.
const Ops& active();

/// Scalar shadowed-Rician SNR density (single evaluation, shared by both
/// implementations and by the distribution code in channel.cpp).
double sr_snr_pdf_scalar(double x, double gbar, double m, double b,
                         double omega);

}  // namespace hstnet::kernels
