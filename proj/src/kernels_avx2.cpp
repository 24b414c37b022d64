// AVX2+FMA variants of the batch kernels. This translation unit is compiled
// with -mavx2 -mfma; it must only be entered through the dispatch in
// kernels.cpp after a CPU capability check.

#include "hstnet/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstdint>

namespace hstnet::kernels {
namespace {

// Cephes-style exp for 4 doubles. ~1 ulp over [-708, 709].
inline __m256d exp4(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
  const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);
  const __m256d one = _mm256_set1_pd(1.0);

  x = _mm256_min_pd(x, _mm256_set1_pd(709.0));
  x = _mm256_max_pd(x, _mm256_set1_pd(-708.0));

  __m256d px = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                               _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m128i n = _mm256_cvtpd_epi32(px);
  x = _mm256_fnmadd_pd(px, c1, x);
  x = _mm256_fnmadd_pd(px, c2, x);
  __m256d xx = _mm256_mul_pd(x, x);

  // p = x * P(xx), q = Q(xx)
  __m256d p = _mm256_set1_pd(1.26177193074810590878e-4);
  p = _mm256_fmadd_pd(p, xx, _mm256_set1_pd(3.02994407707441961300e-2));
  p = _mm256_fmadd_pd(p, xx, _mm256_set1_pd(9.99999999999999999910e-1));
  p = _mm256_mul_pd(p, x);
  __m256d q = _mm256_set1_pd(3.00198505138664455042e-6);
  q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.52448340349684104192e-3));
  q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.27265548208155028766e-1));
  q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.0));
  __m256d e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
  e = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, one);

  // scale by 2^n through the exponent field
  __m256i n64 = _mm256_cvtepi32_epi64(n);
  n64 = _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
  return _mm256_mul_pd(e, _mm256_castsi256_pd(n64));
}

void exp_v_avx2(const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, exp4(_mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) y[i] = std::exp(x[i]);
}

void exp_cdf_avx2(const double* x, double mean, double* y, std::size_t n) {
  const __m256d neg_inv = _mm256_set1_pd(-1.0 / mean);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = exp4(_mm256_mul_pd(_mm256_loadu_pd(x + i), neg_inv));
    _mm256_storeu_pd(y + i, _mm256_sub_pd(one, v));
  }
  for (; i < n; ++i) y[i] = 1.0 - std::exp(-x[i] / mean);
}

void sr_snr_pdf_avx2(const double* x, double gbar, double m, double b,
                     double omega, double* y, std::size_t n) {
  const double sigma = 2.0 * b * gbar;
  const double denom = 2.0 * b * m + omega;
  const double K = std::pow(2.0 * b * m / denom, m) / sigma;
  const double zc = omega / (sigma * denom);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xv = _mm256_loadu_pd(x + i);
    __m256d z = _mm256_mul_pd(xv, _mm256_set1_pd(zc));

    // any lane outside the series range, negative, or so deep in the tail
    // that exp(-x/sigma) leaves the normal range -> scalar fallback
    __m256d hi = _mm256_cmp_pd(z, _mm256_set1_pd(600.0), _CMP_GE_OQ);
    __m256d neg = _mm256_cmp_pd(xv, _mm256_setzero_pd(), _CMP_LT_OQ);
    __m256d deep = _mm256_cmp_pd(xv, _mm256_set1_pd(600.0 * sigma),
                                 _CMP_GE_OQ);
    if (_mm256_movemask_pd(
            _mm256_or_pd(_mm256_or_pd(hi, neg), deep)) != 0) {
      for (int k = 0; k < 4; ++k) {
        y[i + k] = sr_snr_pdf_scalar(x[i + k], gbar, m, b, omega);
      }
      continue;
    }

    // 1F1(m, 1, z) series, all lanes advanced until every lane converges
    __m256d term = _mm256_set1_pd(1.0);
    __m256d sum = _mm256_set1_pd(1.0);
    const __m256d tol = _mm256_set1_pd(1e-14);
    for (int it = 0; it < 500; ++it) {
      const double ratio = (m + it) / ((1.0 + it) * (it + 1));
      term = _mm256_mul_pd(term, _mm256_mul_pd(z, _mm256_set1_pd(ratio)));
      sum = _mm256_add_pd(sum, term);
      __m256d conv =
          _mm256_cmp_pd(term, _mm256_mul_pd(tol, sum), _CMP_LE_OQ);
      if (_mm256_movemask_pd(conv) == 0xF) break;
    }

    __m256d ex = exp4(_mm256_mul_pd(xv, _mm256_set1_pd(-1.0 / sigma)));
    __m256d out = _mm256_mul_pd(_mm256_set1_pd(K), _mm256_mul_pd(ex, sum));
    _mm256_storeu_pd(y + i, out);
  }
  for (; i < n; ++i) y[i] = sr_snr_pdf_scalar(x[i], gbar, m, b, omega);
}

void relay_combine_avx2(const double* h, const double* a, const double* g,
                        double gs, double gt, double gu, double* y,
                        std::size_t n) {
  const __m256d gsv = _mm256_set1_pd(gs);
  const __m256d gtv = _mm256_set1_pd(gt);
  const __m256d guv = _mm256_set1_pd(gu);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ta = _mm256_mul_pd(gtv, _mm256_loadu_pd(a + i));
    __m256d tg = _mm256_mul_pd(guv, _mm256_loadu_pd(g + i));
    __m256d den = _mm256_add_pd(ta, tg);
    __m256d frac = _mm256_div_pd(_mm256_mul_pd(ta, tg), den);
    __m256d zero = _mm256_cmp_pd(den, _mm256_setzero_pd(), _CMP_LE_OQ);
    frac = _mm256_andnot_pd(zero, frac);
    __m256d out = _mm256_fmadd_pd(gsv, _mm256_loadu_pd(h + i), frac);
    _mm256_storeu_pd(y + i, out);
  }
  for (; i < n; ++i) {
    const double ta = gt * a[i], tg = gu * g[i];
    y[i] = gs * h[i] + (ta + tg > 0.0 ? ta * tg / (ta + tg) : 0.0);
  }
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops{"avx2", exp_v_avx2, exp_cdf_avx2, sr_snr_pdf_avx2,
                       relay_combine_avx2};
  return ops;
}

}  // namespace hstnet::kernels

#else

namespace hstnet::kernels {
const Ops& avx2_ops() { return scalar_ops(); }
}  // namespace hstnet::kernels

#endif
