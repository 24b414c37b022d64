#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hstnet/series.hpp"

using namespace hstnet;

namespace {

// Independent oracle: the same power series in extended precision with a
// fixed 200-term budget.
long double oracle_1f1(long double a, long double b, long double z) {
  long double sum = 1.0L, term = 1.0L;
  for (int n = 0; n < 200; ++n) {
    term *= (a + n) / (b + n) * z / (n + 1);
    sum += term;
  }
  return sum;
}

long double oracle_2f2(long double a1, long double a2, long double b1,
                       long double b2, long double z) {
  long double sum = 1.0L, term = 1.0L;
  for (int n = 0; n < 200; ++n) {
    term *= (a1 + n) * (a2 + n) / ((b1 + n) * (b2 + n)) * z / (n + 1);
    sum += term;
  }
  return sum;
}

// Laguerre polynomial L_4; for integer a the Kummer transform gives
// 1F1(5, 1, z) = e^z L_4(-z).
double laguerre4(double x) {
  return (x * x * x * x - 16.0 * x * x * x + 72.0 * x * x - 96.0 * x + 24.0) /
         24.0;
}

}  // namespace

TEST_CASE("1F1 identities") {
  CHECK(kummer_1f1(5.0, 1.0, 0.0) == 1.0);
  CHECK(kummer_1f1(3.5, 2.25, 0.0) == 1.0);
  CHECK(kummer_1f1(1.0, 1.0, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-13));
  // 1F1(1,1,z) = e^z
  for (double z : {0.25, 2.0, 10.0, 40.0}) {
    CHECK(kummer_1f1(1.0, 1.0, z) ==
          doctest::Approx(std::exp(z)).epsilon(1e-12));
  }
}

TEST_CASE("1F1 frozen value") {
  CHECK(kummer_1f1(5.0, 2.0, 0.5) ==
        doctest::Approx(3.0999394725143034).epsilon(1e-12));
}

TEST_CASE("1F1 integer-order Laguerre oracle") {
  for (double z : {0.3, 1.7, 5.0, 12.0}) {
    CHECK(kummer_1f1(5.0, 1.0, z) ==
          doctest::Approx(std::exp(z) * laguerre4(-z)).epsilon(1e-11));
  }
}

TEST_CASE("1F1 monotone in z for positive parameters") {
  double prev = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const double z = 0.5 * i;
    const double v = kummer_1f1(2.5, 1.5, z);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("1F1 grid agreement with extended-precision oracle") {
  for (int ai = 1; ai <= 6; ++ai) {
    for (double b : {1.0, 2.0, 3.0}) {
      for (int i = 0; i < 100; ++i) {
        const double z = 50.0 * i / 99.0;
        const double got = kummer_1f1(double(ai), b, z);
        const double want = double(oracle_1f1(ai, b, z));
        CHECK(got == doctest::Approx(want).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("2F2 identities and frozen value") {
  CHECK(hyp_2f2(2.0, 5.0, 3.0, 1.0, 0.0) == 1.0);
  // Parameter cancellation: 2F2(a,b;a,b;z) = e^z.
  CHECK(hyp_2f2(2.0, 5.0, 2.0, 5.0, 1.0) ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-13));
  CHECK(hyp_2f2(2.0, 5.0, 3.0, 1.0, 0.7) ==
        doctest::Approx(6.2649524856662744).epsilon(1e-12));
  for (double z : {0.1, 1.0, 4.0}) {
    CHECK(hyp_2f2(2.0, 5.0, 3.0, 1.0, z) ==
          doctest::Approx(double(oracle_2f2(2, 5, 3, 1, z))).epsilon(1e-11));
  }
}

TEST_CASE("non-convergence carries the partial value") {
  SeriesControl tight;
  tight.max_terms = 3;
  try {
    kummer_1f1(5.0, 1.0, 50.0, tight);
    FAIL("expected NumericFailure");
  } catch (const NumericFailure& e) {
    CHECK(std::isfinite(e.partial_value));
    CHECK(e.partial_value > 1.0);  // partial sums of a positive series
  }
}
