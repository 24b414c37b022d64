#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hstnet/kernels.hpp"
#include "hstnet/rng.hpp"

using namespace hstnet;

namespace {

void check_close(const std::vector<double>& a, const std::vector<double>& b,
                 double rel) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double scale = std::max({std::fabs(a[i]), std::fabs(b[i]), 1e-300});
    CHECK(std::fabs(a[i] - b[i]) / scale <= rel);
  }
}

}  // namespace

TEST_CASE("active kernels are one of the registered implementations") {
  const auto& ops = kernels::active();
  const std::string name = ops.name;
  CHECK((name == "scalar" || name == "avx2"));
  if (!kernels::avx2_available()) CHECK(name == "scalar");
}

TEST_CASE("scalar exp_v matches std::exp") {
  Rng rng(7);
  std::vector<double> x(257), y(257);
  for (auto& v : x) v = -40.0 + 80.0 * rng.uniform();
  kernels::scalar_ops().exp_v(x.data(), y.data(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(y[i] == doctest::Approx(std::exp(x[i])).epsilon(1e-14));
  }
}

TEST_CASE("scalar vs AVX2 equivalence") {
  if (!kernels::avx2_available()) return;
  const auto& sc = kernels::scalar_ops();
  const auto& vx = kernels::avx2_ops();
  Rng rng(42);

  // Odd lengths exercise the remainder lanes; n = 0 must be safe.
  for (std::size_t n : {std::size_t(0), std::size_t(7), std::size_t(256),
                        std::size_t(1003)}) {
    std::vector<double> x(n), a(n), g(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = 700.0 * (rng.uniform() - 0.5);
      a[i] = 5.0 * rng.uniform();
      g[i] = 5.0 * rng.uniform();
    }
    std::vector<double> ys(n), yv(n);

    sc.exp_v(x.data(), ys.data(), n);
    vx.exp_v(x.data(), yv.data(), n);
    check_close(ys, yv, 1e-12);

    std::vector<double> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[i] = std::fabs(x[i]);
    sc.exp_cdf(pos.data(), 3.7, ys.data(), n);
    vx.exp_cdf(pos.data(), 3.7, yv.data(), n);
    check_close(ys, yv, 1e-12);

    // SNR grid both below and above the series/asymptotic split.
    std::vector<double> snr(n);
    for (std::size_t i = 0; i < n; ++i) snr[i] = 4000.0 * rng.uniform();
    sc.sr_snr_pdf(snr.data(), 15.7, 5.0, 0.126, 0.279, ys.data(), n);
    vx.sr_snr_pdf(snr.data(), 15.7, 5.0, 0.126, 0.279, yv.data(), n);
    check_close(ys, yv, 1e-10);

    sc.relay_combine(x.data(), a.data(), g.data(), 15.7, 157.0, 757.0,
                     ys.data(), n);
    vx.relay_combine(x.data(), a.data(), g.data(), 15.7, 157.0, 757.0,
                     yv.data(), n);
    check_close(ys, yv, 1e-13);
  }
}

TEST_CASE("relay_combine zero-hop convention") {
  const auto& sc = kernels::scalar_ops();
  const double h = 0.5, a = 0.0, g = 0.0;
  double y = -1.0;
  sc.relay_combine(&h, &a, &g, 10.0, 100.0, 50.0, &y, 1);
  CHECK(y == doctest::Approx(5.0));  // relay fraction defined as 0
}

TEST_CASE("sr_snr_pdf_scalar agrees with batch kernel") {
  const auto& ops = kernels::active();
  std::vector<double> x = {0.0, 0.5, 3.0, 40.0, 150.0, 900.0, 3000.0};
  std::vector<double> y(x.size());
  ops.sr_snr_pdf(x.data(), 15.7, 5.0, 0.126, 0.279, y.data(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double want =
        kernels::sr_snr_pdf_scalar(x[i], 15.7, 5.0, 0.126, 0.279);
    CHECK(y[i] == doctest::Approx(want).epsilon(1e-10));
  }
}
