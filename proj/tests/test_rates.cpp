#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hstnet/rates.hpp"
#include "test_util.hpp"

using namespace hstnet;
using hstnet::testing::db_to_lin;

namespace {

RateTable baseline_table() {
  return hstnet::testing::default_network().rates;
}

}  // namespace

TEST_CASE("rate_from_snr brackets") {
  const RateTable table = baseline_table();
  CHECK(rate_from_snr(db_to_lin(6.0), table) == 43.3e6);
  CHECK(rate_from_snr(db_to_lin(4.0), table) == 0.0);
  CHECK(rate_from_snr(db_to_lin(25.0), table) == 144e6);
  // Threshold edges are inclusive on the left.
  CHECK(rate_from_snr(table.thresholds_lin[2], table) == 86.7e6);
}

TEST_CASE("rate_from_snr is a non-decreasing step function with M+1 levels") {
  const RateTable table = baseline_table();
  std::set<double> levels;
  double prev = -1.0;
  for (int i = 0; i <= 5000; ++i) {
    const double gamma = 400.0 * i / 5000.0;
    const double r = rate_from_snr(gamma, table);
    CHECK(r >= prev);
    prev = r;
    levels.insert(r);
  }
  CHECK(levels.size() == table.mode_count() + 1);
}

TEST_CASE("RateTable validation") {
  RateTable bad = baseline_table();
  bad.thresholds_lin[3] = bad.thresholds_lin[2];
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  RateTable bad_rates = baseline_table();
  bad_rates.rates_bps[1] = bad_rates.rates_bps[2];
  CHECK_THROWS_AS(bad_rates.validate(), std::invalid_argument);
  CHECK_NOTHROW(baseline_table().validate());
}

TEST_CASE("direct_latency") {
  const TimingConstants t{2e-3, 2e-3, 2e-3};
  auto hit = direct_latency(1e8, 1.44e8, true, t);
  REQUIRE(hit.has_value());
  CHECK(*hit == doctest::Approx(1e8 / 1.44e8 + 2e-3).epsilon(1e-12));
  auto miss = direct_latency(1e8, 1.44e8, false, t);
  REQUIRE(miss.has_value());
  CHECK(*miss == doctest::Approx(1e8 / 1.44e8 + 4e-3).epsilon(1e-12));
  CHECK_FALSE(direct_latency(1e8, 0.0, true, t).has_value());
}

TEST_CASE("assisted_latency") {
  const TimingConstants t{2e-3, 2e-3, 2e-3};
  auto cache = assisted_latency(1e8, true, 8.67e7, 0.0, t);
  REQUIRE(cache.has_value());
  CHECK(*cache == doctest::Approx(1.1534025374855825).epsilon(1e-12));
  auto relay = assisted_latency(1e8, false, 0.0, 5.78e7, t);
  REQUIRE(relay.has_value());
  CHECK(*relay == doctest::Approx(1.7321038062283738).epsilon(1e-12));
  CHECK_FALSE(assisted_latency(1e8, true, 0.0, 5.78e7, t).has_value());
  CHECK_FALSE(assisted_latency(1e8, false, 8.67e7, 0.0, t).has_value());
}

TEST_CASE("latency monotonicity in rate and size") {
  const TimingConstants t{2e-3, 2e-3, 2e-3};
  CHECK(*direct_latency(1e8, 1.3e8, true, t) >
        *direct_latency(1e8, 1.44e8, true, t));
  CHECK(*direct_latency(2e8, 1.44e8, true, t) >
        *direct_latency(1e8, 1.44e8, true, t));
  CHECK(*assisted_latency(1e8, false, 0.0, 4.33e7, t) >
        *assisted_latency(1e8, false, 0.0, 5.78e7, t));
}
