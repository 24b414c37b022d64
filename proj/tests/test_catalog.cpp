#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "hstnet/catalog.hpp"
#include "test_util.hpp"

using namespace hstnet;

TEST_CASE("zipf_popularity") {
  CHECK(zipf_popularity(1, 0.7) == std::vector<double>{1.0});
  const auto uniform = zipf_popularity(4, 0.0);
  for (double p : uniform) CHECK(p == doctest::Approx(0.25).epsilon(1e-14));

  const auto probs = zipf_popularity(8, 1.5);
  CHECK(probs[0] == doctest::Approx(0.5190284444363219).epsilon(1e-12));
  CHECK(std::accumulate(probs.begin(), probs.end(), 0.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 1; i < probs.size(); ++i) CHECK(probs[i] < probs[i - 1]);
}

TEST_CASE("validate_cache_profile accepts the baseline scenario") {
  const NetworkConfig net = hstnet::testing::default_network();
  const auto report = validate_cache_profile(net.cache, net.catalog);
  CHECK(report.ok);
  CHECK(report.detail.empty());
}

TEST_CASE("validate_cache_profile rejects violations") {
  const NetworkConfig net = hstnet::testing::default_network();

  CacheProfile range = net.cache;
  range.sat_probs[0] = 1.2;
  CHECK_FALSE(validate_cache_profile(range, net.catalog).ok);

  CacheProfile capacity = net.cache;
  capacity.sat_probs[3] = 0.5;  // breaks sum p_i^s b_i = C_s
  const auto report = validate_cache_profile(capacity, net.catalog);
  CHECK_FALSE(report.ok);
  CHECK(report.detail.find("capacity") != std::string::npos);

  CacheProfile mismatch = net.cache;
  mismatch.ts_probs.pop_back();
  CHECK_THROWS_AS(validate_cache_profile(mismatch, net.catalog),
                  std::invalid_argument);
}

TEST_CASE("sample_request statistics") {
  const NetworkConfig net = hstnet::testing::default_network();
  Rng rng(3);
  const long n = 1000000;
  long file1 = 0;
  double gap_sum = 0.0;
  for (long i = 0; i < n; ++i) {
    const Request r = sample_request(net.catalog, net.tau_s_s, rng);
    CHECK(r.size_bits == 1e8);
    if (r.file_index == 0) ++file1;
    gap_sum += r.arrival_gap_s;
  }
  CHECK(double(file1) / double(n) ==
        doctest::Approx(net.catalog.popularity[0]).epsilon(0.005));
  CHECK(gap_sum / double(n) == doctest::Approx(net.tau_s_s).epsilon(0.005));

  Catalog single{{2e8}, {1.0}, 0.0};
  for (int i = 0; i < 100; ++i) {
    CHECK(sample_request(single, 1.0, rng).file_index == 0);
  }
}

TEST_CASE("sample_cache_states") {
  const NetworkConfig net = hstnet::testing::default_network();
  Rng rng(6);

  CacheProfile fixed = net.cache;
  fixed.sat_probs[2] = 1.0;
  fixed.ts_probs[2] = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto s = sample_cache_states(fixed, 2, rng);
    CHECK(s.beta_s);
    CHECK_FALSE(s.beta_r);
  }

  long hits = 0;
  const long n = 1000000;
  for (long i = 0; i < n; ++i) {
    hits += sample_cache_states(net.cache, 0, rng).beta_s ? 1 : 0;
  }
  CHECK(double(hits) / double(n) == doctest::Approx(0.375).epsilon(0.005));
}
