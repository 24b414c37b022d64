#pragma once

#include <string>
#include <vector>

#include "hstnet/rng.hpp"

namespace hstnet {

/// Content catalog with Zipf request popularity.
struct Catalog {
  std::vector<double> sizes_bits;   // b_i
  std::vector<double> popularity;   // p_i, sums to 1
  double zeta = 0.0;

  std::size_t file_count() const { return sizes_bits.size(); }
  double mean_size_bits() const;
};

/// Probabilistic cache placement at the satellite and the terrestrial
/// stations. Expected cached bits must equal the capacities.
struct CacheProfile {
  std::vector<double> sat_probs;  // p_i^s
  std::vector<double> ts_probs;   // p_i^t
  double sat_capacity_bits = 0.0;
  double ts_capacity_bits = 0.0;
};

struct Request {
  std::size_t file_index = 0;  // 0-based
  double size_bits = 0.0;
  double arrival_gap_s = 0.0;
};

/// Normalized Zipf weights p_i = i^-zeta / sum(u^-zeta), i = 1..I.
std::vector<double> zipf_popularity(std::size_t I, double zeta);

struct CacheViolation {
  bool ok = true;
  std::string detail;
};

/// Checks range bounds and both capacity equalities (1e-9 relative).
CacheViolation validate_cache_profile(const CacheProfile& profile,
                                      const Catalog& catalog);

Request sample_request(const Catalog& catalog, double tau_s, Rng& rng);

struct CacheStates {
  bool beta_s = false;
  bool beta_r = false;
};

/// Independent Bernoulli draws with means p_i^s and p_i^t.
CacheStates sample_cache_states(const CacheProfile& profile,
                                std::size_t file_index, Rng& rng);

}  // namespace hstnet
