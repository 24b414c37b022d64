#include "hstnet/catalog.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hstnet {

double Catalog::mean_size_bits() const {
  double s = 0.0;
  for (std::size_t i = 0; i < sizes_bits.size(); ++i) {
    s += popularity[i] * sizes_bits[i];
  }
  return s;
}

std::vector<double> zipf_popularity(std::size_t I, double zeta) {
  if (I < 1) throw std::invalid_argument("zipf_popularity: I must be >= 1");
  std::vector<double> p(I);
  double norm = 0.0;
  for (std::size_t i = 0; i < I; ++i) {
    p[i] = std::pow(static_cast<double>(i + 1), -zeta);
    norm += p[i];
  }
  for (auto& v : p) v /= norm;
  return p;
}

CacheViolation validate_cache_profile(const CacheProfile& profile,
                                      const Catalog& catalog) {
  const std::size_t I = catalog.file_count();
  if (profile.sat_probs.size() != I || profile.ts_probs.size() != I) {
    throw std::invalid_argument("validate_cache_profile: length mismatch");
  }
  std::ostringstream msg;
  for (std::size_t i = 0; i < I; ++i) {
    if (profile.sat_probs[i] < 0.0 || profile.sat_probs[i] > 1.0) {
      msg << "sat_probs[" << i << "] = " << profile.sat_probs[i]
          << " outside [0,1]";
      return {false, msg.str()};
    }
    if (profile.ts_probs[i] < 0.0 || profile.ts_probs[i] > 1.0) {
      msg << "ts_probs[" << i << "] = " << profile.ts_probs[i]
          << " outside [0,1]";
      return {false, msg.str()};
    }
  }
  const auto expected_bits = [&](const std::vector<double>& probs) {
    double s = 0.0;
    for (std::size_t i = 0; i < I; ++i) s += probs[i] * catalog.sizes_bits[i];
    return s;
  };
  const double sat_bits = expected_bits(profile.sat_probs);
  const double ts_bits = expected_bits(profile.ts_probs);
  if (std::abs(sat_bits - profile.sat_capacity_bits) >
      1e-9 * std::max(1.0, std::abs(profile.sat_capacity_bits))) {
    msg << "satellite capacity mismatch: sum p_i^s b_i = " << sat_bits
        << " but C_s = " << profile.sat_capacity_bits;
    return {false, msg.str()};
  }
  if (std::abs(ts_bits - profile.ts_capacity_bits) >
      1e-9 * std::max(1.0, std::abs(profile.ts_capacity_bits))) {
    msg << "TS capacity mismatch: sum p_i^t b_i = " << ts_bits
        << " but C_t = " << profile.ts_capacity_bits;
    return {false, msg.str()};
  }
  return {};
}

Request sample_request(const Catalog& catalog, double tau_s, Rng& rng) {
  if (!(tau_s > 0.0)) throw std::invalid_argument("sample_request: tau_s must be > 0");
  const double u = rng.uniform();
  double acc = 0.0;
  std::size_t idx = catalog.file_count() - 1;
  for (std::size_t i = 0; i < catalog.file_count(); ++i) {
    acc += catalog.popularity[i];
    if (u < acc) {
      idx = i;
      break;
    }
  }
  return Request{idx, catalog.sizes_bits[idx], rng.exponential(tau_s)};
}

CacheStates sample_cache_states(const CacheProfile& profile,
                                std::size_t file_index, Rng& rng) {
  if (file_index >= profile.sat_probs.size()) {
    throw std::invalid_argument("sample_cache_states: file index out of range");
  }
  CacheStates st;
  st.beta_s = rng.bernoulli(profile.sat_probs[file_index]);
  st.beta_r = rng.bernoulli(profile.ts_probs[file_index]);
  return st;
}

}  // namespace hstnet
