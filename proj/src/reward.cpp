#include "hstnet/reward.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hstnet/series.hpp"

namespace hstnet {

PricedReward priced(double value_bits, double time_cost_s, double eta) {
  return {value_bits, time_cost_s, value_bits - eta * time_cost_s};
}

void QuadratureSpec::validate() const {
  if (radial_nodes < 1 || snr_nodes < 1) {
    throw std::invalid_argument("QuadratureSpec: node counts must be positive");
  }
  if (!(snr_truncation_quantile > 0.0 && snr_truncation_quantile < 1.0)) {
    throw std::invalid_argument("QuadratureSpec: truncation quantile must be in (0,1)");
  }
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double direct_snr_cdf(double x, const NetworkConfig& env,
                      const GaussLegendre& gl) {
  if (x <= 0.0) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < gl.x.size(); ++i) {
    const double t = 0.5 * x * (gl.x[i] + 1.0);
    acc += gl.w[i] * pdf_snr_direct(t, env.gbar_s(), env.fading_sat);
  }
  return 0.5 * x * acc;
}

/// Inverse of the direct-SNR CDF at the truncation quantile.
double find_truncation(const NetworkConfig& env, double quantile) {
  const GaussLegendre gl(200);
  double hi = 2.0 * env.fading_sat.b * env.gbar_s() + env.gbar_s();
  for (int i = 0; i < 200 && direct_snr_cdf(hi, env, gl) < quantile; ++i) {
    hi *= 2.0;
  }
  double lo = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    (direct_snr_cdf(mid, env, gl) < quantile ? lo : hi) = mid;
  }
  return hi;
}

/// Priced value of immediate direct delivery. Outage is worthless at any
/// positive price; at eta = 0 the time charge vanishes identically, so the
/// branch is worth the full file size regardless of the rate bracket.
double direct_value(double b, double rate, bool beta_s, double eta,
                    const NetworkConfig& env) {
  if (rate <= 0.0) return eta == 0.0 ? b : kNegInf;
  double t = b / rate + env.timing.t1_s + (beta_s ? 0.0 : env.timing.t2_s);
  if (env.lambda_reading == NetworkConfig::LambdaReading::Eq7Literal) {
    t += env.timing.t1_s + (beta_s ? 0.0 : env.timing.t2_s);
  }
  return b - eta * t;
}

}  // namespace

RewardEngine::RewardEngine(const NetworkConfig& env, QuadratureSpec quad)
    : env_(env),
      quad_(quad),
      gl_radial_(quad.radial_nodes),
      gl_snr_(std::max(
          4, quad.snr_nodes /
                 (static_cast<int>(env.rates.mode_count()) + 1))) {
  quad_.validate();
  env_.finalize();
  const double y_max = env_.rates.thresholds_lin.back() * 1.05;
  relay_ = std::make_shared<const RelayCdfTable>(
      env_.gbar_t(), env_.fading_ts,
      [this](double d) { return env_.gbar_u(d); }, 0.25, env_.cell_radius_m,
      y_max);
  x_trunc_ = find_truncation(env_, quad_.snr_truncation_quantile);
}

double RewardEngine::omega_reward(double b_bits, double ts_cache_prob,
                                  double h_sq, double d, double eta) const {
  return omega_from_snr(b_bits, ts_cache_prob, env_.gbar_s() * h_sq, d, eta);
}

double RewardEngine::omega_from_snr(double b_bits, double ts_cache_prob,
                                    double x, double d, double eta) const {
  if (!(b_bits > 0.0)) throw std::invalid_argument("omega: b must be > 0");
  if (!(eta >= 0.0)) throw std::invalid_argument("omega: eta must be >= 0");
  const auto& th = env_.rates.thresholds_lin;
  const auto& rates = env_.rates.rates_bps;
  const std::size_t M = rates.size();
  const double gu = env_.gbar_u(d);
  double val = 0.0;

  // Cache-hit branch over modes fast enough to beat the price.
  if (ts_cache_prob > 0.0) {
    for (std::size_t m = 0; m < M; ++m) {
      if (rates[m] < eta) continue;
      const double lo = cdf_snr_terrestrial(th[m], gu);
      const double hi = m + 1 < M ? cdf_snr_terrestrial(th[m + 1], gu) : 1.0;
      val += ts_cache_prob * (hi - lo) * (b_bits - eta * b_bits / rates[m]);
    }
  }

  // Relay branch; the rate condition is unsatisfiable once eta*T1 >= b.
  if (ts_cache_prob < 1.0 && eta * env_.timing.t1_s < b_bits) {
    const double thr = eta * b_bits / (b_bits - eta * env_.timing.t1_s);
    for (std::size_t m = 0; m < M; ++m) {
      if (rates[m] < thr) continue;
      const double lo = relay_->cdf(th[m] - x, d);
      const double hi = m + 1 < M ? relay_->cdf(th[m + 1] - x, d) : 1.0;
      val += (1.0 - ts_cache_prob) * (hi - lo) *
             (b_bits - eta * env_.timing.t1_s - eta * b_bits / rates[m]);
    }
  }
  return val - eta * env_.timing.tau_p_s;
}

double RewardEngine::lambda_of_eta(double eta) const {
  if (!(eta >= 0.0)) throw std::invalid_argument("lambda_of_eta: eta must be >= 0");

  // Collapse files with identical (size, cache probabilities); the per-node
  // work depends only on that tuple.
  struct Group {
    double b, pt, ps, weight;
  };
  std::vector<Group> groups;
  for (std::size_t i = 0; i < env_.catalog.file_count(); ++i) {
    const Group g{env_.catalog.sizes_bits[i], env_.cache.ts_probs[i],
                  env_.cache.sat_probs[i], env_.catalog.popularity[i]};
    bool merged = false;
    for (auto& e : groups) {
      if (e.b == g.b && e.pt == g.pt && e.ps == g.ps) {
        e.weight += g.weight;
        merged = true;
        break;
      }
    }
    if (!merged) groups.push_back(g);
  }

  // SNR brackets: the integrand is smooth between rate thresholds.
  std::vector<double> edges{0.0};
  for (double t : env_.rates.thresholds_lin) {
    if (t < x_trunc_) edges.push_back(t);
  }
  edges.push_back(x_trunc_);

  const double R = env_.cell_radius_m;
  double total = 0.0;
  for (std::size_t ir = 0; ir < gl_radial_.x.size(); ++ir) {
    const double r = 0.5 * R * (gl_radial_.x[ir] + 1.0);
    const double wr = 0.5 * R * gl_radial_.w[ir] * (2.0 * r / (R * R));
    double inner = 0.0;
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
      const double half = 0.5 * (edges[e + 1] - edges[e]);
      const double mid = 0.5 * (edges[e + 1] + edges[e]);
      for (std::size_t ix = 0; ix < gl_snr_.x.size(); ++ix) {
        const double x = mid + half * gl_snr_.x[ix];
        const double wx = half * gl_snr_.w[ix];
        const double fx = pdf_snr_direct(x, env_.gbar_s(), env_.fading_sat);
        const double rate = rate_from_snr(x, env_.rates);
        double v = 0.0;
        for (const auto& g : groups) {
          const double om = omega_from_snr(g.b, g.pt, x, r, eta);
          const double hit =
              std::max({direct_value(g.b, rate, true, eta, env_), 0.0, om});
          const double miss =
              std::max({direct_value(g.b, rate, false, eta, env_), 0.0, om});
          v += g.weight * (g.ps * hit + (1.0 - g.ps) * miss);
        }
        inner += wx * fx * v;
      }
    }
    total += wr * inner;
  }
  return total;
}

}  // namespace hstnet
