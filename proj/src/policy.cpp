#include "hstnet/policy.hpp"

#include <algorithm>
#include <limits>

namespace hstnet {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

Decision decide_stage1(const Stage1Obs& obs, double eta_star,
                       const RewardEngine& engine) {
  const auto& env = engine.env();
  const double b = obs.request.size_bits;
  const double rate = rate_from_snr(env.gbar_s() * obs.h_sq, env.rates);
  const auto latency = direct_latency(b, rate, obs.beta_s, env.timing);
  const double immediate = latency ? b - eta_star * *latency : kNegInf;
  const double om = engine.omega_reward(
      b, env.cache.ts_probs[obs.request.file_index], obs.h_sq, obs.d_m,
      eta_star);
  if (immediate >= std::max(om, 0.0)) return Decision::DirectDelivery;
  if (std::max(immediate, om) < 0.0) return Decision::Wait;
  return Decision::Probe;
}

Decision decide_stage2(const Stage2Obs& obs, const Request& request, double d,
                       double h_sq, double eta_star, const NetworkConfig& env) {
  const double b = request.size_bits;
  if (obs.beta_r) {
    const double gamma1 = env.gbar_u(d) * obs.g_sq;
    const double rate_cache = rate_from_snr(gamma1, env.rates);
    return rate_cache > 0.0 && rate_cache >= eta_star
               ? Decision::AssistedCacheDelivery
               : Decision::WaitAfterProbe;
  }
  if (eta_star * env.timing.t1_s >= b) return Decision::WaitAfterProbe;
  const double gamma2 = combined_relay_snr({h_sq, obs.alpha_sq, obs.g_sq},
                                           env.gbar_s(), env.gbar_t(),
                                           env.gbar_u(d));
  const double rate_relay = rate_from_snr(gamma2, env.rates);
  const double threshold = eta_star * b / (b - eta_star * env.timing.t1_s);
  return rate_relay > 0.0 && rate_relay >= threshold
             ? Decision::AssistedRelayDelivery
             : Decision::WaitAfterProbe;
}

Decision baseline_decide(PolicyKind kind, const Stage1Obs& obs1,
                         const std::optional<Stage2Obs>& obs2,
                         const NetworkConfig& env) {
  const double b = obs1.request.size_bits;
  const double rate_direct =
      rate_from_snr(env.gbar_s() * obs1.h_sq, env.rates);

  if (kind == PolicyKind::NoWaitDirect) {
    return rate_direct > 0.0 ? Decision::DirectDelivery : Decision::Wait;
  }
  if (!obs2) return Decision::Probe;

  const bool beta_r = kind == PolicyKind::NoWaitNoTsCache ? false : obs2->beta_r;
  const double gamma1 = env.gbar_u(obs1.d_m) * obs2->g_sq;
  const double gamma2 =
      combined_relay_snr({obs1.h_sq, obs2->alpha_sq, obs2->g_sq},
                         env.gbar_s(), env.gbar_t(), env.gbar_u(obs1.d_m));
  const auto t_direct =
      direct_latency(b, rate_direct, obs1.beta_s, env.timing);
  const auto t_assisted =
      assisted_latency(b, beta_r, rate_from_snr(gamma1, env.rates),
                       rate_from_snr(gamma2, env.rates), env.timing);

  if (!t_direct && !t_assisted) return Decision::WaitAfterProbe;
  if (t_assisted && (!t_direct || *t_assisted <= *t_direct)) {
    return beta_r ? Decision::AssistedCacheDelivery
                  : Decision::AssistedRelayDelivery;
  }
  return Decision::DirectDelivery;
}

}  // namespace hstnet
