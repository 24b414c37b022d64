#include "hstnet/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "hstnet/channel.hpp"

namespace hstnet {

namespace {

double delivery_latency(Decision mode, const Request& request, bool beta_s,
                        double h_sq, const Stage2Obs& obs2, double d,
                        const NetworkConfig& env) {
  const double b = request.size_bits;
  const double gbar_u = env.gbar_u(d);
  std::optional<double> latency;
  switch (mode) {
    case Decision::DirectDelivery:
      latency = direct_latency(
          b, rate_from_snr(env.gbar_s() * h_sq, env.rates), beta_s,
          env.timing);
      break;
    case Decision::AssistedCacheDelivery:
      latency = assisted_latency(
          b, true, rate_from_snr(gbar_u * obs2.g_sq, env.rates), 0.0,
          env.timing);
      break;
    case Decision::AssistedRelayDelivery: {
      const double gamma2 =
          combined_relay_snr({h_sq, obs2.alpha_sq, obs2.g_sq}, env.gbar_s(),
                             env.gbar_t(), gbar_u);
      latency = assisted_latency(b, false, 0.0,
                                 rate_from_snr(gamma2, env.rates), env.timing);
      break;
    }
    default:
      break;
  }
  if (!latency) {
    throw std::logic_error("scheduling decision selected an outage mode");
  }
  return *latency;
}

}  // namespace

FrameOutcome Simulator::run_frame(PolicyKind kind, double eta_star,
                                  Rng& rng) const {
  const NetworkConfig& env = engine_->env();
  FrameOutcome out;
  double t = 0.0;
  long probes = 0;

  for (long k = 0; k < max_users_per_frame; ++k) {
    const Request request = sample_request(env.catalog, env.tau_s_s, rng);
    t += request.arrival_gap_s;

    Stage1Obs obs1;
    obs1.request = request;
    // Uniform position in the disc: radial CDF d^2 / R^2.
    obs1.d_m = env.cell_radius_m * std::sqrt(rng.uniform_pos());
    obs1.cell = std::min<int>(int(rng.uniform() * env.l_cells),
                              env.l_cells - 1);
    obs1.h_sq = sample_shadowed_rician(env.fading_sat, rng);
    obs1.beta_s =
        rng.bernoulli(env.cache.sat_probs[request.file_index]);

    const bool optimal = kind == PolicyKind::Optimal;
    Decision d1 = optimal
                      ? decide_stage1(obs1, eta_star, *engine_)
                      : baseline_decide(kind, obs1, std::nullopt, env);

    Stage2Obs obs2;
    Decision mode = d1;
    if (d1 == Decision::Probe) {
      t += env.timing.tau_p_s;
      ++probes;
      obs2.beta_r = rng.bernoulli(env.cache.ts_probs[request.file_index]);
      obs2.alpha_sq = sample_shadowed_rician(env.fading_ts, rng);
      obs2.g_sq = rng.exponential(1.0);  // Rayleigh power
      mode = optimal ? decide_stage2(obs2, request, obs1.d_m, obs1.h_sq,
                                     eta_star, env)
                     : baseline_decide(kind, obs1, obs2, env);
    }

    if (mode == Decision::Wait || mode == Decision::WaitAfterProbe) continue;

    out.reward_bits = request.size_bits;
    out.time_s = t + delivery_latency(mode, request, obs1.beta_s, obs1.h_sq,
                                      obs2, obs1.d_m, env);
    out.users_seen = k + 1;
    out.probes = probes;
    out.mode = mode;
    return out;
  }
  throw std::runtime_error(
      "frame exceeded the arrival cap without scheduling anyone; "
      "the policy never stops under this configuration");
}

std::vector<FrameOutcome> Simulator::run_frames(PolicyKind kind,
                                                double eta_star, long frames,
                                                std::uint64_t seed,
                                                int threads) const {
  if (frames <= 0) throw std::invalid_argument("frames must be positive");
  std::vector<FrameOutcome> out{std::size_t(frames)};
  const auto worker = [&](long lo, long hi) {
    for (long f = lo; f < hi; ++f) {
      Rng rng = Rng::for_frame(seed, std::uint64_t(f));
      out[std::size_t(f)] = run_frame(kind, eta_star, rng);
    }
  };
  if (threads <= 1) {
    worker(0, frames);
    return out;
  }
  const int n = std::min<long>(threads, frames);
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    const long lo = frames * i / n;
    const long hi = frames * (i + 1) / n;
    pool.emplace_back(worker, lo, hi);
  }
  for (auto& th : pool) th.join();
  return out;
}

ThroughputEstimate Simulator::run_experiment(PolicyKind kind, double eta_star,
                                             long frames, std::uint64_t seed,
                                             int threads) const {
  return estimate_throughput(run_frames(kind, eta_star, frames, seed, threads),
                             seed);
}

ThroughputEstimate estimate_throughput(const std::vector<FrameOutcome>& frames,
                                       std::uint64_t seed) {
  ThroughputEstimate est;
  est.frames = long(frames.size());
  est.seed = seed;
  if (frames.empty()) return est;

  double reward = 0.0, time = 0.0;
  for (const auto& f : frames) {
    reward += f.reward_bits;
    time += f.time_s;
  }
  est.throughput_bps = reward / time;

  // Batch means over the renewal ratio estimator.
  const long n = est.frames;
  const long batches =
      n < 30 ? n : std::max<long>(30, long(std::sqrt(double(n))));
  if (batches < 2) return est;
  std::vector<double> ratio(std::size_t(batches), 0.0);
  for (long j = 0; j < batches; ++j) {
    const long lo = n * j / batches;
    const long hi = n * (j + 1) / batches;
    double r = 0.0, t = 0.0;
    for (long f = lo; f < hi; ++f) {
      r += frames[std::size_t(f)].reward_bits;
      t += frames[std::size_t(f)].time_s;
    }
    ratio[std::size_t(j)] = r / t;
  }
  double mean = 0.0;
  for (double r : ratio) mean += r;
  mean /= double(batches);
  double var = 0.0;
  for (double r : ratio) var += (r - mean) * (r - mean);
  var /= double(batches - 1);
  est.ci95_halfwidth_bps = 1.96 * std::sqrt(var / double(batches));
  return est;
}

}  // namespace hstnet
