#pragma once

#include <cstdint>
#include <vector>

#include "hstnet/policy.hpp"

namespace hstnet {

/// One renewal cycle: the frame ends when a user is scheduled.
struct FrameOutcome {
  double reward_bits = 0.0;  // size of the delivered file
  double time_s = 0.0;       // arrival gaps + probe costs + delivery latency
  long users_seen = 0;
  long probes = 0;
  Decision mode = Decision::Wait;  // terminal delivery decision
};

struct ThroughputEstimate {
  double throughput_bps = 0.0;      // sum reward / sum time
  double ci95_halfwidth_bps = 0.0;  // batch-means 95% interval
  long frames = 0;
  std::uint64_t seed = 0;
};

/// Discrete-event renewal simulation of the scheduling frame loop. Frames
/// use independent random streams derived from (seed, frame index), so
/// results are identical under sequential and concurrent execution.
class Simulator {
 public:
  explicit Simulator(const RewardEngine& engine) : engine_(&engine) {}

  /// Arrivals per frame before the run is declared misconfigured
  /// (a policy that never stops).
  long max_users_per_frame = 1000000;

  FrameOutcome run_frame(PolicyKind kind, double eta_star, Rng& rng) const;

  std::vector<FrameOutcome> run_frames(PolicyKind kind, double eta_star,
                                       long frames, std::uint64_t seed,
                                       int threads = 1) const;

  ThroughputEstimate run_experiment(PolicyKind kind, double eta_star,
                                    long frames, std::uint64_t seed,
                                    int threads = 1) const;

 private:
  const RewardEngine* engine_;
};

/// Ratio-of-sums throughput with a batch-means confidence interval
/// (at least 30 batches when the frame count allows).
ThroughputEstimate estimate_throughput(const std::vector<FrameOutcome>& frames,
                                       std::uint64_t seed);

}  // namespace hstnet
