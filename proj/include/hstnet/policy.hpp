#pragma once

#include <optional>

#include "hstnet/reward.hpp"

namespace hstnet {

/// Stage-1 satellite observation X_k.
struct Stage1Obs {
  Request request;
  bool beta_s = false;
  double h_sq = 0.0;
  int cell = 0;      // omega_k in [0, L)
  double d_m = 0.0;  // distance to the cell's TS
};

/// Stage-2 TS probe Y_k.
struct Stage2Obs {
  bool beta_r = false;
  double alpha_sq = 0.0;
  double g_sq = 0.0;
};

enum class Decision {
  // stage 1
  DirectDelivery,
  Wait,
  Probe,
  // stage 2 (only reachable after Probe)
  AssistedCacheDelivery,
  AssistedRelayDelivery,
  WaitAfterProbe,
};

enum class PolicyKind {
  Optimal,
  NoWaitDirect,
  NoWaitAssisted,
  NoWaitNoTsCache,
};

/// Threshold rule at stage 1: direct delivery when the immediate priced
/// reward dominates both the probe value and zero, wait when both are
/// negative, probe otherwise.
Decision decide_stage1(const Stage1Obs& obs, double eta_star,
                       const RewardEngine& engine);

/// Threshold rule at stage 2, after probing. h_sq is the stage-1 Sat-User
/// gain, which the relay-combined SNR depends on.
Decision decide_stage2(const Stage2Obs& obs, const Request& request, double d,
                       double h_sq, double eta_star, const NetworkConfig& env);

/// The no-wait baselines expressed over the same observations. For the two
/// probing baselines stage 1 always returns Probe and obs2 selects the
/// latency-minimal available mode (assisted wins ties); NoWaitNoTsCache
/// ignores the TS cache state.
Decision baseline_decide(PolicyKind kind, const Stage1Obs& obs1,
                         const std::optional<Stage2Obs>& obs2,
                         const NetworkConfig& env);

}  // namespace hstnet
