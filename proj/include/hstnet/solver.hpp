#pragma once

#include <functional>

#include "hstnet/reward.hpp"

namespace hstnet {

struct EtaSolution {
  double eta_star_bps = 0.0;
  double residual_bits = 0.0;  // |Lambda(eta*) - eta* * tau_s|
  int iterations = 0;
  double bracket_low = 0.0;
  double bracket_high = 0.0;
};

/// Root of g(eta) = Lambda(eta) - eta*tau_s by bisection on [0, eta_max].
/// g is strictly decreasing with g(0) = mean file size > 0; eta_max (the top
/// rate) is a hard upper bound on long-run throughput. The residual is
/// driven below tol_rel * Lambda(0).
EtaSolution solve_eta_star(const std::function<double(double)>& lambda_fn,
                           double tau_s, double eta_max,
                           double tol_rel = 1e-6);

EtaSolution solve_eta_star(const RewardEngine& engine, double tol_rel = 1e-6);

}  // namespace hstnet
