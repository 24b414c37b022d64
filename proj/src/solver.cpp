#include "hstnet/solver.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hstnet {

EtaSolution solve_eta_star(const std::function<double(double)>& lambda_fn,
                           double tau_s, double eta_max, double tol_rel) {
  const double lambda0 = lambda_fn(0.0);
  if (!(lambda0 > 0.0)) {
    throw std::invalid_argument("solve_eta_star: Lambda(0) must be positive");
  }
  const double g_hi = lambda_fn(eta_max) - eta_max * tau_s;
  if (g_hi > 0.0) {
    std::ostringstream msg;
    msg << "solve_eta_star: no sign change on [0, " << eta_max
        << "]: g(eta_max) = " << g_hi
        << " > 0; throughput bound exceeds the top rate, check tau_s and the "
           "rate table";
    throw std::invalid_argument(msg.str());
  }

  const double tol_abs = tol_rel * lambda0;
  double lo = 0.0, hi = eta_max;
  double mid = 0.5 * (lo + hi), g = 0.0;
  int it = 0;
  for (; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    g = lambda_fn(mid) - mid * tau_s;
    if (g > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= tol_rel * std::max(mid, 1.0) && std::abs(g) <= tol_abs) {
      break;
    }
    if (hi - lo <= 1e-14 * eta_max) break;  // bracket exhausted
  }
  return {mid, std::abs(g), it + 1, lo, hi};
}

EtaSolution solve_eta_star(const RewardEngine& engine, double tol_rel) {
  return solve_eta_star(
      [&engine](double eta) { return engine.lambda_of_eta(eta); },
      engine.env().tau_s_s, engine.env().top_rate_bps(), tol_rel);
}

}  // namespace hstnet
