#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hstnet/solver.hpp"
#include "test_util.hpp"

using namespace hstnet;
using hstnet::testing::default_network;

TEST_CASE("synthetic linear Lambda has a closed-form fixed point") {
  const double A = 1e8, B = 0.3, tau_s = 0.5e-3;
  const auto lambda = [&](double eta) { return A - B * eta; };
  const auto sol = solve_eta_star(lambda, tau_s, 1e9, 1e-10);
  CHECK(sol.eta_star_bps == doctest::Approx(A / (tau_s + B)).epsilon(1e-8));
  CHECK(sol.residual_bits <= 1e-10 * A * 1.01);
  CHECK(sol.bracket_low <= sol.eta_star_bps);
  CHECK(sol.bracket_high >= sol.eta_star_bps);
}

TEST_CASE("comparative statics in tau_s") {
  const double A = 1e8, B = 0.3;
  const auto lambda = [&](double eta) { return A - B * eta; };
  const double fast = solve_eta_star(lambda, 0.5e-3, 1e9).eta_star_bps;
  const double slow = solve_eta_star(lambda, 5e-3, 1e9).eta_star_bps;
  CHECK(slow < fast);
}

TEST_CASE("missing sign change is a configuration error") {
  // Lambda constant and positive: g(eta) never crosses zero on the bracket.
  const auto lambda = [](double) { return 1e8; };
  CHECK_THROWS_AS(solve_eta_star(lambda, 1e-12, 1e6), std::invalid_argument);
  // Nonpositive Lambda(0) is equally invalid.
  const auto broken = [](double) { return -1.0; };
  CHECK_THROWS_AS(solve_eta_star(broken, 1e-3, 1e6), std::invalid_argument);
}

TEST_CASE("baseline scenario solve") {
  const NetworkConfig net = default_network();
  RewardEngine engine(net);
  const auto sol = solve_eta_star(engine);
  const double lambda0 = engine.lambda_of_eta(0.0);

  CHECK(sol.eta_star_bps <= net.top_rate_bps());
  CHECK(sol.eta_star_bps <= lambda0 / net.tau_s_s);
  CHECK(sol.residual_bits <= 1e-6 * lambda0 * 1.01);
  // Fixed point restated directly.
  CHECK(engine.lambda_of_eta(sol.eta_star_bps) ==
        doctest::Approx(sol.eta_star_bps * net.tau_s_s)
            .epsilon(1e-5));
  // Frozen regression band for the shipped scenario.
  CHECK(sol.eta_star_bps > 1.2e8);
  CHECK(sol.eta_star_bps < 1.3e8);
}

TEST_CASE("solution is stable under quadrature refinement") {
  const NetworkConfig net = default_network();
  QuadratureSpec coarse;
  QuadratureSpec fine;
  fine.radial_nodes = coarse.radial_nodes * 2;
  fine.snr_nodes = coarse.snr_nodes * 2;
  const double a = solve_eta_star(RewardEngine(net, coarse)).eta_star_bps;
  const double b = solve_eta_star(RewardEngine(net, fine)).eta_star_bps;
  CHECK(std::fabs(a - b) / b < 1e-3);
}
