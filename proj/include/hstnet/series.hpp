#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hstnet {

/// Controls truncation of the hypergeometric power series.
struct SeriesControl {
  double rel_tol = 1e-12;
  int max_terms = 500;
};

/// Thrown when a series or quadrature fails to reach its tolerance.
/// Carries the partial value accumulated so far.
class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(const std::string& what, double partial)
      : std::runtime_error(what), partial_value(partial) {}
  double partial_value;
};

/// Kummer confluent hypergeometric function 1F1(a; b; z), direct power
/// series with Pochhammer-ratio recurrence. b must not be a non-positive
/// integer. Intended for moderate real arguments.
double kummer_1f1(double a, double b, double z, const SeriesControl& ctl = {});

/// Generalized hypergeometric 2F2(a1, a2; b1, b2; z). Entire function,
/// series always converges.
double hyp_2f2(double a1, double a2, double b1, double b2, double z,
               const SeriesControl& ctl = {});

}  // namespace hstnet
