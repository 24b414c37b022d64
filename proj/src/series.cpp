#include "hstnet/series.hpp"

#include <cmath>

namespace hstnet {

namespace {

bool non_positive_integer(double b) {
  return b <= 0.0 && b == std::floor(b);
}

}  // namespace

double kummer_1f1(double a, double b, double z, const SeriesControl& ctl) {
  if (non_positive_integer(b)) {
    throw std::invalid_argument("kummer_1f1: b is a non-positive integer");
  }
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < ctl.max_terms; ++n) {
    term *= (a + n) * z / ((b + n) * (n + 1));
    sum += term;
    if (std::abs(term) <= ctl.rel_tol * std::abs(sum)) {
      return sum;
    }
  }
  throw NumericFailure("kummer_1f1: no convergence within max_terms", sum);
}

double hyp_2f2(double a1, double a2, double b1, double b2, double z,
               const SeriesControl& ctl) {
  if (non_positive_integer(b1) || non_positive_integer(b2)) {
    throw std::invalid_argument("hyp_2f2: lower parameter is a non-positive integer");
  }
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < ctl.max_terms; ++n) {
    term *= (a1 + n) * (a2 + n) * z / ((b1 + n) * (b2 + n) * (n + 1));
    sum += term;
    if (std::abs(term) <= ctl.rel_tol * std::abs(sum)) {
      return sum;
    }
  }
  throw NumericFailure("hyp_2f2: no convergence within max_terms", sum);
}

}  // namespace hstnet
