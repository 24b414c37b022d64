#pragma once

#include <vector>

namespace hstnet {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  explicit GaussLegendre(int n);
  std::vector<double> x;
  std::vector<double> w;
};

}  // namespace hstnet
