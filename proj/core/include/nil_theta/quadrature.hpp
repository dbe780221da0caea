#pragma once

// Tensor-product Gauss-Legendre rules on [0, 1].

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace niltheta {

struct Quadrature {
  std::vector<double> nodes;    // in (0, 1)
  std::vector<double> weights;  // sum to 1
};

// Nodes are Legendre roots found by Newton from the Chebyshev initial guess;
// converges to machine precision in a handful of steps for n <= 64.
inline Quadrature gauss_legendre01(int n) {
  if (n < 1) throw std::invalid_argument("quadrature order must be positive");
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    // map from [-1, 1] to [0, 1]
    q.nodes[i] = 0.5 * (1 - x);
    q.weights[i] = 1.0 / ((1 - x * x) * dp * dp);
  }
  return q;
}

}  // namespace niltheta
