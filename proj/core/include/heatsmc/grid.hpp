#pragma once

#include <cstddef>
#include <vector>

namespace heatsmc {

/// Uniform grid on [0,1] with n_nodes nodes (n_nodes - 1 cells).
struct Grid {
  int n_nodes = 11;

  double dx() const { return 1.0 / static_cast<double>(n_nodes - 1); }
  double x(int i) const { return static_cast<double>(i) * dx(); }

  bool operator==(const Grid&) const = default;
};

/// Nodal values of a function sampled on a Grid.
struct SampledFunction {
  Grid grid;
  std::vector<double> values;
};

/// Composite-trapezoid approximation of the L2 inner product on [0,1].
/// Throws std::invalid_argument on grid mismatch.
double inner_product(const SampledFunction& f, const SampledFunction& g);

/// Trapezoid L2 norm, sqrt(inner_product(f, f)).
double l2_norm(const SampledFunction& f);

}  // namespace heatsmc
