#include "heatsmc/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heatsmc {

namespace {

double characteristic(double r, double c0) { return r * std::tan(r) - c0; }

}  // namespace

Eigenpair solve_eigenvalue(double c0, int branch) {
  if (!(c0 > 0.0)) {
    throw std::invalid_argument("solve_eigenvalue: c0 must be positive");
  }
  if (branch < 0) {
    throw std::invalid_argument("solve_eigenvalue: branch must be non-negative");
  }

  // r tan r - c0 is monotone increasing on (k*pi, k*pi + pi/2), going from
  // -c0 to +inf, so bisection on this bracket cannot miss the root.
  const double pi = std::numbers::pi;
  const double eps = 1e-12;
  double lo = static_cast<double>(branch) * pi + eps;
  double hi = static_cast<double>(branch) * pi + 0.5 * pi - eps;

  double flo = characteristic(lo, c0);
  double fhi = characteristic(hi, c0);
  if (!(flo < 0.0) || !(fhi > 0.0)) {
    throw std::runtime_error("solve_eigenvalue: bracket does not change sign");
  }

  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket reduced to adjacent doubles
    if (characteristic(mid, c0) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  const double r = (std::fabs(characteristic(lo, c0)) < std::fabs(characteristic(hi, c0))) ? lo : hi;
  if (std::fabs(characteristic(r, c0)) >= 1e-12) {
    throw std::runtime_error("solve_eigenvalue: residual tolerance not reached");
  }

  Eigenpair pair;
  pair.c0 = c0;
  pair.branch = branch;
  pair.r = r;
  pair.lambda = -r * r;
  pair.b_star_phi = eigenfunction_eval(pair, 1.0);
  return pair;
}

double eigenfunction_eval(const Eigenpair& pair, double x) {
  return std::cos(pair.r * x) + (pair.c0 / pair.r) * std::sin(pair.r * x);
}

double eigenfunction_deriv(const Eigenpair& pair, double x) {
  return -pair.r * std::sin(pair.r * x) + pair.c0 * std::cos(pair.r * x);
}

SampledFunction sample_eigenfunction(const Eigenpair& pair, Grid grid) {
  SampledFunction out;
  out.grid = grid;
  out.values.resize(grid.n_nodes);
  for (int i = 0; i < grid.n_nodes; ++i) {
    out.values[i] = eigenfunction_eval(pair, grid.x(i));
  }
  return out;
}

}  // namespace heatsmc
