#pragma once

#include "heatsmc/grid.hpp"

namespace heatsmc {

/// Eigenpair of the heat operator z -> z'' with Robin boundary z'(0) = c0 z(0)
/// and Neumann boundary z'(1) = 0. The eigenfunction is kept in its raw
/// representation phi(x) = cos(r x) + (c0 / r) sin(r x), so phi(0) = 1.
struct Eigenpair {
  double c0 = 0.0;       ///< Robin coefficient.
  int branch = 0;        ///< Root branch index; r lies in (branch*pi, branch*pi + pi/2).
  double r = 0.0;        ///< Positive root of r tan(r) = c0.
  double lambda = 0.0;   ///< Eigenvalue, lambda = -r^2 < 0.
  double b_star_phi = 0.0;  ///< Boundary trace phi(1), the input gain of the sliding dynamics.
};

/// Solves r tan(r) = c0 on the tan-positive sub-interval of the given branch
/// by bracketed bisection, refined until |r tan r - c0| < 1e-12.
/// Throws std::invalid_argument on bad inputs, std::runtime_error if the
/// bracket does not change sign.
Eigenpair solve_eigenvalue(double c0, int branch);

/// phi(x) = cos(r x) + (c0 / r) sin(r x).
double eigenfunction_eval(const Eigenpair& pair, double x);

/// phi'(x) = -r sin(r x) + c0 cos(r x). Used by boundary-residual checks.
double eigenfunction_deriv(const Eigenpair& pair, double x);

/// Nodal evaluation of the eigenfunction on a grid.
SampledFunction sample_eigenfunction(const Eigenpair& pair, Grid grid);

}  // namespace heatsmc
