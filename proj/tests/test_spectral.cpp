#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "heatsmc/spectral.hpp"

using namespace heatsmc;

namespace {

// Reference quadrature used as an independent oracle: plain trapezoid on a
// very fine grid, no shared code with inner_product's SampledFunction path.
double reference_integral(const Eigenpair& pair, int n) {
  const double dx = 1.0 / (n - 1);
  double acc = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    const double xa = i * dx, xb = (i + 1) * dx;
    const double fa = 10.0 * xa * xa * xa * eigenfunction_eval(pair, xa);
    const double fb = 10.0 * xb * xb * xb * eigenfunction_eval(pair, xb);
    acc += 0.5 * (fa + fb) * dx;
  }
  return acc;
}

}  // namespace

TEST_CASE("branch-0 root for c0=0.5") {
  const auto pair = solve_eigenvalue(0.5, 0);
  CHECK(pair.r == doctest::Approx(0.6532711871).epsilon(1e-6));
  CHECK(pair.lambda == doctest::Approx(-0.4267632439).epsilon(1e-6));
  CHECK(pair.b_star_phi == doctest::Approx(1.2592874578).epsilon(1e-6));
  CHECK(std::fabs(pair.r * std::tan(pair.r) - 0.5) < 1e-12);
  CHECK(pair.lambda == -pair.r * pair.r);
}

TEST_CASE("branch-1 root for c0=0.5 and the approximation -2c0-pi^2") {
  const auto pair = solve_eigenvalue(0.5, 1);
  CHECK(pair.r == doctest::Approx(3.2923100213).epsilon(1e-6));
  CHECK(pair.lambda == doctest::Approx(-10.8393052762).epsilon(1e-6));
  CHECK(pair.b_star_phi == doctest::Approx(-1.0114663656).epsilon(1e-6));
  const double approx = -2.0 * 0.5 - M_PI * M_PI;
  CHECK(std::fabs(pair.lambda - approx) < 0.05);
}

TEST_CASE("c0 -> 0+ sends the branch-0 root to 0") {
  const auto pair = solve_eigenvalue(1e-8, 0);
  CHECK(pair.r < 2e-4);
  CHECK(pair.r > 0.0);
  CHECK(pair.lambda < 0.0);
  // r tan r ~ r^2 forces r ~ sqrt(c0)
  CHECK(pair.r == doctest::Approx(1e-4).epsilon(1e-3));
}

TEST_CASE("eigenpair invariants over a c0/branch sweep") {
  for (double c0 : {0.1, 0.5, 1.0, 3.0, 10.0}) {
    for (int branch : {0, 1, 2, 5}) {
      const auto pair = solve_eigenvalue(c0, branch);
      CHECK(std::fabs(pair.r * std::tan(pair.r) - c0) < 1e-12);
      CHECK(pair.r > branch * M_PI);
      CHECK(pair.r < branch * M_PI + M_PI / 2.0);
      CHECK(pair.lambda < 0.0);
      CHECK(pair.b_star_phi != 0.0);
      // boundary-condition residuals of the analytic eigenfunction
      CHECK(std::fabs(eigenfunction_deriv(pair, 0.0) - c0 * eigenfunction_eval(pair, 0.0)) <
            1e-10);
      CHECK(std::fabs(eigenfunction_deriv(pair, 1.0)) < 1e-10);
    }
  }
}

TEST_CASE("solve_eigenvalue rejects bad input") {
  CHECK_THROWS_AS(solve_eigenvalue(0.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(solve_eigenvalue(-1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(solve_eigenvalue(0.5, -1), std::invalid_argument);
}

TEST_CASE("eigenfunction evaluation") {
  const auto p0 = solve_eigenvalue(0.5, 0);
  const auto p1 = solve_eigenvalue(0.5, 1);
  CHECK(eigenfunction_eval(p0, 0.0) == 1.0);
  CHECK(eigenfunction_eval(p1, 0.0) == 1.0);
  CHECK(eigenfunction_eval(p0, 1.0) == doctest::Approx(1.2593).epsilon(1e-4));
  CHECK(eigenfunction_eval(p1, 1.0) == doctest::Approx(-1.011).epsilon(1e-3));
}

TEST_CASE("sample_eigenfunction") {
  const auto pair = solve_eigenvalue(0.5, 0);
  const auto s = sample_eigenfunction(pair, Grid{11});
  REQUIRE(s.values.size() == 11);
  CHECK(s.values[0] == 1.0);
  CHECK(s.values[10] == doctest::Approx(1.2593).epsilon(1e-4));

  const auto two = sample_eigenfunction(pair, Grid{2});
  REQUIRE(two.values.size() == 2);
  CHECK(two.values[0] == eigenfunction_eval(pair, 0.0));
  CHECK(two.values[1] == eigenfunction_eval(pair, 1.0));
}

TEST_CASE("inner_product basics") {
  Grid g{11};
  SampledFunction ones{g, std::vector<double>(11, 1.0)};
  CHECK(inner_product(ones, ones) == doctest::Approx(1.0).epsilon(1e-15));

  SampledFunction xs{g, {}};
  for (int i = 0; i < 11; ++i) xs.values.push_back(g.x(i));
  // trapezoid of x^2 on 11 nodes: 0.335, O(dx^2) away from 1/3
  CHECK(inner_product(xs, xs) == doctest::Approx(0.335).epsilon(1e-12));

  SampledFunction other{Grid{21}, std::vector<double>(21, 1.0)};
  CHECK_THROWS_AS(inner_product(ones, other), std::invalid_argument);
}

TEST_CASE("inner_product is symmetric and bilinear") {
  Grid g{17};
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    SampledFunction f{g, {}}, h{g, {}}, k{g, {}};
    for (int i = 0; i < g.n_nodes; ++i) {
      f.values.push_back(dist(rng));
      h.values.push_back(dist(rng));
      k.values.push_back(dist(rng));
    }
    const double a = dist(rng), b = dist(rng);
    CHECK(inner_product(f, h) == doctest::Approx(inner_product(h, f)).epsilon(1e-15));
    SampledFunction combo{g, {}};
    for (int i = 0; i < g.n_nodes; ++i) combo.values.push_back(a * f.values[i] + b * h.values[i]);
    CHECK(inner_product(combo, k) ==
          doctest::Approx(a * inner_product(f, k) + b * inner_product(h, k)).epsilon(1e-12));
  }
}

TEST_CASE("sliding variable at t=0 for z0=10x^3 against high-resolution quadrature") {
  const auto pair = solve_eigenvalue(0.5, 1);
  const double ref = reference_integral(pair, 100001);
  CHECK(ref == doctest::Approx(-1.7722).epsilon(1e-4));

  Grid g{11};
  SampledFunction phi = sample_eigenfunction(pair, g);
  SampledFunction z0{g, {}};
  for (int i = 0; i < g.n_nodes; ++i) {
    const double x = g.x(i);
    z0.values.push_back(10.0 * x * x * x);
  }
  const double sigma0 = inner_product(phi, z0);
  CHECK(sigma0 == doctest::Approx(-1.79763320).epsilon(1e-7));
  CHECK(std::fabs(sigma0 - ref) < 0.03);  // O(dx^2) quadrature error at dx = 0.1
}
