#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "heatsmc/controllers.hpp"
#include "heatsmc/spectral.hpp"

using namespace heatsmc;

namespace {
const Eigenpair kPair = solve_eigenvalue(0.5, 1);  // b_star_phi ~ -1.01147
}

TEST_CASE("SMC gain gate reproduces the reference gain choice") {
  const auto d = DisturbanceSpec::sinusoid(2.0, 1.0);

  const auto pass = validate_smc_gains(SmcGains{2.5}, d, kPair.b_star_phi);
  CHECK(pass.pass);
  CHECK(pass.margin == doctest::Approx(2.5 - 2.0 * std::fabs(kPair.b_star_phi)).epsilon(1e-15));
  CHECK(pass.margin == doctest::Approx(0.477).epsilon(1e-3));

  const auto fail = validate_smc_gains(SmcGains{2.0}, d, kPair.b_star_phi);
  CHECK_FALSE(fail.pass);

  const auto trivial = validate_smc_gains(SmcGains{1.0}, DisturbanceSpec::zero(), 0.7);
  CHECK(trivial.pass);
  CHECK(trivial.margin == 1.0);

  CHECK_THROWS_AS(validate_smc_gains(SmcGains{1.0}, d, 0.0), std::invalid_argument);
}

TEST_CASE("super-twisting gain gate reproduces the reference gain choice") {
  const auto d = DisturbanceSpec::sinusoid(2.0, 1.0);  // C = 2

  const auto pass = validate_st_gains(StGains{2.2, 2.5}, d, kPair.b_star_phi);
  CHECK(pass.pass);
  CHECK(pass.beta_margin == doctest::Approx(0.477).epsilon(1e-3));
  CHECK(pass.alpha_margin == doctest::Approx(0.073).epsilon(2e-2));

  const auto fail = validate_st_gains(StGains{2.0, 2.5}, d, kPair.b_star_phi);
  CHECK_FALSE(fail.pass);
  CHECK(fail.beta_margin > 0.0);
  CHECK(fail.alpha_margin < 0.0);

  // constant disturbance: C = 0, any beta > 0 with alpha > sqrt(beta) passes
  const auto constant = validate_st_gains(StGains{1.1, 1.0}, DisturbanceSpec::constant(5.0), 0.7);
  CHECK(constant.pass);

  const auto table = DisturbanceSpec::table({0.0, 1.0}, 0.5, 1.0);
  CHECK_THROWS_AS(validate_st_gains(StGains{2.2, 2.5}, table, 0.7), std::invalid_argument);
}

TEST_CASE("smc_control arithmetic and odd symmetry") {
  const SmcGains gains{2.5};
  CHECK(smc_control(0.0, kPair, gains, 0.0) == 0.0);

  const double u_plus = smc_control(1.0, kPair, gains, 1.0);
  CHECK(u_plus ==
        doctest::Approx(-(kPair.lambda + 2.5) / kPair.b_star_phi).epsilon(1e-15));
  CHECK(u_plus == doctest::Approx(-8.2448).epsilon(1e-4));

  const double u_minus = smc_control(-1.0, kPair, gains, -1.0);
  CHECK(u_minus == doctest::Approx(-u_plus).epsilon(1e-15));
}

TEST_CASE("st_control arithmetic and continuity at the surface") {
  const StGains gains{2.2, 2.5};
  CHECK(st_control(0.0, StState{0.0}, kPair, gains, 0.0) == 0.0);

  const double u = st_control(1.0, StState{0.0}, kPair, gains, 1.0);
  CHECK(u == doctest::Approx((-kPair.lambda - 2.2) / kPair.b_star_phi).epsilon(1e-15));

  // no jump at sigma = 0: u(+eps) - u(-eps) -> 0
  for (double eps : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const double gap = st_control(eps, StState{0.3}, kPair, gains, 1.0) -
                       st_control(-eps, StState{0.3}, kPair, gains, -1.0);
    CHECK(std::fabs(gap) < 3.0 * 2.2 * std::sqrt(eps));
  }
}

TEST_CASE("st_control is sqrt-continuous over a dense sigma sweep") {
  const StGains gains{2.2, 2.5};
  const StState state{-0.7};
  double prev = st_control(-1.0, state, kPair, gains, -1.0);
  const double h = 1e-3;
  for (double s = -1.0 + h; s <= 1.0; s += h) {
    const double cur = st_control(s, state, kPair, gains, sign_explicit(s));
    const double modulus =
        (std::fabs(kPair.lambda) * h + gains.alpha * std::sqrt(h)) / std::fabs(kPair.b_star_phi);
    CHECK(std::fabs(cur - prev) <= 1.5 * modulus);
    prev = cur;
  }
}

TEST_CASE("sign_step examples") {
  auto lin = sign_step(1.0, 0.0, 0.5, 0.1);
  CHECK(lin.selection == 1.0);
  CHECK(lin.sigma_next == doctest::Approx(0.95).epsilon(1e-15));

  auto proj = sign_step(0.01, 0.0, 0.5, 0.1);
  CHECK(proj.selection == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(proj.sigma_next == 0.0);

  CHECK_THROWS_AS(sign_step(1.0, 0.0, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("sign_step is chattering-free once on the surface") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> drift_dist(-1.0, 1.0);
  const double gain = 0.5, dt = 0.05;
  for (int trial = 0; trial < 100; ++trial) {
    double sigma = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double drift = gain * drift_dist(rng);  // |drift| <= gain
      const auto res = sign_step(sigma, drift, gain, dt);
      CHECK(std::fabs(res.selection) <= 1.0);
      CHECK(res.sigma_next == 0.0);
      sigma = res.sigma_next;
    }
  }
}

TEST_CASE("sign_step never overshoots the prediction") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double sigma = dist(rng), drift = dist(rng);
    const double gain = std::fabs(dist(rng)) + 1e-3, dt = 0.01 + 0.1 * std::fabs(dist(rng));
    const auto res = sign_step(sigma, drift, gain, dt);
    CHECK(std::fabs(res.selection) <= 1.0);
    CHECK(std::fabs(res.sigma_next) <= std::fabs(sigma + dt * drift) + 1e-15);
  }
}

TEST_CASE("st_integrator_step") {
  const StGains gains{2.2, 2.5};
  CHECK(st_integrator_step(StState{0.0}, 0.0, gains, 0.1).v == 0.0);
  CHECK(st_integrator_step(StState{1.0}, 1.0, gains, 0.1).v == doctest::Approx(0.75));
  CHECK_THROWS_AS(st_integrator_step(StState{0.0}, 1.5, gains, 0.1), std::invalid_argument);
}

TEST_CASE("feedback is invariant under joint rescaling of phi and the gains") {
  // Scaling phi -> c phi scales sigma and B*phi together; keeping the
  // normalized quantities of the gain conditions fixed (K/|B*phi|,
  // beta/|B*phi|, alpha/sqrt(|B*phi|)) the realized control is unchanged.
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> state_dist(-5.0, 5.0);
  std::uniform_real_distribution<double> scale_dist(0.2, 4.0);
  std::bernoulli_distribution flip(0.5);

  const SmcGains smc{2.5};
  const StGains st{2.2, 2.5};
  for (int trial = 0; trial < 100; ++trial) {
    const double sigma = state_dist(rng);
    const double v = state_dist(rng);
    const double c = scale_dist(rng) * (flip(rng) ? -1.0 : 1.0);

    Eigenpair scaled = kPair;
    scaled.b_star_phi *= c;
    const double sigma_c = c * sigma;
    const double ac = std::fabs(c);

    const double s = sign_explicit(sigma);
    const double s_c = sign_explicit(sigma_c);

    const double u_smc = smc_control(sigma, kPair, smc, s);
    const double u_smc_c = smc_control(sigma_c, scaled, SmcGains{ac * smc.k}, s_c);
    CHECK(std::fabs(u_smc - u_smc_c) < 1e-12);

    const double u_st = st_control(sigma, StState{v}, kPair, st, s);
    const double u_st_c = st_control(sigma_c, StState{c * v}, scaled,
                                     StGains{std::sqrt(ac) * st.alpha, ac * st.beta}, s_c);
    CHECK(std::fabs(u_st - u_st_c) < 1e-12);
  }
}
