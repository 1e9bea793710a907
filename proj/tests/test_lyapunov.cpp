#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "burgers/lyapunov.hpp"
#include "burgers/stationary.hpp"
#include "oracles.hpp"

using namespace burgers;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("lyapunov") {
  TEST_CASE("closed-form exponents at A = B") {
    const auto ly = lyapunov_exponents({1, kPi, 2, 2}, 3);
    CHECK(ly.mu[0] == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(ly.mu[1] == doctest::Approx(-5.0).epsilon(1e-13));
    CHECK(ly.mu[2] == doctest::Approx(-10.0).epsilon(1e-13));

    const auto zero = lyapunov_exponents({1, 1, 0, 0}, 3);
    for (std::size_t n = 1; n <= 3; ++n)
      CHECK(zero.mu[n - 1] ==
            doctest::Approx(-kPi * kPi * static_cast<double>(n * n)).epsilon(1e-13));
  }

  TEST_CASE("mixed-branch exponent for A=1, B=-1") {
    // frozen: mu_1 = -(lambda_1 - lambda_0) from the root oracles
    const auto ly = lyapunov_exponents({1, 1, 1, -1}, 1);
    CHECK(ly.mu.front() == doctest::Approx(-8.853729040784458).epsilon(1e-13));
  }

  TEST_CASE("exponents are negative and strictly decreasing") {
    const ProblemSpec specs[] = {{1, 1, -1, 1}, {1, 1, -2, -1}, {1, 1, -3, -2},
                                 {1, 1, 2, 2},  {1, 1, 1, -1}, {0.3, 2.0, 1.0, 0.5}};
    for (const auto& spec : specs) {
      const auto ly = lyapunov_exponents(spec, 5);
      REQUIRE(ly.mu.size() == 5);
      CHECK(ly.mu.front() < 0.0);
      for (std::size_t i = 1; i < ly.mu.size(); ++i) CHECK(ly.mu[i] < ly.mu[i - 1]);
    }
    CHECK_THROWS_AS(lyapunov_exponents({1, 1, 1, -1}, 0), ValidationError);
  }

  TEST_CASE("modal solution approaches the stationary profile") {
    const ProblemSpec spec(1, 1, 1, -1);
    const auto m = make_modal_solution(spec, 1);
    const auto profile = solve_stationary(spec);
    const double T = 40.0 / std::fabs(modal_mu(m));
    for (double x : oracle::linspace(0.0, 1.0, 33))
      CHECK(std::fabs(eval_modal_solution(m, x, T) - eval_stationary(profile, spec, x)) < 1e-9);
  }

  TEST_CASE("alpha = 0 reproduces the stationary solution exactly") {
    const ProblemSpec spec(1, 1, -1, 1);
    const auto m = make_modal_solution(spec, 1, 1.0, 0.0);
    const auto profile = solve_stationary(spec);
    for (double t : {0.0, 0.5, 3.0})
      for (double x : oracle::linspace(0.0, 1.0, 17))
        CHECK(eval_modal_solution(m, x, t) ==
              doctest::Approx(eval_stationary(profile, spec, x)).epsilon(1e-12));
  }

  TEST_CASE("modal solutions hold the boundary values at all times") {
    const ProblemSpec specs[] = {{1, 1, -1, 1}, {1, 1, -2, -1}, {1, 1, 2, 2}, {1, 1, 1, -1}};
    for (const auto& spec : specs) {
      for (std::size_t mode : {1u, 2u}) {
        const auto m = make_modal_solution(spec, mode);
        for (double t : {0.0, 0.1, 1.0, 10.0}) {
          CHECK(eval_modal_solution(m, 0.0, t) == doctest::Approx(spec.A).epsilon(1e-11));
          CHECK(eval_modal_solution(m, spec.l, t) == doctest::Approx(spec.B).epsilon(1e-11));
        }
      }
    }
  }

  TEST_CASE("decay curve slope equals mu_i within 0.5%") {
    const ProblemSpec spec(1, 1, 1, -1);
    for (std::size_t mode : {1u, 2u}) {
      const auto m = make_modal_solution(spec, mode);
      const double mu = modal_mu(m);
      const auto times =
          oracle::linspace(std::log(1e2) / -mu, std::log(1e8) / -mu, 64);
      const auto curve = modal_decay_curve(m, times);
      std::vector<std::pair<double, double>> logd;
      for (const auto& [t, d] : curve) logd.emplace_back(t, std::log(d));
      CHECK(oracle::lsq_slope(logd) == doctest::Approx(mu).epsilon(5e-3));
    }
  }

  TEST_CASE("doubling alpha shifts ln D by ln 2 but not the slope") {
    const ProblemSpec spec(1, 1, 1, -1);
    const auto base = make_modal_solution(spec, 1);
    const auto twice = make_modal_solution(spec, 1, base.c_ground, 2.0 * base.alpha);
    const double mu = modal_mu(base);
    const auto times = oracle::linspace(std::log(1e2) / -mu, std::log(1e7) / -mu, 48);
    const auto c1 = modal_decay_curve(base, times);
    const auto c2 = modal_decay_curve(twice, times);
    std::vector<std::pair<double, double>> l1, l2;
    for (std::size_t i = 0; i < times.size(); ++i) {
      l1.emplace_back(c1[i].first, std::log(c1[i].second));
      l2.emplace_back(c2[i].first, std::log(c2[i].second));
      CHECK(c2[i].second / c1[i].second == doctest::Approx(2.0).epsilon(2e-3));
    }
    CHECK(oracle::lsq_slope(l2) == doctest::Approx(oracle::lsq_slope(l1)).epsilon(1e-3));
  }

  TEST_CASE("pointwise envelope from the maximum principle") {
    const ProblemSpec spec(1, 1, 1, -1);
    const auto m = make_modal_solution(spec, 1);
    const auto profile = solve_stationary(spec);
    const auto xs = oracle::linspace(0.0, 1.0, 41);
    double max_u0 = 0.0;
    for (double x : xs) max_u0 = std::max(max_u0, std::fabs(eval_modal_solution(m, x, 0.0)));
    const double ratio = std::fabs(m.alpha / m.c_ground);
    for (double t : {0.0, 0.05, 0.2, 0.5}) {
      const double decay = std::exp(modal_mu(m) * t);
      for (double x : xs) {
        const double x0v = eval_eigenfunction(m.ground, spec, x);
        const double lhs =
            std::fabs(eval_modal_solution(m, x, t) - eval_stationary(profile, spec, x));
        const double rhs =
            (max_u0 * std::fabs(eval_eigenfunction(m.mode, spec, x) / x0v) +
             2.0 * spec.nu * std::fabs(eval_eigenfunction_derivative(m.mode, spec, x) / x0v)) *
            ratio * decay;
        CHECK(lhs <= rhs * (1.0 + 1e-6) + 1e-12);
      }
    }
  }

  TEST_CASE("initial distance obeys the envelope bound") {
    const ProblemSpec spec(1, 1, -2, -1);
    const auto m = make_modal_solution(spec, 1);
    const auto profile = solve_stationary(spec);
    const auto xs = oracle::linspace(0.0, 1.0, 257);
    double d0 = 0.0, max_u0 = 0.0, max_ratio = 0.0, max_dratio = 0.0;
    for (double x : xs) {
      const double u0 = eval_modal_solution(m, x, 0.0);
      max_u0 = std::max(max_u0, std::fabs(u0));
      d0 = std::max(d0, std::fabs(u0 - eval_stationary(profile, spec, x)));
      const double x0v = eval_eigenfunction(m.ground, spec, x);
      max_ratio = std::max(max_ratio, std::fabs(eval_eigenfunction(m.mode, spec, x) / x0v));
      max_dratio = std::max(
          max_dratio, std::fabs(eval_eigenfunction_derivative(m.mode, spec, x) / x0v));
    }
    const double bound = (max_u0 * max_ratio + 2.0 * spec.nu * max_dratio) *
                         std::fabs(m.alpha / m.c_ground) * (1.0 + 1e-9);
    CHECK(d0 <= bound);
  }

  TEST_CASE("construction rejects amplitudes that can cross zero") {
    const ProblemSpec spec(1, 1, 1, -1);
    const double floor = ground_min_abs(spectrum(spec, 2).front(), spec);
    CHECK_THROWS_AS(make_modal_solution(spec, 1, 1.0, 1.1 * floor), ValidationError);
    CHECK_THROWS_AS(make_modal_solution(spec, 0), ValidationError);
    CHECK_THROWS_AS(make_modal_solution(spec, 1, 0.0, 0.0), ValidationError);
    const auto m = make_modal_solution(spec, 1);
    CHECK_THROWS_AS(eval_modal_solution(m, 0.5, -1.0), ValidationError);

    // a hand-broken amplitude makes the log argument cross zero; evaluating
    // on that crossing trips the singularity guard
    auto broken = make_modal_solution(spec, 1);
    broken.alpha = -1.2 * broken.c_ground;
    auto denom = [&](double x) {
      return broken.c_ground * eval_eigenfunction(broken.ground, spec, x) +
             broken.alpha * eval_eigenfunction(broken.mode, spec, x);
    };
    const double x_pole = oracle::bisect(denom, 0.0, 0.5);
    CHECK_THROWS_AS(eval_modal_solution(broken, x_pole, 0.0), NumericalError);
  }

  TEST_CASE("numeric Cole-Hopf transform") {
    SUBCASE("log-linear samples are differentiated exactly") {
      const double k = 0.7, nu = 1.3;
      std::vector<double> phi(33);
      for (int j = 0; j < 33; ++j) phi[j] = std::exp(-k * j * 0.05);
      for (double u : cole_hopf_numeric(phi, 0.05, nu))
        CHECK(u == doctest::Approx(2.0 * nu * k).epsilon(1e-11));
    }
    SUBCASE("constant phi maps to zero velocity") {
      const std::vector<double> phi(17, 3.5);
      for (double u : cole_hopf_numeric(phi, 0.1, 1.0)) CHECK(u == 0.0);
    }
    SUBCASE("sign conventions survive negative phi") {
      const double k = 0.7;
      std::vector<double> phi(33);
      for (int j = 0; j < 33; ++j) phi[j] = -std::exp(-k * j * 0.05);
      for (double u : cole_hopf_numeric(phi, 0.05, 1.0))
        CHECK(u == doctest::Approx(2.0 * k).epsilon(1e-11));
    }
    SUBCASE("second-order convergence on a stationary heat profile") {
      // phi^S for the case (e) spec; u = -2 nu (ln phi)' must match the
      // tanh formula with an O(h^2) defect, Richardson ratio near 4
      const ProblemSpec spec(1, 1, 1, -1);
      const auto p = solve_stationary(spec);
      auto max_err = [&](int n) {
        std::vector<double> phi(n + 1);
        const double h = spec.l / n;
        for (int j = 0; j <= n; ++j) phi[j] = std::cosh(p.k0 * (j * h - p.x0));
        const auto u = cole_hopf_numeric(phi, h, spec.nu);
        double err = 0.0;
        for (int j = 0; j <= n; ++j)
          err = std::max(err,
                         std::fabs(u[j] - eval_stationary(p, spec, std::min(spec.l, j * h))));
        return err;
      };
      const double e1 = max_err(128), e2 = max_err(256);
      CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.2));
    }
    SUBCASE("sign changes and zeros are rejected") {
      CHECK_THROWS_AS(cole_hopf_numeric(std::vector<double>{1.0, -1.0, 1.0}, 0.1, 1.0),
                      NumericalError);
      CHECK_THROWS_AS(cole_hopf_numeric(std::vector<double>{1.0, 0.0, 1.0}, 0.1, 1.0),
                      NumericalError);
      CHECK_THROWS_AS(cole_hopf_numeric(std::vector<double>{1.0, 1.0}, 0.1, 1.0),
                      ValidationError);
    }
  }
}
