#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "salpeter/errors.hpp"
#include "salpeter/quadrature.hpp"
#include "test_support.hpp"

#include <cmath>
#include <vector>

using namespace salpeter;

namespace {
const double sqrt_2_over_pi = std::sqrt(2.0 / M_PI);

void check_rel(double actual, double expected, double rel) {
  CHECK(std::abs(actual - expected) <=
        rel * std::max(1e-300, std::abs(expected)));
}
} // namespace

TEST_CASE("semi-infinite catalog integrals") {
  auto gauss_moment = [](double k) { return std::exp(-k * k) * k * k; };
  QuadratureResult r = integrate_semi_infinite(gauss_moment);
  check_rel(r.value, std::sqrt(M_PI) / 4.0, 1e-12);
  CHECK(r.error_estimate >= 0.0);
  CHECK(r.evaluations >= 1);

  auto lorentzian_sq = [](double k) {
    return 1.0 / ((1.0 + k * k) * (1.0 + k * k));
  };
  check_rel(integrate_semi_infinite(lorentzian_sq).value, M_PI / 4.0, 1e-12);
}

TEST_CASE("semi-infinite threshold integrand") {
  // Int_0^inf e^{-k^2} (sqrt(1+k^2) + 1) dk; the k^2/(sqrt(1+k^2)-1)
  // form of the same integrand after clearing the removable singularity.
  auto f = [](double k) {
    return std::exp(-k * k) * (std::sqrt(1.0 + k * k) + 1.0);
  };
  const double oracle = testsupport::simpson(f, 0.0, 14.0, 40000);
  QuadratureResult r = integrate_semi_infinite(f);
  check_rel(r.value, oracle, 1e-10);
  check_rel(r.value, 1.95000669894918, 1e-12); // frozen from the oracle
}

TEST_CASE("invalid integrand and non-convergence") {
  auto bad = [](double k) { return k < 5.0 ? 1.0 : std::nan(""); };
  CHECK_THROWS_AS(integrate_semi_infinite(bad), InvalidIntegrand);

  // A clean integrand at an unreachable tolerance exhausts the panel
  // budget; the failure must carry the best estimate found.
  auto gauss_moment = [](double k) { return std::exp(-k * k) * k * k; };
  try {
    integrate_semi_infinite(gauss_moment, Tolerance{1e-300, 1e-300});
    FAIL("expected ConvergenceFailure");
  } catch (const ConvergenceFailure &ex) {
    CHECK(std::abs(ex.best_value() - std::sqrt(M_PI) / 4.0) < 1e-10);
    CHECK(ex.best_error() > 0.0);
  }

  // Marginal k^-2 decay is still inside the supported class.
  auto lorentzian = [](double k) { return 1.0 / (1.0 + k * k); };
  CHECK(std::abs(integrate_semi_infinite(lorentzian).value - M_PI / 2.0) <
        1e-9);
}

TEST_CASE("tolerance contract on the built-in set") {
  std::vector<Integrand> set{
      [](double k) { return std::exp(-k * k) * k * k; },
      [](double k) { return 1.0 / ((1.0 + k * k) * (1.0 + k * k)); },
      [](double k) {
        return std::exp(-k * k) * (std::sqrt(1.0 + k * k) + 1.0);
      }};
  std::vector<double> reference{std::sqrt(M_PI) / 4.0, M_PI / 4.0,
                                1.95000669894918};
  for (std::size_t i = 0; i < set.size(); ++i) {
    Tolerance coarse{1e-6, 1e-5};
    Tolerance fine10{1e-7, 1e-6};
    Tolerance halved{5e-7, 5e-6};
    QuadratureResult rc = integrate_semi_infinite(set[i], coarse);
    QuadratureResult rf = integrate_semi_infinite(set[i], fine10);
    QuadratureResult rh = integrate_semi_infinite(set[i], halved);
    // Refining by 10x keeps the result within the refined error estimate.
    CHECK(std::abs(rf.value - reference[i]) <= rf.error_estimate);
    // Halving the tolerance moves the value at most by the old estimate.
    CHECK(std::abs(rh.value - rc.value) <=
          rc.error_estimate + rh.error_estimate + 1e-15);
  }
}

TEST_CASE("finite-interval adaptive rule") {
  auto f = [](double x) { return std::sin(x); };
  check_rel(integrate_adaptive(f, 0.0, M_PI).value, 2.0, 1e-12);
  CHECK(integrate_adaptive(f, 1.0, 1.0).value == 0.0);
  CHECK_THROWS_AS(integrate_adaptive(f, 0.0, 1.0, Tolerance{-1.0, 1e-10}),
                  InvalidParameter);
}

TEST_CASE("cosine transform of even functions") {
  auto exp_decay = [](double x) { return std::exp(-std::abs(x)); };
  check_rel(cosine_transform_even(exp_decay, 0.0), sqrt_2_over_pi, 1e-10);

  // e^{-|x|/a} -> sqrt(2/pi) a/(1 + a^2 k^2)
  const double a = 2.0;
  auto exp_a = [a](double x) { return std::exp(-std::abs(x) / a); };
  for (double k : {0.1, 0.5, 1.0, 2.0, 5.0})
    check_rel(cosine_transform_even(exp_a, k),
              sqrt_2_over_pi * a / (1.0 + a * a * k * k), 1e-8);

  // The unit Gaussian is its own transform.
  auto gauss = [](double x) { return std::exp(-0.5 * x * x); };
  check_rel(cosine_transform_even(gauss, 1.0), std::exp(-0.5), 1e-10);
}

TEST_CASE("radial sine transform") {
  // e^{-r}/r -> sqrt(2/pi)/(k^2 + 1)
  auto yukawa = [](double r) { return std::exp(-r) / r; };
  check_rel(radial_sine_transform(yukawa, 1.0), sqrt_2_over_pi / 2.0, 1e-10);
  for (double k : {0.1, 0.5, 2.0, 5.0})
    check_rel(radial_sine_transform(yukawa, k),
              sqrt_2_over_pi / (k * k + 1.0), 1e-8);

  // Gaussian: e^{-beta r^2/2} -> beta^{-3/2} e^{-k^2/(2 beta)}
  auto gauss = [](double r) { return std::exp(-0.5 * r * r); };
  check_rel(radial_sine_transform(gauss, 0.0), 1.0, 1e-10);
  check_rel(radial_sine_transform(gauss, 1.0), std::exp(-0.5), 1e-10);
  for (double k : {0.1, 0.5, 2.0, 5.0})
    check_rel(radial_sine_transform(gauss, k), std::exp(-0.5 * k * k), 1e-8);
}

TEST_CASE("Parseval consistency for the catalog forms") {
  // 1D exponential, a in {1, 2}: Int f~^2 dk = Int f^2 dx = a.
  for (double a : {1.0, 2.0}) {
    auto ft2 = [a](double k) {
      const double ft = sqrt_2_over_pi * a / (1.0 + a * a * k * k);
      return 2.0 * ft * ft;
    };
    auto fx2 = [a](double x) { return 2.0 * std::exp(-2.0 * x / a); };
    check_rel(integrate_semi_infinite(ft2).value,
              integrate_semi_infinite(fx2).value, 1e-8);
  }
  // Yamaguchi: 4pi Int f~^2 k^2 dk = 4pi Int f^2 r^2 dr = 2pi/beta.
  const double beta = 1.3;
  auto yt2 = [beta](double k) {
    const double ft = sqrt_2_over_pi / (k * k + beta * beta);
    return 4.0 * M_PI * k * k * ft * ft;
  };
  auto yr2 = [beta](double r) {
    return 4.0 * M_PI * std::exp(-2.0 * beta * r);
  };
  check_rel(integrate_semi_infinite(yt2).value,
            integrate_semi_infinite(yr2).value, 1e-8);
  check_rel(integrate_semi_infinite(yt2).value, 2.0 * M_PI / beta, 1e-8);
  // Gauss: both sides equal pi^{3/2} beta^{-3/2}.
  auto gt2 = [beta](double k) {
    const double ft = std::pow(beta, -1.5) * std::exp(-0.5 * k * k / beta);
    return 4.0 * M_PI * k * k * ft * ft;
  };
  auto gr2 = [beta](double r) {
    return 4.0 * M_PI * r * r * std::exp(-beta * r * r);
  };
  check_rel(integrate_semi_infinite(gt2).value,
            integrate_semi_infinite(gr2).value, 1e-8);
}

TEST_CASE("epsilon acceleration of an alternating series") {
  std::vector<double> sums;
  double s = 0.0;
  for (int j = 0; j < 24; ++j) {
    s += (j % 2 ? -1.0 : 1.0) / (j + 1);
    sums.push_back(s);
  }
  auto [limit, err] = detail::wynn_epsilon(sums);
  CHECK(std::abs(limit - std::log(2.0)) < 1e-12);
  CHECK(err < 1e-10);
}
