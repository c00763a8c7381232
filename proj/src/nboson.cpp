#include "salpeter/nboson.hpp"
#include "salpeter/bessel.hpp"
#include "salpeter/errors.hpp"
#include "salpeter/spectral.hpp"

#include <cmath>

namespace salpeter {

const BosonSystem &validate_boson_system(const BosonSystem &sys) {
  if (sys.n_particles < 2)
    throw InvalidParameter("n_particles", "need at least two bosons");
  if (!(std::isfinite(sys.v) && sys.v > 0))
    throw InvalidParameter("v", "pair coupling must be > 0");
  if (!(std::isfinite(sys.mass) && sys.mass >= 0))
    throw InvalidParameter("mass", "must be finite and >= 0");
  if (!(std::isfinite(sys.beta) && sys.beta > 0))
    throw InvalidParameter("beta", "Gauss width must be > 0");
  return sys;
}

double g_of_x(double x) {
  if (!(std::isfinite(x) && x >= 0))
    throw InvalidParameter("x", "g is defined for x >= 0");
  if (x == 0.0)
    return 1.0; // Int e^{-t^2} |t| t^2 dt and the x K1(x) -> 1 limit agree
  return x * bessel_k1_scaled(x);
}

double g_of_x_quadrature(double x, const Tolerance &tol) {
  if (!(std::isfinite(x) && x >= 0))
    throw InvalidParameter("x", "g is defined for x >= 0");
  auto integrand = [x](double t) {
    return std::exp(-t * t) * std::sqrt(2.0 * x + t * t) * t * t;
  };
  // Even integrand: twice the half-line integral.
  return 2.0 * integrate_semi_infinite(integrand, tol).value;
}

namespace {

Problem pair_problem(const BosonSystem &sys) {
  Problem p;
  p.dimension = Dimension::ThreeD;
  p.kinetic = {KineticVariant::Salpeter, sys.mass};
  const double effective = 0.5 * (sys.n_particles - 1) * sys.v;
  p.terms.emplace_back(effective, MomentumProfile(Gauss3D{sys.beta}));
  return p;
}

} // namespace

LowerBound lower_bound_per_particle(const BosonSystem &sys,
                                    const Tolerance &tol) {
  validate_boson_system(sys);
  const Problem one_body = pair_problem(sys);
  const CriticalThreshold threshold = critical_threshold(one_body, tol);
  if (one_body.terms[0].v <= threshold.vc)
    return {sys.mass, false};
  return {solve_ground_energy(one_body, std::nullopt, tol).energy(), true};
}

LowerBound lower_bound_curve(double u, const Tolerance &tol) {
  if (!(std::isfinite(u) && u > 0))
    throw InvalidParameter("u", "scaled coupling must be > 0");
  return lower_bound_per_particle({2, u, 1.0, 1.0}, tol);
}

double critical_u(const Tolerance &tol) {
  auto integrand = [](double k) {
    return std::exp(-k * k) * k * k / std::sqrt(1.0 + k * k);
  };
  return 1.0 / (2.0 * M_PI * integrate_semi_infinite(integrand, tol).value);
}

double upper_bound_objective(double s, double u, double lambda) {
  if (!(std::isfinite(s) && s > 0))
    throw InvalidParameter("s", "variational scale must be > 0");
  if (!(std::isfinite(u) && u > 0))
    throw InvalidParameter("u", "scaled coupling must be > 0");
  if (!(lambda >= 0.5 && lambda <= 1.0))
    throw InvalidParameter("lambda", "(N-1)/N lies in [1/2, 1]");
  const double ls2 = lambda * s * s;
  const double attract =
      8.0 * u * M_PI * M_PI * std::pow(2.0 * ls2, 1.5) /
      std::pow(1.0 + 4.0 * ls2, 3.0);
  return std::sqrt(2.0 / M_PI) * (g_of_x(s * s) / s - attract);
}

UpperBound upper_bound_curve(double u, double lambda) {
  auto f = [u, lambda](double s) { return upper_bound_objective(s, u, lambda); };

  // Geometric expansion from s = 1 until the middle point is lowest.
  double a = 0.5, b = 1.0, c = 2.0;
  double fa = f(a), fb = f(b), fc = f(c);
  for (int guard = 0; !(fb < fa && fb < fc); ++guard) {
    if (guard > 120)
      throw MinimizationFailure(
          "no interior bracket for the variational scale (u = " +
          std::to_string(u) + ", lambda = " + std::to_string(lambda) + ")");
    if (fa <= fb) {
      c = b; fc = fb;
      b = a; fb = fa;
      a *= 0.5; fa = f(a);
    } else {
      a = b; fa = fb;
      b = c; fb = fc;
      c *= 2.0; fc = f(c);
    }
  }

  // Golden section to width 1e-10, then one parabolic refinement.
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = c - inv_phi * (c - a);
  double x2 = a + inv_phi * (c - a);
  double f1 = f(x1), f2 = f(x2);
  while (c - a > 1e-10 * std::max(1.0, a)) {
    if (f1 < f2) {
      c = x2; x2 = x1; f2 = f1;
      x1 = c - inv_phi * (c - a);
      f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (c - a);
      f2 = f(x2);
    }
  }
  double s_best = f1 < f2 ? x1 : x2;
  double f_best = std::min(f1, f2);

  const double p_num = (s_best - a) * (s_best - a) * (f_best - fc) -
                       (s_best - c) * (s_best - c) * (f_best - fa);
  const double p_den =
      (s_best - a) * (f_best - fc) - (s_best - c) * (f_best - fa);
  if (p_den != 0.0) {
    const double s_fit = s_best - 0.5 * p_num / p_den;
    if (std::isfinite(s_fit) && s_fit > a && s_fit < c) {
      const double f_fit = f(s_fit);
      if (f_fit < f_best) {
        s_best = s_fit;
        f_best = f_fit;
      }
    }
  }
  return {f_best, s_best};
}

UpperBound upper_bound_per_particle(const BosonSystem &sys) {
  validate_boson_system(sys);
  if (sys.mass != 1.0 || sys.beta != 1.0)
    throw InvalidParameter(
        "mass/beta", "the variational bound is pinned to m = beta = 1");
  return upper_bound_curve(sys.u(), sys.lambda());
}

BoundsPoint bounds_point(double u, double lambda, const Tolerance &tol) {
  BoundsPoint out;
  out.u = u;
  out.lambda = lambda;
  const LowerBound lower = lower_bound_curve(u, tol);
  out.lower_pp = lower.energy_pp;
  out.lower_bound_exists = lower.bound;
  const UpperBound upper = upper_bound_curve(u, lambda);
  out.upper_pp = upper.energy_pp;
  out.s_star = upper.s_star;
  return out;
}

Eigen::MatrixXd jacobi_matrix(int n_particles) {
  if (n_particles < 2)
    throw InvalidParameter("n_particles", "Jacobi matrix needs N >= 2");
  const int n = n_particles;
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    b(0, i) = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 2; k <= n; ++k) {
    for (int i = 0; i < k - 1; ++i)
      b(k - 1, i) = 1.0 / std::sqrt(static_cast<double>(k) * (k - 1));
    b(k - 1, k - 1) = -std::sqrt((k - 1.0) / k);
  }
  return b;
}

} // namespace salpeter
