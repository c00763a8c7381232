#include "salpeter/spectral.hpp"
#include "salpeter/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace salpeter {

namespace {

constexpr int scan_points = 400;

double threshold_gap(const Problem &p) {
  return 1e-9 * std::max(1.0, p.kinetic.mass);
}

void require_below_threshold(const Problem &p, double energy) {
  if (!(energy < p.kinetic.mass))
    throw ThresholdViolation("energy " + std::to_string(energy) +
                             " is not below the threshold m = " +
                             std::to_string(p.kinetic.mass));
}

// Int_0^inf w(k) g~_j(k) f~_i(k) / (K(k) - E) dk. Both the
// reciprocal-coupling relation and the J matrix go through here; the two
// root paths must see bit-identical integrands.
QuadratureResult coupling_integral(const Problem &p, std::size_t j,
                                   std::size_t i, double energy,
                                   const Tolerance &tol) {
  const auto &fi = p.terms[i].f;
  const auto &gj = p.terms[j].g;
  auto integrand = [&](double k) {
    return measure_weight(p.dimension, k) * gj(k) * fi(k) /
           kinetic_minus_energy(p.kinetic, k, energy);
  };
  return integrate_semi_infinite(integrand, tol);
}

Problem scaled(const Problem &p, std::optional<double> v_scale) {
  if (!v_scale)
    return p;
  if (!(std::isfinite(*v_scale) && *v_scale > 0))
    throw InvalidParameter("v_scale", "coupling scale must be > 0");
  Problem q = p;
  for (auto &t : q.terms)
    t.v *= *v_scale;
  return q;
}

} // namespace

double reciprocal_coupling(const Problem &p, double energy,
                           const Tolerance &tol) {
  validate_problem(p);
  if (p.rank() != 1)
    throw InvalidParameter("terms", "reciprocal coupling needs a single term");
  require_below_threshold(p, energy);
  return coupling_integral(p, 0, 0, energy, tol).value;
}

SecularMatrix j_matrix(const Problem &p, double energy, const Tolerance &tol) {
  validate_problem(p);
  require_below_threshold(p, energy);
  const auto n = static_cast<Eigen::Index>(p.rank());
  SecularMatrix out;
  out.energy = energy;
  out.entries.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      QuadratureResult q = coupling_integral(
          p, static_cast<std::size_t>(j), static_cast<std::size_t>(i), energy,
          tol);
      out.entries(j, i) = p.terms[static_cast<std::size_t>(i)].v * q.value;
      out.quad_error += p.terms[static_cast<std::size_t>(i)].v *
                        q.error_estimate;
    }
  return out;
}

double secular_determinant(const Problem &p, double energy,
                           const Tolerance &tol) {
  SecularMatrix m = j_matrix(p, energy, tol);
  const auto n = m.entries.rows();
  return (Eigen::MatrixXd::Identity(n, n) - m.entries).determinant();
}

namespace {

// Expands the scan floor until every J entry is so small that no further
// roots can exist (||J||_inf < 1/2 forces det(I - J) > 0).
double scan_floor_gap(const Problem &p, const Tolerance &tol) {
  double gap = 2.0 * std::max(1.0, p.kinetic.mass);
  for (int i = 0; i < 60; ++i) {
    const SecularMatrix m = j_matrix(p, p.kinetic.mass - gap, tol);
    if (m.entries.cwiseAbs().rowwise().sum().maxCoeff() < 0.5)
      return gap;
    gap *= 2.0;
  }
  throw ConvergenceFailure("could not find an energy floor for the root scan",
                           p.kinetic.mass - gap, gap);
}

struct RootPolish {
  double root;
  int iterations;
};

// Bisection to relative width 1e-12 followed by a few safeguarded secant
// steps. `h` must change sign across [lo, hi].
RootPolish bisect_then_secant(const std::function<double(double)> &h,
                              double lo, double hi, double h_lo, double h_hi) {
  int iterations = 0;
  while (hi - lo > 1e-12 * std::max(1.0, std::abs(0.5 * (lo + hi)))) {
    if (++iterations > 200)
      throw ConvergenceFailure("bisection stalled", 0.5 * (lo + hi), hi - lo);
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    const double h_mid = h(mid);
    if ((h_mid < 0) == (h_lo < 0)) {
      lo = mid;
      h_lo = h_mid;
    } else {
      hi = mid;
      h_hi = h_mid;
    }
  }
  double x0 = lo, x1 = hi, f0 = h_lo, f1 = h_hi;
  for (int i = 0; i < 5 && f1 != f0; ++i) {
    const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!std::isfinite(x2) || x2 < lo || x2 > hi)
      break;
    ++iterations;
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = h(x2);
    if (x1 == x0)
      break;
  }
  return {std::abs(f1) <= std::abs(f0) ? x1 : x0, iterations};
}

} // namespace

std::vector<double> find_energy_roots(const Problem &p, const Tolerance &tol) {
  validate_problem(p);
  const double m = p.kinetic.mass;
  const double g_min = threshold_gap(p);
  const double g_max = scan_floor_gap(p, tol);
  auto det = [&](double energy) { return secular_determinant(p, energy, tol); };

  // Log-spaced in the gap m - E, evaluated with E ascending.
  std::vector<double> energies(scan_points), dets(scan_points);
  const double ratio = std::log(g_max / g_min);
  for (int i = 0; i < scan_points; ++i) {
    const double frac = static_cast<double>(i) / (scan_points - 1);
    energies[i] = m - g_max * std::exp(-frac * ratio);
    dets[i] = det(energies[i]);
  }

  std::vector<double> roots;
  for (int i = 0; i + 1 < scan_points; ++i) {
    if (dets[i] == 0.0) {
      roots.push_back(energies[i]);
      continue;
    }
    if ((dets[i] < 0) != (dets[i + 1] < 0)) {
      RootPolish r = bisect_then_secant(det, energies[i], energies[i + 1],
                                        dets[i], dets[i + 1]);
      roots.push_back(r.root);
    }
  }
  if (dets[scan_points - 1] == 0.0)
    roots.push_back(energies[scan_points - 1]);
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

std::vector<double> null_direction(const Eigen::MatrixXd &im_j) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(im_j, Eigen::ComputeFullV);
  const Eigen::VectorXd v = svd.matrixV().col(im_j.cols() - 1);
  return {v.data(), v.data() + v.size()};
}

BoundState make_state(const Problem &p, double energy,
                      std::vector<double> raw_coefficients,
                      std::vector<double> all_roots, int iterations,
                      const Tolerance &tol) {
  // Phase convention: first nonzero coefficient positive.
  for (double c : raw_coefficients) {
    if (c == 0.0)
      continue;
    if (c < 0.0)
      for (double &x : raw_coefficients)
        x = -x;
    break;
  }
  auto psi_raw = [&](double k) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.terms.size(); ++i)
      s += p.terms[i].v * p.terms[i].f(k) * raw_coefficients[i];
    return s / kinetic_minus_energy(p.kinetic, k, energy);
  };
  auto norm_integrand = [&](double k) {
    const double v = psi_raw(k);
    return measure_weight(p.dimension, k) * v * v;
  };
  const double norm2 = integrate_semi_infinite(norm_integrand, tol).value;
  const double scale = 1.0 / std::sqrt(norm2);
  for (double &c : raw_coefficients)
    c *= scale;
  return BoundState(p, energy, std::move(raw_coefficients), scale,
                    std::move(all_roots), iterations);
}

} // namespace

BoundState solve_ground_energy(const Problem &input,
                               std::optional<double> v_scale,
                               const Tolerance &tol) {
  const Problem p = scaled(validate_problem(input), v_scale);
  const double m = p.kinetic.mass;

  if (p.rank() == 1) {
    const double target = 1.0 / p.terms[0].v;
    const double e_hi = m - threshold_gap(p);
    auto h = [&](double energy) {
      return coupling_integral(p, 0, 0, energy, tol).value - target;
    };
    const double h_hi = h(e_hi);
    if (h_hi < 0.0) {
      std::string msg = "coupling v = " + std::to_string(p.terms[0].v) +
                        " supports no bound state";
      if (p.dimension == Dimension::ThreeD && p.terms[0].symmetric) {
        const CriticalThreshold c = critical_threshold(p, tol);
        if (!c.diverges)
          msg += " (critical coupling v_c = " + std::to_string(c.vc) + ")";
      } else {
        msg += " within " + std::to_string(threshold_gap(p)) +
               " of the threshold";
      }
      throw NoBoundState(msg);
    }
    double gap = std::max(1.0, m);
    double h_lo = h(m - gap);
    int expansions = 0;
    while (h_lo >= 0.0) {
      if (++expansions > 80)
        throw ConvergenceFailure("bracket expansion failed", m - gap, gap);
      gap *= 2.0;
      h_lo = h(m - gap);
    }
    RootPolish r = bisect_then_secant(h, m - gap, e_hi, h_lo, h_hi);
    return make_state(p, r.root, {1.0}, {r.root},
                      r.iterations + expansions + 1, tol);
  }

  const std::vector<double> roots = find_energy_roots(p, tol);
  if (roots.empty())
    throw NoBoundState("secular determinant has no root below threshold");
  const double ground = roots.front();
  const SecularMatrix j = j_matrix(p, ground, tol);
  const auto n = j.entries.rows();
  const Eigen::MatrixXd im_j = Eigen::MatrixXd::Identity(n, n) - j.entries;
  return make_state(p, ground, null_direction(im_j), roots, scan_points, tol);
}

BoundState::BoundState(Problem problem, double energy,
                       std::vector<double> coefficients, double norm_constant,
                       std::vector<double> all_roots, int iterations)
    : problem_(std::move(problem)), energy_(energy),
      coefficients_(std::move(coefficients)), norm_constant_(norm_constant),
      all_roots_(std::move(all_roots)), iterations_(iterations) {}

double BoundState::psi_momentum(double k) const {
  double s = 0.0;
  for (std::size_t i = 0; i < problem_.terms.size(); ++i)
    s += problem_.terms[i].v * problem_.terms[i].f(k) * coefficients_[i];
  return s / kinetic_minus_energy(problem_.kinetic, k, energy_);
}

BoundState BoundState::with_energy(double energy) const {
  return BoundState(problem_, energy, coefficients_, norm_constant_,
                    all_roots_, iterations_);
}

double consistency_residual(const BoundState &state, const Tolerance &tol) {
  const Problem &p = state.problem();
  double c_scale = 0.0;
  for (double c : state.coefficients())
    c_scale = std::max(c_scale, std::abs(c));
  double worst = 0.0;
  for (std::size_t j = 0; j < p.terms.size(); ++j) {
    const auto &gj = p.terms[j].g;
    auto integrand = [&](double k) {
      return measure_weight(p.dimension, k) * gj(k) * state.psi_momentum(k);
    };
    const double recomputed = integrate_semi_infinite(integrand, tol).value;
    worst = std::max(worst,
                     std::abs(recomputed - state.coefficients()[j]) / c_scale);
  }
  return worst;
}

CriticalThreshold critical_threshold(const Problem &p, const Tolerance &tol) {
  validate_problem(p);
  if (p.rank() != 1 || !p.terms[0].symmetric)
    throw InvalidParameter("terms",
                           "critical threshold needs one symmetric term");
  CriticalThreshold out;
  if (p.dimension == Dimension::OneD) {
    // Near k = 0 the integrand grows like 2 f~(0)^2 (K(k) - m)^{-1}
    // ~ 1/k^2 (or 1/k when m = 0): not integrable, so the reciprocal
    // coupling is unbounded as E -> m and every positive coupling binds.
    out.diverges = true;
    out.reciprocal_vc = std::numeric_limits<double>::infinity();
    out.vc = 0.0;
    return out;
  }
  const auto &f = p.terms[0].f;
  const auto &g = p.terms[0].g;
  auto integrand = [&](double k) {
    return measure_weight(p.dimension, k) * g(k) * f(k) /
           kinetic_minus_energy(p.kinetic, k, p.kinetic.mass);
  };
  out.reciprocal_vc = integrate_semi_infinite(integrand, tol).value;
  out.vc = 1.0 / out.reciprocal_vc;
  return out;
}

double ultrarel_exponential_reciprocal_coupling(double a, double e) {
  if (!(std::isfinite(a) && a > 0))
    throw InvalidParameter("a", "range must be > 0");
  if (!(std::isfinite(e) && e < 0))
    throw InvalidParameter("e", "binding energy must be < 0");
  const double ae = a * e;
  const double a2e2 = ae * ae;
  const double num =
      2.0 + 2.0 * a2e2 + 3.0 * M_PI * ae + M_PI * ae * a2e2 + 4.0 * std::log(-ae);
  const double den = (1.0 + a2e2) * (1.0 + a2e2) * M_PI;
  return -a * a * num / den;
}

double infinite_mass_energy(const Problem &p, const Tolerance &tol) {
  validate_problem(p);
  const auto n = static_cast<Eigen::Index>(p.rank());
  Eigen::MatrixXd overlap(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto &fi = p.terms[static_cast<std::size_t>(i)].f;
      const auto &gj = p.terms[static_cast<std::size_t>(j)].g;
      auto integrand = [&](double k) {
        return measure_weight(p.dimension, k) * fi(k) * gj(k);
      };
      overlap(i, j) = p.terms[static_cast<std::size_t>(j)].v *
                      integrate_semi_infinite(integrand, tol).value;
    }
  // Spectrum of the rank-n operator plus the zero of its complement;
  // complex pairs (possible for asymmetric kernels) are ignored.
  const Eigen::VectorXcd eigs = Eigen::EigenSolver<Eigen::MatrixXd>(overlap)
                                    .eigenvalues();
  double lowest = 0.0;
  for (Eigen::Index i = 0; i < eigs.size(); ++i)
    if (std::abs(eigs[i].imag()) <=
        1e-9 * std::max(1.0, std::abs(eigs[i].real())))
      lowest = std::min(lowest, -eigs[i].real());
  return lowest;
}

OracleResult oracle_discretized_energy(const Problem &p,
                                       const OracleGrid &grid) {
  validate_problem(p);
  if (grid.n_points < 64)
    throw InvalidParameter("n_points", "oracle grid needs >= 64 points");
  if (!(std::isfinite(grid.k_max) && grid.k_max > 0))
    throw InvalidParameter("k_max", "oracle cutoff must be > 0");

  if (!p.symmetric()) {
    Tolerance tol;
    const auto roots = find_energy_roots(p, tol);
    if (roots.empty())
      throw NoBoundState("secular fallback found no root below threshold");
    return {roots.front(), true};
  }

  const int n = grid.n_points % 2 == 0 ? grid.n_points + 1 : grid.n_points;
  constexpr double map_scale = 4.0;
  const double t_max = grid.k_max / (map_scale + grid.k_max);
  const double h = t_max / (n - 1);

  Eigen::VectorXd k(n), mu(n);
  for (int j = 0; j < n; ++j) {
    const double t = h * j;
    const double u = 1.0 - t;
    k[j] = map_scale * t / u;
    const double simpson =
        (j == 0 || j == n - 1) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    const double jacobian = map_scale / (u * u);
    mu[j] = measure_weight(p.dimension, k[j]) * simpson * (h / 3.0) * jacobian;
  }

  Eigen::MatrixXd hmat = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j)
    hmat(j, j) = kinetic_value(p.kinetic, k[j]);
  const Eigen::VectorXd sqrt_mu = mu.cwiseSqrt();
  for (const auto &term : p.terms) {
    Eigen::VectorXd u(n);
    for (int j = 0; j < n; ++j)
      u[j] = sqrt_mu[j] * term.f(k[j]);
    hmat.noalias() -= term.v * u * u.transpose();
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      hmat, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("dense eigensolver failed", 0.0, 0.0);
  return {solver.eigenvalues()[0], false};
}

} // namespace salpeter
