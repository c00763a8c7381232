#pragma once

#include "salpeter/quadrature.hpp"

#include <Eigen/Dense>

namespace salpeter {

// N identical bosons with pairwise non-local Gauss attraction. The bound
// curves depend on (N, v) through u = (N-1) v and lambda = (N-1)/N.
struct BosonSystem {
  int n_particles = 2;
  double v = 1.0;
  double mass = 1.0; // canonical units for the bounds are m = beta = 1
  double beta = 1.0;

  double u() const { return (n_particles - 1) * v; }
  double lambda() const {
    return static_cast<double>(n_particles - 1) / n_particles;
  }
};

const BosonSystem &validate_boson_system(const BosonSystem &sys);

// g(x) = Int e^{-t^2} sqrt(2x + t^2) t^2 dt = x e^x K1(x), with g(0) = 1.
double g_of_x(double x);

// Same quantity from the defining integral; debug/cross-check path.
double g_of_x_quadrature(double x, const Tolerance &tol = {});

// Per-particle lower bound E_L/N: ground energy of the one-body problem
// with the pair kernel at effective coupling (N-1)v/2. When that problem
// stops binding (u below twice the one-body critical coupling) the bound
// degrades to the rest mass and is flagged unbound.
struct LowerBound {
  double energy_pp = 0.0;
  bool bound = true;
};

LowerBound lower_bound_per_particle(const BosonSystem &sys,
                                    const Tolerance &tol = {});

// Canonical-units (m = beta = 1) lower-bound curve f_L(u).
LowerBound lower_bound_curve(double u, const Tolerance &tol = {});

// The u at which f_L crosses zero; canonical units. Closed reduction
// 1/u_c = 2 pi Int_0^inf e^{-k^2} k^2 / sqrt(1 + k^2) dk.
double critical_u(const Tolerance &tol = {});

// Variational objective whose minimum over s > 0 is the per-particle
// upper bound f_U(u, lambda) in canonical units:
//   sqrt(2/pi) [ g(s^2)/s - 8 u pi^2 (2 lambda s^2)^{3/2} / (1 + 4 lambda s^2)^3 ].
double upper_bound_objective(double s, double u, double lambda);

struct UpperBound {
  double energy_pp = 0.0;
  double s_star = 0.0;
};

// Minimizes the objective by geometric bracketing from s = 1, golden
// section, and a final parabolic fit. Canonical units.
UpperBound upper_bound_curve(double u, double lambda);

UpperBound upper_bound_per_particle(const BosonSystem &sys);

// One point of the bounds table.
struct BoundsPoint {
  double u = 0.0;
  double lambda = 0.5;
  double lower_pp = 0.0;
  bool lower_bound_exists = true;
  double upper_pp = 0.0;
  double s_star = 0.0;
};

BoundsPoint bounds_point(double u, double lambda, const Tolerance &tol = {});

// Orthogonal Jacobi-coordinate matrix: first row all 1/sqrt(N); row k >= 2
// has 1/sqrt(k(k-1)) in the first k-1 entries, -sqrt((k-1)/k) on the
// diagonal, zeros after. Provided for verification; the bounds never need
// it at solve time.
Eigen::MatrixXd jacobi_matrix(int n_particles);

} // namespace salpeter
