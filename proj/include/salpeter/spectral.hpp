#pragma once

#include "salpeter/kernels.hpp"
#include "salpeter/quadrature.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace salpeter {

// The n x n matrix J(E) with entries
//   J_ji = v_i Int w(k) g~_j(k) f~_i(k) / (K(k) - E) dk,
// where w is the half-line measure weight. A bound state sits where
// det(I - J) = 0.
struct SecularMatrix {
  double energy = 0.0;
  Eigen::MatrixXd entries;
  double quad_error = 0.0; // summed per-entry error estimates
};

// Converged bound state. The momentum wavefunction
//   psi~(k) = Sum_i v_i f~_i(k) c_i / (K(k) - E)
// is L2-normalized against the problem's measure, and the phase is fixed
// by the first nonzero coefficient being positive.
class BoundState {
public:
  BoundState(Problem problem, double energy, std::vector<double> coefficients,
             double norm_constant, std::vector<double> all_roots,
             int iterations);

  double energy() const { return energy_; }
  const std::vector<double> &coefficients() const { return coefficients_; }
  double norm_constant() const { return norm_constant_; }
  const std::vector<double> &all_roots() const { return all_roots_; }
  int iterations() const { return iterations_; }
  const Problem &problem() const { return problem_; }

  // psi~(k); assumes the stored coefficients.
  double psi_momentum(double k) const;

  // Same state with the energy displaced; used to probe the sensitivity
  // of the self-consistency residual.
  BoundState with_energy(double energy) const;

private:
  Problem problem_;
  double energy_;
  std::vector<double> coefficients_;
  double norm_constant_;
  std::vector<double> all_roots_;
  int iterations_;
};

// 1/v as a function of E for a single-term problem:
//   1/v = Int w(k) f~(k) g~(k) / (K(k) - E) dk,  E < m strictly.
// Monotone increasing in E.
double reciprocal_coupling(const Problem &p, double energy,
                           const Tolerance &tol = {});

SecularMatrix j_matrix(const Problem &p, double energy,
                       const Tolerance &tol = {});

// det(I - J(E)).
double secular_determinant(const Problem &p, double energy,
                           const Tolerance &tol = {});

// All det(I - J) = 0 roots below threshold, ascending. A rank-n kernel
// supports at most n bound states.
std::vector<double> find_energy_roots(const Problem &p,
                                      const Tolerance &tol = {});

// Ground state: for n = 1 by inverting the monotone reciprocal-coupling
// relation (bracketed bisection plus secant polish); for n > 1 the
// smallest determinant root. `v_scale` multiplies every term coupling.
BoundState solve_ground_energy(const Problem &p,
                               std::optional<double> v_scale = std::nullopt,
                               const Tolerance &tol = {});

// Recomputes c_j = Int w(k) g~_j(k) psi~(k) dk from the stored
// wavefunction and returns the largest deviation from the stored
// coefficients, relative to max_i |c_i|. Fixed-point self-consistency.
double consistency_residual(const BoundState &state, const Tolerance &tol = {});

// Threshold behaviour of a single-term problem as E -> m. In three
// dimensions the limit integral converges and a finite critical coupling
// exists; in one dimension the integrand grows like 1/k^2 (or 1/k when
// m = 0) near the origin, the limit diverges, and every v > 0 binds.
struct CriticalThreshold {
  bool diverges = false;
  double reciprocal_vc = 0.0; // lim_{E->m} of the coupling integral
  double vc = 0.0;            // 1/reciprocal_vc
};

CriticalThreshold critical_threshold(const Problem &p,
                                     const Tolerance &tol = {});

// Closed form of 1/v for the one-term exponential kernel at m = 0:
//   1/v = -a^2 (2 + 2a^2e^2 + 3ae pi + a^3e^3 pi + 4 ln(-ae))
//         / ((1 + a^2 e^2)^2 pi),   a > 0, e < 0.
double ultrarel_exponential_reciprocal_coupling(double a, double e);

// m -> infinity limit of E - m: the lowest eigenvalue of the finite-rank
// kernel operator alone, from the n x n matrix M_ij = v_j Int f~_i g~_j dmu.
double infinite_mass_energy(const Problem &p, const Tolerance &tol = {});

// Brute-force cross-check: lowest eigenvalue of the dense momentum-space
// discretization H = K(k) delta - (quadrature-weighted kernel). Nodes are
// placed by the algebraic map k = 4t/(1-t) with t uniform, which keeps
// slowly decaying profiles accurate without huge matrices.
struct OracleGrid {
  double k_max = 1200.0;
  int n_points = 801; // rounded up to an odd count (Simpson weights)
};

struct OracleResult {
  double energy = 0.0;
  // Asymmetric kernels are not Hermitian on the grid; the rank-n secular
  // solver is used instead and flagged here.
  bool secular_fallback = false;
};

OracleResult oracle_discretized_energy(const Problem &p,
                                       const OracleGrid &grid = {});

} // namespace salpeter
