#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace salpeter {

// Absolute/relative target for adaptive integration. Both must be finite
// and positive.
struct Tolerance {
  double absolute = 1e-12;
  double relative = 1e-10;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0; // absolute, >= 0
  long evaluations = 0;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod 7/15 on a finite interval [a, b]. Panels are
// bisected worst-error-first; per-panel error is |K15 - G7|.
QuadratureResult integrate_adaptive(const Integrand &f, double a, double b,
                                    const Tolerance &tol = {});

// Integral over [0, inf) for integrands decaying at least as fast as
// k^-2 (or exponentially). The cutoff K is found by doubling until the
// panel [K, 2K] contributes < tol.absolute/10; [0, K] is integrated
// adaptively and the remainder via the algebraic map k = K + t/(1-t).
QuadratureResult integrate_semi_infinite(const Integrand &f,
                                         const Tolerance &tol = {});

// One-dimensional transform of an even function under the convention
//   f~(k) = sqrt(2/pi) * Int_0^inf cos(kx) f(x) dx.
// For k > 0 the integral is split at the zeros of cos(kx) and the
// alternating series is summed with epsilon-algorithm acceleration.
double cosine_transform_even(const Integrand &f, double k,
                             const Tolerance &tol = {});

// Radial transform of a central function in three dimensions,
//   f~(k) = sqrt(2/pi) * (1/k) * Int_0^inf sin(kr) r f(r) dr,
// with the k = 0 limit sqrt(2/pi) * Int_0^inf r^2 f(r) dr taken exactly.
double radial_sine_transform(const Integrand &f, double k,
                             const Tolerance &tol = {});

namespace detail {
// Limit of a sequence of partial sums via Wynn's epsilon algorithm.
// Returns {limit, error_estimate}.
std::pair<double, double> wynn_epsilon(const std::vector<double> &partial_sums);
} // namespace detail

void validate(const Tolerance &tol);

} // namespace salpeter
