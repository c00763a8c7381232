#pragma once

// Test-only oracles, kept independent of the library's quadrature and
// special-function paths: plain composite Simpson rules and the integral
// representation of K1.

#include <cmath>
#include <functional>

namespace testsupport {

// Composite Simpson on [a, b] with n panels (n made even).
inline double simpson(const std::function<double(double)> &f, double a,
                      double b, int n = 4000) {
  if (n % 2)
    ++n;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i)
    sum += f(a + h * i) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Int_0^inf f via the map k = t/(1-t) and a fine Simpson rule. The
// t = 1 endpoint is treated as zero, which is exact for decaying f.
inline double simpson_semi_infinite(const std::function<double(double)> &f,
                                    int n = 20000) {
  auto mapped = [&f](double t) {
    if (t >= 1.0)
      return 0.0;
    const double u = 1.0 - t;
    return f(t / u) / (u * u);
  };
  return simpson(mapped, 0.0, 1.0, n);
}

// K1(x) = Int_0^inf exp(-x cosh t) cosh t dt, truncated where the
// integrand underflows.
inline double bessel_k1_integral_oracle(double x, int n = 40000) {
  const double t_max = std::acosh(745.0 / x);
  auto integrand = [x](double t) {
    return std::exp(-x * std::cosh(t)) * std::cosh(t);
  };
  return simpson(integrand, 0.0, t_max, n);
}

} // namespace testsupport
