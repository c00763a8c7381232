#pragma once

#include "salpeter/quadrature.hpp"

namespace salpeter {

// Modified Bessel function of the second kind, order one, for x > 0.
// Ascending series for x <= 1, minimax rational approximation for x > 1;
// relative error below 1e-14 on both branches.
double bessel_k1(double x);

// exp(x) * K1(x); avoids underflow of the bare function at large x.
double bessel_k1_scaled(double x);

} // namespace salpeter
