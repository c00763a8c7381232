#include "salpeter/bessel.hpp"
#include "salpeter/errors.hpp"

#include <cmath>

namespace salpeter {

namespace {

// K1(x) = ln(x/2) I1(x) + 1/x - (x/4) Sum_j [psi(j+1) + psi(j+2)] q^j / (j! (j+1)!)
// with q = x^2/4 and I1(x) = (x/2) Sum_j q^j / (j! (j+1)!). Converges in a
// handful of terms for x <= 1.
double k1_series(double x) {
  constexpr double euler_gamma = 0.57721566490153286060651209008240;
  const double q = 0.25 * x * x;
  double a = 1.0;               // q^j / (j! (j+1)!)
  double psi1 = -euler_gamma;   // psi(j+1)
  double psi2 = 1.0 - euler_gamma; // psi(j+2)
  double i1_sum = a;
  double psi_sum = (psi1 + psi2) * a;
  for (int j = 1; j < 40; ++j) {
    a *= q / (static_cast<double>(j) * (j + 1));
    psi1 += 1.0 / j;
    psi2 += 1.0 / (j + 1);
    const double t = (psi1 + psi2) * a;
    i1_sum += a;
    psi_sum += t;
    if (std::abs(t) + a < 1e-18 * (std::abs(psi_sum) + i1_sum))
      break;
  }
  const double i1 = 0.5 * x * i1_sum;
  return std::log(0.5 * x) * i1 + 1.0 / x - 0.25 * x * psi_sum;
}

// Minimax rational approximation of sqrt(x) e^x K1(x) in 1/x on (1, inf);
// coefficients from Russon and Blair, Chalk River Report AECL-3461, 1969.
constexpr double P3[11] = {
    2.2196792496874548962e+00, 4.4137176114230414036e+01,
    3.4122953486801312910e+02, 1.3319486433183221990e+03,
    2.8590657697910288226e+03, 3.4540675585544584407e+03,
    2.3123742209168871550e+03, 8.1094256146537402173e+02,
    1.3182609918569941308e+02, 7.5584584631176030810e+00,
    6.4257745859173138767e-02};
constexpr double Q3[10] = {
    1.7710478032601086579e+00, 3.4552228452758912848e+01,
    2.5951223655579051357e+02, 9.6929165726802648634e+02,
    1.9448440788918006154e+03, 2.1181000487171943810e+03,
    1.2082692316002348638e+03, 3.3031020088765390854e+02,
    3.6001069306861518855e+01, 1.0};

template <int N> double poly(const double (&c)[N], double y) {
  double r = c[N - 1];
  for (int i = N - 2; i >= 0; --i)
    r = r * y + c[i];
  return r;
}

double k1_scaled_large(double x) {
  const double y = 1.0 / x;
  return poly(P3, y) / poly(Q3, y) / std::sqrt(x);
}

void check_domain(double x) {
  if (!(std::isfinite(x) && x > 0))
    throw InvalidParameter("x", "K1 requires x > 0");
}

} // namespace

double bessel_k1(double x) {
  check_domain(x);
  if (x <= 1.0)
    return k1_series(x);
  return std::exp(-x) * k1_scaled_large(x);
}

double bessel_k1_scaled(double x) {
  check_domain(x);
  if (x <= 1.0)
    return std::exp(x) * k1_series(x);
  return k1_scaled_large(x);
}

} // namespace salpeter
