#include "salpeter/quadrature.hpp"
#include "salpeter/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

namespace salpeter {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (QUADPACK dqk15).
// Even-indexed Kronrod nodes interleave the 7-point Gauss nodes.
constexpr double kron_x[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kron_w[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double gauss_w[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel &o) const { return error < o.error; }
};

Panel gk15(const Integrand &f, double a, double b, long &evaluations) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double kron = 0.0, gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    double fsum;
    if (i == 7) {
      fsum = f(mid);
      ++evaluations;
    } else {
      const double dx = half * kron_x[i];
      fsum = f(mid - dx) + f(mid + dx);
      evaluations += 2;
    }
    if (!std::isfinite(fsum))
      throw InvalidIntegrand("non-finite integrand sample in [" +
                             std::to_string(a) + ", " + std::to_string(b) +
                             "]");
    kron += kron_w[i] * fsum;
    if (i % 2 == 1)
      gauss += gauss_w[i / 2] * fsum;
    else if (i == 7)
      gauss += gauss_w[3] * fsum;
  }
  kron *= half;
  gauss *= half;
  return Panel{a, b, kron, std::abs(kron - gauss)};
}

constexpr int max_panels = 4096;

// Global adaptive loop over an initial panel list.
QuadratureResult adapt(const Integrand &f, std::vector<Panel> initial,
                       const Tolerance &tol, long &evaluations) {
  std::priority_queue<Panel> queue(initial.begin(), initial.end());
  double value = 0.0, error = 0.0;
  for (const Panel &p : initial) {
    value += p.value;
    error += p.error;
  }
  int panels = static_cast<int>(initial.size());
  while (error > std::max(tol.absolute, tol.relative * std::abs(value))) {
    if (panels >= max_panels)
      throw ConvergenceFailure("panel budget exhausted (best value " +
                                   std::to_string(value) + ", error " +
                                   std::to_string(error) + ")",
                               value, error);
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval at machine resolution; its error is irreducible.
      if (worst.error <= std::max(tol.absolute, tol.relative * std::abs(value)))
        break;
      throw ConvergenceFailure("interval collapsed to machine resolution",
                               value, error);
    }
    Panel left = gk15(f, worst.a, mid, evaluations);
    Panel right = gk15(f, mid, worst.b, evaluations);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }
  return {value, error, evaluations};
}

QuadratureResult adapt_interval(const Integrand &f, double a, double b,
                                const Tolerance &tol, long &evaluations) {
  return adapt(f, {gk15(f, a, b, evaluations)}, tol, evaluations);
}

} // namespace

void validate(const Tolerance &tol) {
  if (!(std::isfinite(tol.absolute) && tol.absolute > 0))
    throw InvalidParameter("tolerance.absolute", "must be finite and > 0");
  if (!(std::isfinite(tol.relative) && tol.relative > 0))
    throw InvalidParameter("tolerance.relative", "must be finite and > 0");
}

QuadratureResult integrate_adaptive(const Integrand &f, double a, double b,
                                    const Tolerance &tol) {
  validate(tol);
  if (!(std::isfinite(a) && std::isfinite(b)))
    throw InvalidParameter("interval", "endpoints must be finite");
  if (a == b)
    return {0.0, 0.0, 1};
  long evaluations = 0;
  return adapt_interval(f, a, b, tol, evaluations);
}

QuadratureResult integrate_semi_infinite(const Integrand &f,
                                         const Tolerance &tol) {
  validate(tol);
  long evaluations = 0;

  // Decay scan: push the cutoff out until [K, 2K] is negligible. The
  // scanned panels double as the initial subdivision of [0, K], which
  // keeps the adaptive stage from starting on one huge panel.
  std::vector<Panel> panels{gk15(f, 0.0, 1.0, evaluations)};
  double cutoff = 1.0;
  for (int i = 0; i < 48; ++i) {
    Panel next = gk15(f, cutoff, 2.0 * cutoff, evaluations);
    if (std::abs(next.value) + next.error < 0.1 * tol.absolute)
      break;
    panels.push_back(next);
    cutoff *= 2.0;
  }

  QuadratureResult main = adapt(f, std::move(panels), tol, evaluations);

  // Remainder over [K, inf) via k = K + t/(1-t). The Kronrod nodes are
  // interior, so t = 1 is never sampled.
  const double k0 = cutoff;
  auto tail = [&f, k0](double t) {
    const double u = 1.0 - t;
    if (u <= 0.0)
      return 0.0; // measure-zero endpoint; decaying integrands vanish there
    return f(k0 + t / u) / (u * u);
  };
  QuadratureResult rest = adapt_interval(tail, 0.0, 1.0, tol, evaluations);

  return {main.value + rest.value, main.error_estimate + rest.error_estimate,
          evaluations};
}

namespace detail {

std::pair<double, double>
wynn_epsilon(const std::vector<double> &partial_sums) {
  const std::size_t n = partial_sums.size();
  if (n < 4)
    return {n ? partial_sums.back() : 0.0,
            n >= 2 ? std::abs(partial_sums[n - 1] - partial_sums[n - 2])
                   : std::numeric_limits<double>::infinity()};
  std::vector<double> prev(n + 1, 0.0); // column k-1; starts as epsilon_{-1}
  std::vector<double> cur = partial_sums;
  double best = partial_sums.back();
  double best_err = std::abs(partial_sums[n - 1] - partial_sums[n - 2]);
  for (std::size_t col = 1; col < n; ++col) {
    std::vector<double> next(n - col);
    bool degenerate = false;
    for (std::size_t i = 0; i + col < n; ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0 || !std::isfinite(diff)) {
        // Equal entries in an even column mean exact convergence there.
        if (col % 2 == 1 && diff == 0.0)
          return {cur[i + 1], 0.0};
        degenerate = true;
        break;
      }
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    if (degenerate)
      break;
    prev = std::move(cur);
    cur = std::move(next);
    if (col % 2 == 0 && cur.size() >= 2) {
      const double err = std::abs(cur.back() - cur[cur.size() - 2]);
      if (err <= best_err) {
        best_err = err;
        best = cur.back();
      }
    }
  }
  return {best, best_err};
}

} // namespace detail

namespace {

// Sum Int_0^inf of an oscillatory integrand split at the zeros
// z_0 < z_1 < ... of its trigonometric factor. Terms alternate in sign,
// so plain summation is tried first and Wynn acceleration picks up the
// slowly decaying cases.
double sum_between_zeros(const Integrand &f,
                         const std::function<double(int)> &zero,
                         const Tolerance &tol) {
  constexpr int max_segments = 240;
  const Tolerance seg_tol{0.25 * tol.absolute, tol.relative};
  long evaluations = 0;
  std::vector<double> sums;
  double total = 0.0, quad_error = 0.0;
  int tiny_run = 0;
  for (int j = 0; j < max_segments; ++j) {
    QuadratureResult seg =
        adapt_interval(f, zero(j), zero(j + 1), seg_tol, evaluations);
    total += seg.value;
    quad_error += seg.error_estimate;
    sums.push_back(total);
    const double scale = std::max(tol.absolute, tol.relative * std::abs(total));
    if (std::abs(seg.value) < scale) {
      if (++tiny_run >= 2)
        return total;
    } else {
      tiny_run = 0;
    }
    if (j >= 12 && j % 4 == 0) {
      auto [limit, err] = detail::wynn_epsilon(sums);
      if (std::isfinite(limit) && err < scale)
        return limit;
    }
  }
  auto [limit, err] = detail::wynn_epsilon(sums);
  if (std::isfinite(limit) &&
      err < std::max(tol.absolute, tol.relative * std::abs(limit)) * 10.0)
    return limit;
  throw ConvergenceFailure("oscillatory series did not settle", total,
                           std::abs(err) + quad_error);
}

} // namespace

double cosine_transform_even(const Integrand &f, double k,
                             const Tolerance &tol) {
  validate(tol);
  if (!(std::isfinite(k) && k >= 0))
    throw InvalidParameter("k", "wavenumber must be finite and >= 0");
  const double c = std::sqrt(2.0 / M_PI);
  if (k == 0.0)
    return c * integrate_semi_infinite(f, tol).value;
  auto integrand = [&f, k](double x) { return std::cos(k * x) * f(x); };
  // cos(kx) vanishes at x = (2j+1) pi / (2k).
  auto zero = [k](int j) {
    return j == 0 ? 0.0 : (2.0 * j - 1.0) * M_PI / (2.0 * k);
  };
  return c * sum_between_zeros(integrand, zero, tol);
}

double radial_sine_transform(const Integrand &f, double k,
                             const Tolerance &tol) {
  validate(tol);
  if (!(std::isfinite(k) && k >= 0))
    throw InvalidParameter("k", "wavenumber must be finite and >= 0");
  const double c = std::sqrt(2.0 / M_PI);
  if (k == 0.0) {
    auto integrand = [&f](double r) { return r * r * f(r); };
    return c * integrate_semi_infinite(integrand, tol).value;
  }
  auto integrand = [&f, k](double r) { return std::sin(k * r) * r * f(r); };
  auto zero = [k](int j) { return j * M_PI / k; };
  return c / k * sum_between_zeros(integrand, zero, tol);
}

} // namespace salpeter
