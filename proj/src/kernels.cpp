#include "salpeter/kernels.hpp"
#include "salpeter/errors.hpp"

#include <cmath>
#include <string>

namespace salpeter {

double measure_weight(Dimension dim, double k) {
  return dim == Dimension::OneD ? 2.0 : 4.0 * M_PI * k * k;
}

double kinetic_value(const KineticForm &kin, double k) {
  if (kin.variant == KineticVariant::Salpeter)
    return std::hypot(kin.mass, k);
  return kin.mass + 0.5 * k * k / kin.mass;
}

double kinetic_minus_energy(const KineticForm &kin, double k, double energy) {
  const double m = kin.mass;
  if (kin.variant == KineticVariant::Salpeter)
    return k * k / (std::hypot(m, k) + m) + (m - energy);
  return 0.5 * k * k / m + (m - energy);
}

double MomentumProfile::operator()(double k) const {
  if (!(std::isfinite(k) && k >= 0))
    throw InvalidParameter("k", "wavenumber must be finite and >= 0");
  const double c = std::sqrt(2.0 / M_PI);
  return std::visit(
      [k, c](const auto &p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Exponential1D>)
          return c * p.a / (1.0 + p.a * p.a * k * k);
        else if constexpr (std::is_same_v<T, Yamaguchi3D>)
          return c / (k * k + p.beta * p.beta);
        else if constexpr (std::is_same_v<T, Gauss3D>)
          return std::pow(p.beta, -1.5) * std::exp(-0.5 * k * k / p.beta);
        else if constexpr (std::is_same_v<T, NumericEven1D>)
          return cosine_transform_even(p.f, k, p.tol);
        else
          return radial_sine_transform(p.f, k, p.tol);
      },
      v_);
}

Dimension MomentumProfile::dimension() const {
  return std::visit(
      [](const auto &p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Exponential1D> ||
                      std::is_same_v<T, NumericEven1D>)
          return Dimension::OneD;
        else
          return Dimension::ThreeD;
      },
      v_);
}

bool MomentumProfile::closed_form() const {
  return !std::holds_alternative<NumericEven1D>(v_) &&
         !std::holds_alternative<NumericRadial3D>(v_);
}

double profile_eval(const MomentumProfile &p, double k) { return p(k); }

bool same_catalog_profile(const MomentumProfile &a, const MomentumProfile &b) {
  if (const auto *x = std::get_if<Exponential1D>(&a.variant()))
    if (const auto *y = std::get_if<Exponential1D>(&b.variant()))
      return x->a == y->a;
  if (const auto *x = std::get_if<Yamaguchi3D>(&a.variant()))
    if (const auto *y = std::get_if<Yamaguchi3D>(&b.variant()))
      return x->beta == y->beta;
  if (const auto *x = std::get_if<Gauss3D>(&a.variant()))
    if (const auto *y = std::get_if<Gauss3D>(&b.variant()))
      return x->beta == y->beta;
  return false;
}

bool Problem::symmetric() const {
  for (const auto &t : terms)
    if (!t.symmetric)
      return false;
  return true;
}

namespace {

void validate_profile(const MomentumProfile &p, const char *which) {
  const std::string name(which);
  std::visit(
      [&name](const auto &v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Exponential1D>) {
          if (!(std::isfinite(v.a) && v.a > 0))
            throw InvalidParameter(name + ".a", "range must be > 0");
        } else if constexpr (std::is_same_v<T, Yamaguchi3D> ||
                             std::is_same_v<T, Gauss3D>) {
          if (!(std::isfinite(v.beta) && v.beta > 0))
            throw InvalidParameter(name + ".beta", "width must be > 0");
        } else {
          if (!v.f)
            throw InvalidParameter(name + ".f", "missing position function");
          validate(v.tol);
        }
      },
      p.variant());
}

} // namespace

const Problem &validate_problem(const Problem &p) {
  const double m = p.kinetic.mass;
  if (!(std::isfinite(m) && m >= 0))
    throw InvalidParameter("mass", "must be finite and >= 0");
  if (p.kinetic.variant == KineticVariant::NonRelativistic && m == 0)
    throw InvalidParameter("mass",
                           "nonrelativistic kinetic k^2/(2m) needs m > 0");
  if (p.terms.empty())
    throw InvalidParameter("terms", "at least one separable term required");
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    const auto &t = p.terms[i];
    const std::string at = "terms[" + std::to_string(i) + "]";
    if (!(std::isfinite(t.v) && t.v > 0))
      throw InvalidParameter("v", at + ": coupling must be > 0");
    validate_profile(t.f, (at + ".f").c_str());
    validate_profile(t.g, (at + ".g").c_str());
    if (t.f.dimension() != p.dimension || t.g.dimension() != p.dimension)
      throw InvalidParameter("dimension",
                             at + ": profile dimension differs from problem");
  }
  return p;
}

} // namespace salpeter
