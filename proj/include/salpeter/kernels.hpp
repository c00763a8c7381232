#pragma once

#include "salpeter/quadrature.hpp"

#include <functional>
#include <variant>
#include <vector>

namespace salpeter {

// Spatial setting of a problem. One dimension integrates momentum profiles
// against the line measure (2 dk on the half line, for even functions);
// three dimensions against the radial measure 4 pi k^2 dk.
enum class Dimension { OneD, ThreeD };

// Half-line weight: Int f~ g~ dmu always runs over [0, inf).
double measure_weight(Dimension dim, double k);

enum class KineticVariant { Salpeter, NonRelativistic };

// Free-particle kinetic symbol: sqrt(m^2 + k^2), or its Schroedinger
// counterpart m + k^2/(2m). Salpeter with m = 0 is the ultrarelativistic
// case |k|.
struct KineticForm {
  KineticVariant variant = KineticVariant::Salpeter;
  double mass = 1.0;
};

double kinetic_value(const KineticForm &kin, double k);

// K(k) - E evaluated as k^2/(sqrt(m^2+k^2) + m) + (m - E), which stays
// accurate down to k = 0 even at the threshold E = m.
double kinetic_minus_energy(const KineticForm &kin, double k, double energy);

// --- separable kernel factors, stored in momentum space ---------------

// f(x) = exp(-|x|/a)  ->  f~(k) = sqrt(2/pi) a/(1 + a^2 k^2)
struct Exponential1D {
  double a = 1.0;
};

// f(r) = exp(-beta r)/r  ->  f~(k) = sqrt(2/pi) / (k^2 + beta^2)
struct Yamaguchi3D {
  double beta = 1.0;
};

// f(r) = exp(-beta r^2 / 2)  ->  f~(k) = beta^(-3/2) exp(-k^2/(2 beta))
struct Gauss3D {
  double beta = 1.0;
};

// Position-space even function, transformed numerically on demand.
struct NumericEven1D {
  std::function<double(double)> f;
  Tolerance tol{};
};

// Position-space radial function, transformed numerically on demand.
struct NumericRadial3D {
  std::function<double(double)> f;
  Tolerance tol{};
};

class MomentumProfile {
public:
  using Variant = std::variant<Exponential1D, Yamaguchi3D, Gauss3D,
                               NumericEven1D, NumericRadial3D>;

  MomentumProfile(Exponential1D p) : v_(p) {}
  MomentumProfile(Yamaguchi3D p) : v_(p) {}
  MomentumProfile(Gauss3D p) : v_(p) {}
  MomentumProfile(NumericEven1D p) : v_(std::move(p)) {}
  MomentumProfile(NumericRadial3D p) : v_(std::move(p)) {}

  double operator()(double k) const;
  Dimension dimension() const;
  bool closed_form() const;
  const Variant &variant() const { return v_; }

private:
  Variant v_;
};

// f~(k) under the transform conventions above.
double profile_eval(const MomentumProfile &p, double k);

// True when both profiles are catalog entries with identical parameters.
// Numeric profiles compare unequal (their functions are opaque).
bool same_catalog_profile(const MomentumProfile &a, const MomentumProfile &b);

// One term -v f(x) g(x') of a separable kernel. v > 0.
struct SeparableTerm {
  SeparableTerm(double coupling, MomentumProfile profile)
      : v(coupling), f(profile), g(std::move(profile)), symmetric(true) {}
  SeparableTerm(double coupling, MomentumProfile f_profile,
                MomentumProfile g_profile)
      : v(coupling), f(std::move(f_profile)), g(std::move(g_profile)),
        symmetric(same_catalog_profile(f, g)) {}

  double v;
  MomentumProfile f;
  MomentumProfile g;
  bool symmetric;
};

struct Problem {
  Dimension dimension = Dimension::OneD;
  KineticForm kinetic{};
  std::vector<SeparableTerm> terms;

  std::size_t rank() const { return terms.size(); }
  bool symmetric() const;
};

// Returns the problem unchanged iff every invariant holds; otherwise
// throws InvalidParameter naming the offending field.
const Problem &validate_problem(const Problem &p);

} // namespace salpeter
