#pragma once

#include <complex>
#include <span>
#include <variant>
#include <vector>

#include "hardy/boundary_calculus.hpp"
#include "hardy/disk_geometry.hpp"

namespace hardy {

// Canonical factors.  Every factor has an exact a.e. boundary modulus:
// inner-type factors (monomial, Blaschke, singular inner) are unimodular,
// OuterFromData(u) has boundary log-modulus u, a constant contributes |c|.
struct Monomial {
  int degree = 1;  // z^degree, degree >= 0
};

struct BlaschkeProduct {
  std::vector<DiskPoint> zeros;  // product of b_a(z) = (|a|/a)(a-z)/(1-conj(a)z), b_0 = z
};

struct OuterFromData {
  BoundaryData log_modulus;  // exp(Herglotz(u)); |f*| = e^{u} a.e.
};

struct SingularInnerAtPoint {
  double zeta_angle = 0.0;  // boundary point e^{i zeta_angle}
  double mass = 1.0;        // exp(-mass (zeta+z)/(zeta-z)), mass > 0
};

struct ConstantFactor {
  std::complex<double> value{1.0, 0.0};  // nonzero
};

using Factor = std::variant<Monomial, BlaschkeProduct, OuterFromData,
                            SingularInnerAtPoint, ConstantFactor>;

// A finite product of factor^power terms.
struct FunctionSpec {
  struct Term {
    Factor factor;
    int power = 1;
  };
  std::vector<Term> terms;

  FunctionSpec& multiply(Factor f, int power = 1);
  static FunctionSpec one() { return {}; }
  static FunctionSpec monomial(int degree, int power = 1);
  static FunctionSpec blaschke(std::vector<DiskPoint> zeros, int power = 1);
  static FunctionSpec outer(BoundaryData log_modulus, int power = 1);
  static FunctionSpec singular_inner(double zeta_angle, double mass, int power = 1);
  static FunctionSpec constant(std::complex<double> c, int power = 1);
};

// Ledger of the transform taking H^p cap L^p(mu) into H^inf cap L^1(mu).
struct TransformRecord {
  FunctionSpec input;
  double exponent = 1.0;
  BoundaryData majorant = BoundaryData::constant(0.0);       // boundary |f*|^p
  BoundaryData h_log_modulus = BoundaryData::constant(0.0);  // log(1 + majorant)
  FunctionSpec f1;      // e^{-H/p} f;  ||f1||_inf <= 1, |f1| <= |f|
  FunctionSpec output;  // g;  ||g||_inf <= 1, |g| <= |f1|^p
  double sup_probe = 0.0;  // max |g| observed on the certification grid
};

std::complex<double> eval(const FunctionSpec& f, const DiskPoint& z);

// Sum of power * log|factor|; -inf exactly at zeros.  Outer factors contribute
// Re Herglotz directly, with no exp/log round-trip.
double log_abs(const FunctionSpec& f, const DiskPoint& z);

// Exact a.e. boundary log-modulus (piecewise data is right-continuous).
double boundary_log_abs(const FunctionSpec& f, double theta);

// H^p norm from the exact boundary modulus: (int e^{p u} dtheta/2pi)^{1/p},
// ess-sup for p = inf.  Exact piecewise integration when all outer data is
// piecewise constant; grid quadrature otherwise.
double hp_norm(const FunctionSpec& f, double p);

// Exact analytic derivative by per-factor formulas and the product rule.
std::complex<double> eval_derivative(const FunctionSpec& f, const DiskPoint& z);

double blaschke_condition_sum(std::span<const DiskPoint> zeros);

// L^p mean of |f| over the circle of radius r by composite Gauss-Legendre
// panels graded toward the boundary-data breakpoints (handles the boundary
// layers of outer factors that an equispaced rule cannot).  Cross-check path
// for hp_norm.
double circle_lp_mean(const FunctionSpec& f, double r, double p);

// Max of |f| over circles of the given radii, angular_size probes per circle.
double sup_abs_probe(const FunctionSpec& f, std::span<const double> radii, int angular_size);

// The constructive transform of a structured f with ||f||_{H^p} < inf:
// m = Poisson data of |f*|^p; f1 = OuterFromData(-(1/p) log(1+m)) * f;
// p <= 1 -> g = f1; otherwise f1 = B e^h splits structurally into its
// inner-type part B and outer/constant part e^h, and
// g = B^{floor(p)+1} * (outer part with boundary log-data scaled by p).
// Contract: ||g||_inf <= 1, |f1| <= min(1, |f|), |g| <= |f1|^p pointwise,
// so mu-summability transfers: sum (1-|z|^2)|g| <= sum (1-|z|^2)|f|^p.
// Only this forward direction is constructed; the reverse needs no machinery
// (a power of a bounded mu-summable function lands in H^p cap L^p(mu)).
TransformRecord lemma2_transform(const FunctionSpec& f, double p);

}  // namespace hardy
