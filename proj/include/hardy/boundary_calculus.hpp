#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "hardy/disk_geometry.hpp"

namespace hardy {

struct FunctionSpec;

// Equispaced angular grid theta_j = 2*pi*j / size, j = 0..size-1.
struct CircleGrid {
  int size = 0;

  explicit CircleGrid(int n) : size(n) {
    if (n < 8) throw std::invalid_argument("CircleGrid: size must be >= 8");
  }
  double node(int j) const { return kTwoPi * static_cast<double>(j) / size; }
};

// Real data on the unit circle.  Piecewise-constant form: one level per arc of
// a pairwise-disjoint family plus a background level elsewhere (evaluation is
// right-continuous at arc endpoints).  Sampled form: values on a CircleGrid,
// evaluated by periodic linear interpolation.
class BoundaryData {
 public:
  struct Piece {
    Arc arc;
    double level = 0.0;
  };

  static BoundaryData piecewise(std::vector<Piece> pieces, double background);
  static BoundaryData constant(double level) { return piecewise({}, level); }
  static BoundaryData sampled(CircleGrid grid, std::vector<double> values);

  bool is_piecewise() const { return sampled_.empty(); }
  double operator()(double theta) const;
  double mean() const;  // integral d(theta)/2pi
  BoundaryData map_levels(const std::function<double(double)>& fn) const;

  const std::vector<Piece>& pieces() const { return pieces_; }
  double background() const { return background_; }
  const std::vector<double>& values() const { return sampled_; }
  int grid_size() const { return grid_size_; }
  // Sorted arc endpoints in [0, 2*pi); empty for sampled or constant data.
  std::vector<double> breakpoints() const;

 private:
  std::vector<Piece> pieces_;
  double background_ = 0.0;
  std::vector<double> sampled_;
  int grid_size_ = 0;
  // half-open [lo, hi) membership intervals per piece, split at the 0 cut
  std::vector<std::pair<std::pair<double, double>, double>> lookup_;
};

struct HerglotzOptions {
  // The sampled path needs its pole resolved by the grid: for |z| > 0.99 it
  // requires grid_size >= near_boundary_factor / (1 - |z|).
  double near_boundary_factor = 8.0;
  double min_boundary_gap = 1e-8;
};

// Integral of the Herglotz kernel (e^{it}+z)/(e^{it}-z) over one arc,
// d(theta)/2pi, via the antiderivative F(t) = t - 2i Log(1 - z e^{-it}).
// Re(1 - z e^{-it}) >= 1-|z| > 0 keeps the principal branch continuous.
std::complex<double> herglotz_arc_closed_form(const Arc& arc, const DiskPoint& z);

// d/dz of the above: antiderivative of 2 e^{it}/(e^{it}-z)^2 is 2i/(e^{it}-z).
std::complex<double> herglotz_arc_closed_form_dz(const Arc& arc, const DiskPoint& z);

// Integral of kernel * u(theta) d(theta)/2pi.  Piecewise-constant data goes
// through the closed form (valid arbitrarily close to the boundary); sampled
// data through the periodic trapezoid rule on its own grid.
std::complex<double> herglotz_transform(const BoundaryData& u, const DiskPoint& z,
                                        const HerglotzOptions& opt = {});

// z-derivative of the transform, same closed-form/quadrature split.
std::complex<double> herglotz_transform_dz(const BoundaryData& u, const DiskPoint& z,
                                           const HerglotzOptions& opt = {});

// Re herglotz_transform: the harmonic extension of u.
double poisson_extension(const BoundaryData& u, const DiskPoint& z,
                         const HerglotzOptions& opt = {});

// Normalized L^p mean of nonnegative samples ((1/n) sum v^p)^{1/p}; max for
// p = inf.  Summation is compensated, in ascending index order.
double lp_mean(std::span<const double> values, double p);

// Mean of log|f| over the circle of radius r, d(theta)/2pi, by the periodic
// trapezoid rule.  The grid grows like 1/(1-r) to keep spectral accuracy near
// the boundary.  Throws if a node hits a zero of f (caller perturbs r).
double log_integral(const FunctionSpec& f, double r, int min_grid = 1 << 12);

}  // namespace hardy
