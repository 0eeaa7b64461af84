#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hardy/util.hpp"

namespace hardy {

// A point of the open unit disk (|z| < 1 strictly).
struct DiskPoint {
  double re = 0.0;
  double im = 0.0;

  DiskPoint() = default;
  DiskPoint(double re_, double im_) : re(re_), im(im_) {
    if (!(re * re + im * im < 1.0))
      throw std::invalid_argument("DiskPoint: |z| must be < 1");
  }
  static DiskPoint polar(double r, double theta) {
    return DiskPoint(r * std::cos(theta), r * std::sin(theta));
  }
  std::complex<double> value() const { return {re, im}; }
  double abs2() const { return re * re + im * im; }
  double abs() const { return std::sqrt(abs2()); }
  double arg() const { return std::atan2(im, re); }
};

// Aperture parameter of the Stolz angle
//   Gamma_alpha(e^{i theta}) = { z : |e^{i theta} - z| < (1+alpha)(1-|z|) }.
struct StolzParams {
  double alpha = 1.0;

  StolzParams() = default;
  explicit StolzParams(double a) : alpha(a) {
    if (!(a > 0.0)) throw std::invalid_argument("StolzParams: alpha must be > 0");
  }
};

// Circle arc {theta : dist(theta, center_angle) < half_width}.  half_width = pi
// encodes the full circle, half_width = 0 the empty arc; measure is 2*half_width.
struct Arc {
  double center_angle = 0.0;  // [0, 2*pi)
  double half_width = 0.0;    // [0, pi]

  Arc() = default;
  Arc(double center, double hw) {
    if (!(hw >= 0.0 && hw <= kPi + 1e-9))
      throw std::invalid_argument("Arc: half_width must lie in [0, pi]");
    center_angle = wrap_angle(center);
    half_width = std::min(hw, kPi);
  }
  double measure() const { return 2.0 * half_width; }
  bool full_circle() const { return half_width >= kPi; }
  bool empty() const { return half_width <= 0.0; }
  bool contains(double theta) const {
    if (full_circle()) return true;
    return angular_distance(theta, center_angle) < half_width;
  }
};

// Finite union of arcs in canonical merged form: a sorted list of disjoint
// intervals inside [0, 2*pi], with arcs crossing 0 split at the cut.
class ArcSet {
 public:
  using Interval = std::pair<double, double>;

  ArcSet() = default;
  static ArcSet from_arcs(std::span<const Arc> arcs);
  static ArcSet from_arcs(std::initializer_list<Arc> arcs) {
    return from_arcs(std::span<const Arc>(arcs.begin(), arcs.size()));
  }
  static ArcSet full_circle();

  double measure() const;
  bool empty_set() const { return intervals_.empty(); }
  bool contains(double theta) const;        // closed-interval membership
  bool overlaps(const Arc& arc) const;      // positive-measure intersection
  std::vector<Arc> arcs() const;            // canonical (center, half_width) list
  const std::vector<Interval>& intervals() const { return intervals_; }

 private:
  std::vector<Interval> intervals_;
};

// Membership of z in Gamma_alpha(e^{i theta}).  Computed from the same
// half-width as stolz_arc, so the duality z in Gamma_alpha(e^{i theta})
// <=> theta in I_z holds bit for bit.
bool in_stolz_angle(const DiskPoint& z, double theta, StolzParams alpha);

// Half-width of the dual arc I_z = {theta : z in Gamma_alpha(e^{i theta})}:
// theta in I_z iff cos(theta - arg z) > (1 + |z|^2 - (1+alpha)^2 (1-|z|)^2) / (2|z|),
// with the quotient clamped (>= 1 -> empty, <= -1 -> full) and z = 0 -> full.
double stolz_half_width(const DiskPoint& z, StolzParams alpha);

// The dual arc I_z itself, centered at arg z.
Arc stolz_arc(const DiskPoint& z, StolzParams alpha);

// Lebesgue measure of the union of the arcs, in [0, 2*pi].
double arc_union_measure(std::span<const Arc> arcs);
inline double arc_union_measure(std::initializer_list<Arc> arcs) {
  return arc_union_measure(std::span<const Arc>(arcs.begin(), arcs.size()));
}

// True iff I_z does not meet A in positive measure, i.e. z lies outside the
// Stolz star over A at aperture alpha.
bool outside_stolz_star(const DiskPoint& z, const ArcSet& A, StolzParams alpha);

}  // namespace hardy
