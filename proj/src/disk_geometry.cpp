#include "hardy/disk_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace hardy {

double stolz_half_width(const DiskPoint& z, StolzParams alpha) {
  double r = z.abs();
  if (r == 0.0) return kPi;  // every Stolz angle contains the origin
  double d = (1.0 + alpha.alpha) * (1.0 - r);
  double q = (1.0 + r * r - d * d) / (2.0 * r);
  if (q <= -1.0) return kPi;
  if (q >= 1.0) return 0.0;
  return std::acos(q);
}

Arc stolz_arc(const DiskPoint& z, StolzParams alpha) {
  double r = z.abs();
  if (r == 0.0) return Arc(0.0, kPi);
  return Arc(z.arg(), stolz_half_width(z, alpha));
}

bool in_stolz_angle(const DiskPoint& z, double theta, StolzParams alpha) {
  double hw = stolz_half_width(z, alpha);
  if (hw >= kPi) return true;
  return angular_distance(theta, z.arg()) < hw;
}

ArcSet ArcSet::full_circle() {
  ArcSet s;
  s.intervals_.push_back({0.0, kTwoPi});
  return s;
}

ArcSet ArcSet::from_arcs(std::span<const Arc> arcs) {
  std::vector<Interval> raw;
  raw.reserve(arcs.size() + 1);
  for (const Arc& a : arcs) {
    if (a.empty()) continue;  // measure-zero arcs are valid inputs, empty unions
    if (a.full_circle()) return full_circle();
    double lo = a.center_angle - a.half_width;
    double hi = a.center_angle + a.half_width;
    if (lo < 0.0) {
      raw.push_back({lo + kTwoPi, kTwoPi});
      raw.push_back({0.0, hi});
    } else if (hi > kTwoPi) {
      raw.push_back({lo, kTwoPi});
      raw.push_back({0.0, hi - kTwoPi});
    } else {
      raw.push_back({lo, hi});
    }
  }
  std::sort(raw.begin(), raw.end());
  ArcSet out;
  for (const Interval& iv : raw) {
    if (!out.intervals_.empty() && iv.first <= out.intervals_.back().second) {
      out.intervals_.back().second = std::max(out.intervals_.back().second, iv.second);
    } else {
      out.intervals_.push_back(iv);
    }
  }
  for (Interval& iv : out.intervals_) iv.second = std::min(iv.second, kTwoPi);
  return out;
}

double ArcSet::measure() const {
  KahanSum s;
  for (const Interval& iv : intervals_) s.add(iv.second - iv.first);
  return std::min(s.value(), kTwoPi);
}

bool ArcSet::contains(double theta) const {
  double t = wrap_angle(theta);
  // first interval with lower endpoint > t; only its predecessor can cover t
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(),
                             Interval{t, kTwoPi + 1.0});
  if (it == intervals_.begin()) return false;
  --it;
  return it->first <= t && t <= it->second;
}

bool ArcSet::overlaps(const Arc& arc) const {
  if (arc.empty() || intervals_.empty()) return false;
  if (arc.full_circle()) return true;
  double lo = arc.center_angle - arc.half_width;
  double hi = arc.center_angle + arc.half_width;
  Interval probes[2];
  int nprobe = 0;
  if (lo < 0.0) {
    probes[nprobe++] = {lo + kTwoPi, kTwoPi};
    probes[nprobe++] = {0.0, hi};
  } else if (hi > kTwoPi) {
    probes[nprobe++] = {lo, kTwoPi};
    probes[nprobe++] = {0.0, hi - kTwoPi};
  } else {
    probes[nprobe++] = {lo, hi};
  }
  for (int i = 0; i < nprobe; ++i) {
    for (const Interval& iv : intervals_) {
      if (std::max(iv.first, probes[i].first) < std::min(iv.second, probes[i].second))
        return true;
    }
  }
  return false;
}

std::vector<Arc> ArcSet::arcs() const {
  std::vector<Arc> out;
  out.reserve(intervals_.size());
  for (const Interval& iv : intervals_) {
    double hw = 0.5 * (iv.second - iv.first);
    out.emplace_back(0.5 * (iv.first + iv.second), std::min(hw, kPi));
  }
  return out;
}

double arc_union_measure(std::span<const Arc> arcs) {
  return ArcSet::from_arcs(arcs).measure();
}

bool outside_stolz_star(const DiskPoint& z, const ArcSet& A, StolzParams alpha) {
  return !A.overlaps(stolz_arc(z, alpha));
}

}  // namespace hardy
