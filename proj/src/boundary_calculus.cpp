#include "hardy/boundary_calculus.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/function_model.hpp"

namespace hardy {

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(order, 0.0);
  weights.assign(order, 0.0);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    // Chebyshev initial guess, then Newton on P_order(x) = 0
    double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[order - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[order - 1 - i] = w;
  }
}

BoundaryData BoundaryData::piecewise(std::vector<Piece> pieces, double background) {
  BoundaryData d;
  d.background_ = background;
  d.pieces_ = std::move(pieces);
  for (std::size_t i = 0; i < d.pieces_.size(); ++i) {
    const Arc& a = d.pieces_[i].arc;
    ArcSet ai = ArcSet::from_arcs({&a, 1});
    for (std::size_t j = i + 1; j < d.pieces_.size(); ++j) {
      if (ai.overlaps(d.pieces_[j].arc))
        throw std::invalid_argument("BoundaryData: piecewise arcs must be disjoint");
    }
    double lo = a.center_angle - a.half_width;
    double hi = a.center_angle + a.half_width;
    if (a.full_circle()) {
      d.lookup_.push_back({{0.0, kTwoPi}, d.pieces_[i].level});
    } else if (lo < 0.0) {
      d.lookup_.push_back({{lo + kTwoPi, kTwoPi}, d.pieces_[i].level});
      d.lookup_.push_back({{0.0, hi}, d.pieces_[i].level});
    } else if (hi > kTwoPi) {
      d.lookup_.push_back({{lo, kTwoPi}, d.pieces_[i].level});
      d.lookup_.push_back({{0.0, hi - kTwoPi}, d.pieces_[i].level});
    } else {
      d.lookup_.push_back({{lo, hi}, d.pieces_[i].level});
    }
  }
  std::sort(d.lookup_.begin(), d.lookup_.end());
  return d;
}

BoundaryData BoundaryData::sampled(CircleGrid grid, std::vector<double> values) {
  if (static_cast<int>(values.size()) != grid.size)
    throw std::invalid_argument("BoundaryData: values/grid size mismatch");
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("BoundaryData: non-finite sample");
  BoundaryData d;
  d.sampled_ = std::move(values);
  d.grid_size_ = grid.size;
  return d;
}

double BoundaryData::operator()(double theta) const {
  double t = wrap_angle(theta);
  if (!is_piecewise()) {
    double x = t / kTwoPi * grid_size_;
    int j = static_cast<int>(x);
    double frac = x - j;
    int j1 = (j + 1) % grid_size_;
    return (1.0 - frac) * sampled_[j % grid_size_] + frac * sampled_[j1];
  }
  // half-open [lo, hi) membership keeps evaluation right-continuous
  for (const auto& seg : lookup_) {
    if (seg.first.first <= t && t < seg.first.second) return seg.second;
  }
  return background_;
}

double BoundaryData::mean() const {
  if (!is_piecewise()) {
    KahanSum s;
    for (double v : sampled_) s.add(v);
    return s.value() / grid_size_;
  }
  KahanSum s;
  s.add(background_);
  for (const Piece& p : pieces_) s.add((p.level - background_) * p.arc.measure() / kTwoPi);
  return s.value();
}

BoundaryData BoundaryData::map_levels(const std::function<double(double)>& fn) const {
  if (!is_piecewise()) {
    std::vector<double> v(sampled_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(sampled_[i]);
    return sampled(CircleGrid(grid_size_), std::move(v));
  }
  std::vector<Piece> p = pieces_;
  for (Piece& pc : p) pc.level = fn(pc.level);
  return piecewise(std::move(p), fn(background_));
}

std::vector<double> BoundaryData::breakpoints() const {
  std::vector<double> b;
  for (const Piece& p : pieces_) {
    if (p.arc.full_circle() || p.arc.empty()) continue;
    b.push_back(wrap_angle(p.arc.center_angle - p.arc.half_width));
    b.push_back(wrap_angle(p.arc.center_angle + p.arc.half_width));
  }
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

std::complex<double> herglotz_arc_closed_form(const Arc& arc, const DiskPoint& z) {
  const std::complex<double> zc = z.value();
  auto F = [&zc](double t) {
    std::complex<double> w = 1.0 - zc * std::exp(std::complex<double>(0.0, -t));
    return std::complex<double>(t, 0.0) - std::complex<double>(0.0, 2.0) * std::log(w);
  };
  double t1 = arc.center_angle - arc.half_width;
  double t2 = arc.center_angle + arc.half_width;
  return (F(t2) - F(t1)) / kTwoPi;
}

std::complex<double> herglotz_arc_closed_form_dz(const Arc& arc, const DiskPoint& z) {
  const std::complex<double> zc = z.value();
  auto G = [&zc](double t) {
    std::complex<double> e = std::exp(std::complex<double>(0.0, t));
    return std::complex<double>(0.0, 2.0) / (e - zc);
  };
  double t1 = arc.center_angle - arc.half_width;
  double t2 = arc.center_angle + arc.half_width;
  return (G(t2) - G(t1)) / kTwoPi;
}

namespace {

void check_sampled_resolution(const BoundaryData& u, const DiskPoint& z,
                              const HerglotzOptions& opt) {
  double gap = 1.0 - z.abs();
  if (gap < opt.min_boundary_gap)
    throw std::domain_error("herglotz_transform: z too close to the boundary for sampled data");
  if (z.abs() > 0.99 && u.grid_size() < opt.near_boundary_factor / gap)
    throw std::domain_error("herglotz_transform: sampled grid too coarse near the boundary");
}

}  // namespace

std::complex<double> herglotz_transform(const BoundaryData& u, const DiskPoint& z,
                                        const HerglotzOptions& opt) {
  if (u.is_piecewise()) {
    // kernel has mean 1, so the background contributes itself
    std::complex<double> acc(u.background(), 0.0);
    for (const BoundaryData::Piece& p : u.pieces())
      acc += (p.level - u.background()) * herglotz_arc_closed_form(p.arc, z);
    return acc;
  }
  check_sampled_resolution(u, z, opt);
  const std::complex<double> zc = z.value();
  const int n = u.grid_size();
  KahanSum re, im;
  for (int j = 0; j < n; ++j) {
    std::complex<double> e = std::exp(std::complex<double>(0.0, kTwoPi * j / n));
    std::complex<double> k = (e + zc) / (e - zc) * u.values()[j];
    re.add(k.real());
    im.add(k.imag());
  }
  return {re.value() / n, im.value() / n};
}

std::complex<double> herglotz_transform_dz(const BoundaryData& u, const DiskPoint& z,
                                           const HerglotzOptions& opt) {
  if (u.is_piecewise()) {
    // the full-circle integral of the differentiated kernel vanishes
    std::complex<double> acc(0.0, 0.0);
    for (const BoundaryData::Piece& p : u.pieces())
      acc += (p.level - u.background()) * herglotz_arc_closed_form_dz(p.arc, z);
    return acc;
  }
  check_sampled_resolution(u, z, opt);
  const std::complex<double> zc = z.value();
  const int n = u.grid_size();
  KahanSum re, im;
  for (int j = 0; j < n; ++j) {
    std::complex<double> e = std::exp(std::complex<double>(0.0, kTwoPi * j / n));
    std::complex<double> d = e - zc;
    std::complex<double> k = 2.0 * e / (d * d) * u.values()[j];
    re.add(k.real());
    im.add(k.imag());
  }
  return {re.value() / n, im.value() / n};
}

double poisson_extension(const BoundaryData& u, const DiskPoint& z,
                         const HerglotzOptions& opt) {
  return herglotz_transform(u, z, opt).real();
}

double lp_mean(std::span<const double> values, double p) {
  if (values.empty()) throw std::invalid_argument("lp_mean: empty sample");
  if (!(p > 0.0)) throw std::invalid_argument("lp_mean: p must be positive");
  if (std::isinf(p)) return *std::max_element(values.begin(), values.end());
  KahanSum s;
  for (double v : values) s.add(std::pow(v, p));
  return std::pow(s.value() / values.size(), 1.0 / p);
}

double log_integral(const FunctionSpec& f, double r, int min_grid) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("log_integral: r must be in (0,1)");
  double need = 24.0 / (1.0 - r);  // aliasing error ~ r^n = e^{-n(1-r)}
  if (need > double(1 << 24))
    throw std::invalid_argument("log_integral: radius too close to the boundary");
  int n = std::max(min_grid, 8);
  while (n < need) n *= 2;
  KahanSum s;
  for (int j = 0; j < n; ++j) {
    double v = log_abs(f, DiskPoint::polar(r, kTwoPi * j / n));
    if (std::isinf(v))
      throw std::domain_error("log_integral: zero of f on the sampled circle; perturb r");
    s.add(v);
  }
  return s.value() / n;
}

}  // namespace hardy
