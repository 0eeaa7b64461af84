#include "hardy/function_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hardy {

namespace {

void validate_factor(const Factor& f, int power) {
  if (power < 1) throw std::invalid_argument("FunctionSpec: factor power must be >= 1");
  if (const auto* m = std::get_if<Monomial>(&f)) {
    if (m->degree < 0) throw std::invalid_argument("Monomial: degree must be >= 0");
  } else if (const auto* s = std::get_if<SingularInnerAtPoint>(&f)) {
    if (!(s->mass > 0.0)) throw std::invalid_argument("SingularInnerAtPoint: mass must be > 0");
  } else if (const auto* c = std::get_if<ConstantFactor>(&f)) {
    if (c->value == std::complex<double>(0.0, 0.0))
      throw std::invalid_argument("ConstantFactor: value must be nonzero");
  }
}

std::complex<double> blaschke_factor(const DiskPoint& a, const std::complex<double>& z) {
  std::complex<double> ac = a.value();
  double r = a.abs();
  if (r == 0.0) return z;  // b_0(z) = z
  return (r / ac) * (ac - z) / (1.0 - std::conj(ac) * z);
}

std::complex<double> blaschke_factor_dz(const DiskPoint& a, const std::complex<double>& z) {
  std::complex<double> ac = a.value();
  double r = a.abs();
  if (r == 0.0) return {1.0, 0.0};
  std::complex<double> den = 1.0 - std::conj(ac) * z;
  return (r / ac) * (r * r - 1.0) / (den * den);
}

// One multiplicative atom of the flattened product.
struct Atom {
  std::complex<double> value;  // factor value at z (unused when vanished)
  std::complex<double> clog;   // log of the factor value (finite when !vanished)
  std::complex<double> dz;     // derivative of the factor value at z
  long long mult = 1;
  bool vanished = false;
};

std::vector<Atom> flatten_at(const FunctionSpec& f, const DiskPoint& z,
                             bool need_dz = false) {
  const std::complex<double> zc = z.value();
  std::vector<Atom> atoms;
  for (const FunctionSpec::Term& t : f.terms) {
    if (const auto* m = std::get_if<Monomial>(&t.factor)) {
      if (m->degree == 0) continue;
      Atom a;
      a.mult = static_cast<long long>(m->degree) * t.power;
      a.value = zc;
      a.dz = {1.0, 0.0};
      a.vanished = (zc == std::complex<double>(0.0, 0.0));
      if (!a.vanished) a.clog = std::log(zc);
      atoms.push_back(a);
    } else if (const auto* b = std::get_if<BlaschkeProduct>(&t.factor)) {
      for (const DiskPoint& zero : b->zeros) {
        Atom a;
        a.mult = t.power;
        a.value = blaschke_factor(zero, zc);
        a.dz = blaschke_factor_dz(zero, zc);
        a.vanished = (a.value == std::complex<double>(0.0, 0.0));
        if (!a.vanished) a.clog = std::log(a.value);
        atoms.push_back(a);
      }
    } else if (const auto* o = std::get_if<OuterFromData>(&t.factor)) {
      Atom a;
      a.mult = t.power;
      a.clog = herglotz_transform(o->log_modulus, z);
      a.value = std::exp(a.clog);
      if (need_dz) a.dz = herglotz_transform_dz(o->log_modulus, z) * a.value;
      atoms.push_back(a);
    } else if (const auto* s = std::get_if<SingularInnerAtPoint>(&t.factor)) {
      std::complex<double> zeta = std::exp(std::complex<double>(0.0, s->zeta_angle));
      std::complex<double> den = zeta - zc;
      Atom a;
      a.mult = t.power;
      a.clog = -s->mass * (zeta + zc) / den;
      a.value = std::exp(a.clog);
      a.dz = (-2.0 * s->mass * zeta / (den * den)) * a.value;
      atoms.push_back(a);
    } else if (const auto* c = std::get_if<ConstantFactor>(&t.factor)) {
      Atom a;
      a.mult = t.power;
      a.value = c->value;
      a.clog = std::log(c->value);
      a.dz = {0.0, 0.0};
      atoms.push_back(a);
    }
  }
  return atoms;
}

}  // namespace

FunctionSpec& FunctionSpec::multiply(Factor f, int power) {
  validate_factor(f, power);
  terms.push_back({std::move(f), power});
  return *this;
}

FunctionSpec FunctionSpec::monomial(int degree, int power) {
  FunctionSpec f;
  f.multiply(Monomial{degree}, power);
  return f;
}
FunctionSpec FunctionSpec::blaschke(std::vector<DiskPoint> zeros, int power) {
  FunctionSpec f;
  f.multiply(BlaschkeProduct{std::move(zeros)}, power);
  return f;
}
FunctionSpec FunctionSpec::outer(BoundaryData log_modulus, int power) {
  FunctionSpec f;
  f.multiply(OuterFromData{std::move(log_modulus)}, power);
  return f;
}
FunctionSpec FunctionSpec::singular_inner(double zeta_angle, double mass, int power) {
  FunctionSpec f;
  f.multiply(SingularInnerAtPoint{zeta_angle, mass}, power);
  return f;
}
FunctionSpec FunctionSpec::constant(std::complex<double> c, int power) {
  FunctionSpec f;
  f.multiply(ConstantFactor{c}, power);
  return f;
}

std::complex<double> eval(const FunctionSpec& f, const DiskPoint& z) {
  // exp of the accumulated complex log keeps huge powers in range
  std::vector<Atom> atoms = flatten_at(f, z);
  std::complex<double> acc(0.0, 0.0);
  for (const Atom& a : atoms) {
    if (a.vanished) return {0.0, 0.0};
    acc += static_cast<double>(a.mult) * a.clog;
  }
  return std::exp(acc);
}

double log_abs(const FunctionSpec& f, const DiskPoint& z) {
  KahanSum s;
  for (const FunctionSpec::Term& t : f.terms) {
    if (const auto* m = std::get_if<Monomial>(&t.factor)) {
      if (m->degree == 0) continue;
      double r = z.abs();
      if (r == 0.0) return -std::numeric_limits<double>::infinity();
      s.add(static_cast<double>(m->degree) * t.power * std::log(r));
    } else if (const auto* b = std::get_if<BlaschkeProduct>(&t.factor)) {
      for (const DiskPoint& zero : b->zeros) {
        std::complex<double> v = blaschke_factor(zero, z.value());
        double av = std::abs(v);
        if (av == 0.0) return -std::numeric_limits<double>::infinity();
        s.add(t.power * std::log(av));
      }
    } else if (const auto* o = std::get_if<OuterFromData>(&t.factor)) {
      s.add(t.power * poisson_extension(o->log_modulus, z));
    } else if (const auto* si = std::get_if<SingularInnerAtPoint>(&t.factor)) {
      std::complex<double> zeta = std::exp(std::complex<double>(0.0, si->zeta_angle));
      s.add(-t.power * si->mass * ((zeta + z.value()) / (zeta - z.value())).real());
    } else if (const auto* c = std::get_if<ConstantFactor>(&t.factor)) {
      s.add(t.power * std::log(std::abs(c->value)));
    }
  }
  return s.value();
}

double boundary_log_abs(const FunctionSpec& f, double theta) {
  KahanSum s;
  for (const FunctionSpec::Term& t : f.terms) {
    if (const auto* o = std::get_if<OuterFromData>(&t.factor)) {
      s.add(t.power * o->log_modulus(theta));
    } else if (const auto* c = std::get_if<ConstantFactor>(&t.factor)) {
      s.add(t.power * std::log(std::abs(c->value)));
    }
    // monomial / Blaschke / singular inner factors are unimodular a.e.
  }
  return s.value();
}

namespace {

// Breakpoints of the boundary log-modulus; empty when it is globally constant.
// Returns false if any outer factor carries sampled (non-piecewise) data.
bool boundary_breakpoints(const FunctionSpec& f, std::vector<double>& out) {
  out.clear();
  for (const FunctionSpec::Term& t : f.terms) {
    if (const auto* o = std::get_if<OuterFromData>(&t.factor)) {
      if (!o->log_modulus.is_piecewise()) return false;
      std::vector<double> b = o->log_modulus.breakpoints();
      out.insert(out.end(), b.begin(), b.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return true;
}

int sampled_grid_size(const FunctionSpec& f, int fallback) {
  int n = fallback;
  for (const FunctionSpec::Term& t : f.terms)
    if (const auto* o = std::get_if<OuterFromData>(&t.factor))
      if (!o->log_modulus.is_piecewise()) n = std::max(n, o->log_modulus.grid_size());
  return n;
}

}  // namespace

double hp_norm(const FunctionSpec& f, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("hp_norm: p must be positive");
  std::vector<double> bp;
  if (boundary_breakpoints(f, bp)) {
    if (bp.empty()) return std::exp(boundary_log_abs(f, 0.0));
    if (std::isinf(p)) {
      double m = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < bp.size(); ++i) {
        double lo = bp[i];
        double hi = (i + 1 < bp.size()) ? bp[i + 1] : bp[0] + kTwoPi;
        m = std::max(m, boundary_log_abs(f, wrap_angle(0.5 * (lo + hi))));
      }
      return std::exp(m);
    }
    KahanSum s;
    for (std::size_t i = 0; i < bp.size(); ++i) {
      double lo = bp[i];
      double hi = (i + 1 < bp.size()) ? bp[i + 1] : bp[0] + kTwoPi;
      double v = boundary_log_abs(f, wrap_angle(0.5 * (lo + hi)));
      s.add((hi - lo) / kTwoPi * std::exp(p * v));
    }
    return std::pow(s.value(), 1.0 / p);
  }
  int n = sampled_grid_size(f, 1 << 12);
  std::vector<double> vals(n);
  for (int j = 0; j < n; ++j) vals[j] = std::exp(boundary_log_abs(f, kTwoPi * j / n));
  return lp_mean(vals, p);
}

std::complex<double> eval_derivative(const FunctionSpec& f, const DiskPoint& z) {
  std::vector<Atom> atoms = flatten_at(f, z, /*need_dz=*/true);
  long long zero_mult = 0;
  std::size_t zero_idx = atoms.size();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].vanished) {
      zero_mult += atoms[i].mult;
      zero_idx = i;
    }
  }
  if (zero_mult >= 2) return {0.0, 0.0};
  if (zero_mult == 1) {
    // simple zero: derivative of the vanishing atom times the rest
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (i != zero_idx) acc += static_cast<double>(atoms[i].mult) * atoms[i].clog;
    return atoms[zero_idx].dz * std::exp(acc);
  }
  std::complex<double> acc(0.0, 0.0), logsum(0.0, 0.0);
  for (const Atom& a : atoms) {
    acc += static_cast<double>(a.mult) * a.dz / a.value;
    logsum += static_cast<double>(a.mult) * a.clog;
  }
  return std::exp(logsum) * acc;
}

double blaschke_condition_sum(std::span<const DiskPoint> zeros) {
  KahanSum s;
  for (const DiskPoint& a : zeros) s.add(1.0 - a.abs());
  return s.value();
}

double circle_lp_mean(const FunctionSpec& f, double r, double p) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("circle_lp_mean: r in (0,1)");
  if (!(p > 0.0) || std::isinf(p)) throw std::invalid_argument("circle_lp_mean: finite p > 0");
  std::vector<double> bp;
  if (!boundary_breakpoints(f, bp) || bp.empty()) bp = {0.0};

  static thread_local std::vector<double> gx, gw;
  if (gx.empty()) gauss_legendre(16, gx, gw);

  // panels doubling away from each breakpoint, narrowest ~ the layer scale 1-r
  const double w0 = std::max(0.25 * (1.0 - r), 1e-12);
  KahanSum integral;
  for (std::size_t i = 0; i < bp.size(); ++i) {
    double lo = bp[i];
    double hi = (i + 1 < bp.size()) ? bp[i + 1] : bp[0] + kTwoPi;
    double len = hi - lo;
    if (len <= 0.0) continue;
    std::vector<double> cuts;
    cuts.push_back(lo);
    double w = w0;
    while (cuts.back() + w < lo + 0.5 * len) {
      cuts.push_back(cuts.back() + w);
      w *= 2.0;
    }
    std::vector<double> right;
    right.push_back(hi);
    w = w0;
    while (right.back() - w > cuts.back()) {
      right.push_back(right.back() - w);
      w *= 2.0;
    }
    for (auto it = right.rbegin(); it != right.rend(); ++it) cuts.push_back(*it);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      double a = cuts[k], b = cuts[k + 1];
      if (b <= a) continue;
      double mid = 0.5 * (a + b), half = 0.5 * (b - a);
      for (std::size_t q = 0; q < gx.size(); ++q) {
        double theta = mid + half * gx[q];
        double la = log_abs(f, DiskPoint::polar(r, theta));
        integral.add(gw[q] * half * std::exp(p * la));
      }
    }
  }
  return std::pow(integral.value() / kTwoPi, 1.0 / p);
}

double sup_abs_probe(const FunctionSpec& f, std::span<const double> radii, int angular_size) {
  double m = 0.0;
  for (double r : radii) {
    for (int j = 0; j < angular_size; ++j) {
      double la = log_abs(f, DiskPoint::polar(r, kTwoPi * j / angular_size));
      m = std::max(m, std::exp(la));
    }
  }
  return m;
}

TransformRecord lemma2_transform(const FunctionSpec& f, double p) {
  if (!(p > 0.0) || std::isinf(p))
    throw std::invalid_argument("lemma2_transform: p must be finite and positive");

  TransformRecord rec;
  rec.input = f;
  rec.exponent = p;

  // boundary data of |f*|^p
  std::vector<double> bp;
  if (boundary_breakpoints(f, bp)) {
    if (bp.empty()) {
      rec.majorant = BoundaryData::constant(std::exp(p * boundary_log_abs(f, 0.0)));
    } else {
      std::vector<BoundaryData::Piece> pieces;
      double background = 0.0;
      for (std::size_t i = 0; i < bp.size(); ++i) {
        double lo = bp[i];
        double hi = (i + 1 < bp.size()) ? bp[i + 1] : bp[0] + kTwoPi;
        double level = std::exp(p * boundary_log_abs(f, wrap_angle(0.5 * (lo + hi))));
        if (i + 1 == bp.size()) {
          background = level;  // wrapping segment becomes the background
        } else {
          pieces.push_back({Arc(0.5 * (lo + hi), 0.5 * (hi - lo)), level});
        }
      }
      rec.majorant = BoundaryData::piecewise(std::move(pieces), background);
    }
  } else {
    int n = sampled_grid_size(f, 1 << 12);
    std::vector<double> vals(n);
    for (int j = 0; j < n; ++j) vals[j] = std::exp(p * boundary_log_abs(f, kTwoPi * j / n));
    rec.majorant = BoundaryData::sampled(CircleGrid(n), std::move(vals));
  }

  rec.h_log_modulus = rec.majorant.map_levels([](double v) { return std::log1p(v); });

  rec.f1 = f;
  const double inv_p = 1.0 / p;
  rec.f1.multiply(OuterFromData{rec.h_log_modulus.map_levels(
                      [inv_p](double v) { return -inv_p * v; })},
                  1);

  if (p <= 1.0) {
    rec.output = rec.f1;
  } else {
    const int boost = static_cast<int>(std::floor(p)) + 1;
    FunctionSpec g;
    for (const FunctionSpec::Term& t : rec.f1.terms) {
      if (std::holds_alternative<Monomial>(t.factor) ||
          std::holds_alternative<BlaschkeProduct>(t.factor) ||
          std::holds_alternative<SingularInnerAtPoint>(t.factor)) {
        g.multiply(t.factor, t.power * boost);
      } else if (const auto* o = std::get_if<OuterFromData>(&t.factor)) {
        // e^{p h}: scaling the boundary log-data is exact
        g.multiply(OuterFromData{o->log_modulus.map_levels(
                       [p](double v) { return p * v; })},
                   t.power);
      } else if (const auto* c = std::get_if<ConstantFactor>(&t.factor)) {
        g.multiply(ConstantFactor{std::pow(c->value, p)}, t.power);
      }
    }
    rec.output = g;
  }

  // sampled outer data cannot be probed past its grid resolution
  std::vector<double> radii = {0.0, 0.1, 0.25, 0.4, 0.55, 0.7, 0.8, 0.9, 0.95, 0.99};
  std::vector<double> unused;
  if (boundary_breakpoints(rec.output, unused)) radii.push_back(0.999);
  rec.sup_probe = sup_abs_probe(rec.output, radii, 256);
  return rec;
}

}  // namespace hardy
