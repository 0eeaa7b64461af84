#include "hardy/witness_constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hardy {

namespace {

double pow2(int n) { return std::ldexp(1.0, n); }

BoundaryData gap_indicator_data(const ArcSet& A) {
  // u = 1_A - 1: boundary log-modulus 0 on A, -1 off A
  std::vector<BoundaryData::Piece> pieces;
  for (const Arc& a : A.arcs()) pieces.push_back({a, 0.0});
  return BoundaryData::piecewise(std::move(pieces), -1.0);
}

}  // namespace

Prop3Params Prop3Params::default_schedule(int n_min, int n_max) {
  Prop3Params p;
  p.n_min = n_min;
  p.n_max = n_max;
  for (int n = n_min; n <= n_max; ++n)
    p.schedule.push_back(static_cast<std::int64_t>(n) << n);
  p.validate();
  return p;
}

Prop3Params Prop3Params::from_schedule(int n_min, std::vector<std::int64_t> sched) {
  Prop3Params p;
  p.n_min = n_min;
  p.n_max = n_min + static_cast<int>(sched.size()) - 1;
  p.schedule = std::move(sched);
  p.validate();
  return p;
}

double Prop3Params::gamma(int n) const {
  return pow2(n) / (2.0 * static_cast<double>(points(n)));
}

double Prop3Params::ell(int n) const {
  return 1.0 / (static_cast<double>(points(n)) * std::sqrt(std::fabs(std::log(gamma(n)))));
}

double Prop3Params::radius(int n) const { return std::sqrt(1.0 - pow2(-n)); }

void Prop3Params::validate() const {
  if (n_min < 1) throw std::invalid_argument("Prop3Params: n_min must be >= 1");
  if (schedule.empty() || n_max - n_min + 1 != static_cast<int>(schedule.size()))
    throw std::invalid_argument("Prop3Params: schedule must cover n_min..n_max");
  double prev_ratio = 0.0;
  for (int n = n_min; n <= n_max; ++n) {
    std::int64_t pn = points(n);
    if (pn < 1) throw std::invalid_argument("Prop3Params: p_n must be >= 1");
    double ratio = static_cast<double>(pn) * pow2(-n);  // 2^{-n} p_n, must increase
    if (ratio <= prev_ratio)
      throw std::invalid_argument("Prop3Params: 2^{-n} p_n must be strictly increasing");
    prev_ratio = ratio;
    if (!(gamma(n) < 1.0))
      throw std::invalid_argument("Prop3Params: gamma_n must be < 1 (schedule too sparse)");
    if (!(span(n) <= kTwoPi))
      throw std::invalid_argument("Prop3Params: generation span p_n ell_n exceeds 2pi");
  }
}

FunctionSpec outer_from_gap(const ArcSet& A) {
  double m = A.measure();
  if (!(m > 0.0) || !(m < kTwoPi))
    throw std::invalid_argument("outer_from_gap: need 0 < measure(A) < 2pi");
  return FunctionSpec::outer(gap_indicator_data(A));
}

FloorEstimate harmonic_measure_floor(const ArcSet& A, StolzParams alpha, int sample_budget) {
  if (sample_budget < 1) throw std::invalid_argument("harmonic_measure_floor: empty budget");
  FunctionSpec omega = outer_from_gap(A);
  FloorEstimate est;
  est.budget = sample_budget;
  est.floor = std::numeric_limits<double>::infinity();
  const int strata = 14;
  const int per = std::max(1, sample_budget / strata);
  const double golden = 0.6180339887498949;
  for (int k = 1; k <= strata; ++k) {
    double r = 1.0 - pow2(-k);
    for (int j = 0; j < per; ++j) {
      double theta = wrap_angle(kTwoPi * (j * golden + 0.5 * k * golden * golden));
      DiskPoint z = DiskPoint::polar(r, theta);
      if (!outside_stolz_star(z, A, alpha)) continue;
      est.samples_outside += 1;
      est.floor = std::min(est.floor, -log_abs(omega, z));
    }
  }
  if (est.samples_outside == 0) est.floor = 0.0;
  return est;
}

FunctionSpec gap_witness_family(const ArcSet& A, int n) {
  if (n < 1) throw std::invalid_argument("gap_witness_family: n must be >= 1");
  FunctionSpec f;
  f.multiply(Monomial{n}, 1);
  f.multiply(OuterFromData{gap_indicator_data(A)}, n);
  return f;
}

PointSet prop3_pointset(const Prop3Params& params) {
  params.validate();
  PointSet a;
  for (int n = params.n_min; n <= params.n_max; ++n) {
    double r = params.radius(n);
    double l = params.ell(n);
    double w = pow2(-n);  // structural weight 1 - |a_{n,k}|^2
    std::int64_t pn = params.points(n);
    for (std::int64_t k = 0; k <= pn; ++k)
      a.add_weighted(DiskPoint::polar(r, static_cast<double>(k) * l), w, n);
  }
  return a;
}

PointSet cluster_pointset(std::span<const DiskPoint> blaschke_zeros,
                          std::span<const std::int64_t> q) {
  if (blaschke_zeros.size() != q.size())
    throw std::invalid_argument("cluster_pointset: zeros/q size mismatch");
  PointSet a;
  for (std::size_t i = 0; i < blaschke_zeros.size(); ++i) {
    if (q[i] < 1) throw std::invalid_argument("cluster_pointset: q_n must be >= 1");
    const DiskPoint& b = blaschke_zeros[i];
    double w2 = 1.0 - b.abs2();
    double rho = w2 * w2 / (2.0 * static_cast<double>(q[i]));
    if (b.abs() + rho >= 1.0)
      throw std::invalid_argument("cluster_pointset: cluster would exit the unit disk");
    for (std::int64_t j = 0; j < q[i]; ++j) {
      double phi = kTwoPi * static_cast<double>(j) / static_cast<double>(q[i]);
      a.add(DiskPoint(b.re + rho * std::cos(phi), b.im + rho * std::sin(phi)),
            static_cast<int>(i));
    }
  }
  return a;
}

CertificateRecord chebyshev_certificate(const FunctionSpec& g, const Prop3Params& params,
                                        int n) {
  if (n < params.n_min || n > params.n_max)
    throw std::invalid_argument("chebyshev_certificate: n outside the truncation");
  CertificateRecord rec;
  rec.n = n;
  rec.p_n = params.points(n);
  rec.gamma_n = params.gamma(n);
  rec.ell_n = params.ell(n);

  const double r = params.radius(n);
  const double w = pow2(-n);
  KahanSum s;
  std::int64_t above = 0;
  // certificate sums run over k = 1..p_n (the display also lists k = 0)
  for (std::int64_t k = 1; k <= rec.p_n; ++k) {
    double v = std::abs(eval(g, DiskPoint::polar(r, static_cast<double>(k) * rec.ell_n)));
    s.add(v);
    if (v >= rec.gamma_n) ++above;
  }
  rec.s_n = w * s.value();
  rec.count_above = above;
  rec.count_bound = pow2(n) * rec.s_n / rec.gamma_n;
  rec.premise = rec.s_n <= 0.25;
  rec.covered_measure = static_cast<double>(rec.p_n - above) * rec.ell_n;
  rec.per_point_log_bound = std::log(rec.gamma_n + 2.0 * pow2(n) * rec.ell_n);
  // on the covered J-arcs log|g| <= min(0, bound); the rest contributes <= 0
  rec.integral_upper_bound =
      rec.premise ? rec.covered_measure / kTwoPi * std::min(0.0, rec.per_point_log_bound)
                  : 0.0;
  rec.target_rate = -std::sqrt(std::fabs(std::log(rec.gamma_n))) / kTwoPi;
  return rec;
}

DivergenceReport divergence_report(const FunctionSpec& g, const Prop3Params& params,
                                   double soundness_tol, double summable_budget) {
  params.validate();
  DivergenceReport rep;
  rep.soundness_tol = soundness_tol;
  rep.summable_budget = summable_budget;

  std::vector<double> probe_radii = {0.0, 0.2, 0.4, 0.6, 0.8, 0.9, 0.95, 0.99};
  {  // sampled outer data cannot be probed past its grid resolution
    bool piecewise_only = true;
    for (const FunctionSpec::Term& t : g.terms)
      if (const auto* o = std::get_if<OuterFromData>(&t.factor))
        piecewise_only = piecewise_only && o->log_modulus.is_piecewise();
    if (piecewise_only) probe_radii.push_back(0.999);
  }
  double sup = sup_abs_probe(g, probe_radii, 1024);
  FunctionSpec gn = g;
  if (sup > 1.0 + 1e-9) {
    rep.rescale = 1.0 / sup;
    gn.multiply(ConstantFactor{std::complex<double>(rep.rescale, 0.0)}, 1);
  }

  KahanSum total_s;
  for (int n = params.n_min; n <= params.n_max; ++n) {
    DivergenceRow row;
    row.cert = chebyshev_certificate(gn, params, n);
    double r = params.radius(n);
    try {
      row.measured_log_integral = log_integral(gn, r);
    } catch (const std::domain_error&) {
      // a zero of g landed on a sampled node; nudge the circle inward
      row.measured_log_integral = log_integral(gn, r * (1.0 - 1e-12));
    }
    total_s.add(row.cert.s_n);
    if (row.cert.premise &&
        row.measured_log_integral > row.cert.integral_upper_bound + soundness_tol)
      rep.certificate_sound = false;
    rep.rows.push_back(row);
  }
  rep.s_summable = total_s.value() <= summable_budget;
  return rep;
}

}  // namespace hardy
