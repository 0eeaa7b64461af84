#include "hardy/sampling_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace hardy {

void PointSet::add_weighted(const DiskPoint& z, double weight, int generation) {
  double computed = 1.0 - z.abs2();
  if (std::fabs(weight - computed) > 1e-12)
    throw std::invalid_argument("PointSet: cached weight disagrees with 1-|z|^2");
  entries_.push_back({z, weight, generation});
}

double m_a(const FunctionSpec& f, const PointSet& a, double theta, StolzParams alpha) {
  double m = 0.0;
  for (const PointSet::Entry& e : a.entries()) {
    if (in_stolz_angle(e.z, theta, alpha))
      m = std::max(m, std::abs(eval(f, e.z)));
  }
  return m;
}

double m_a_p(const FunctionSpec& f, const PointSet& a, double theta, StolzParams alpha,
             double p) {
  if (!(p > 0.0) || std::isinf(p)) throw std::invalid_argument("m_a_p: finite p > 0");
  KahanSum s;
  for (const PointSet::Entry& e : a.entries()) {
    if (in_stolz_angle(e.z, theta, alpha))
      s.add(std::pow(std::abs(eval(f, e.z)), p));
  }
  return std::pow(s.value(), 1.0 / p);
}

double mu_norm(const FunctionSpec& f, const PointSet& a, double p) {
  if (!(p > 0.0) || std::isinf(p)) throw std::invalid_argument("mu_norm: finite p > 0");
  KahanSum s;
  for (const PointSet::Entry& e : a.entries())
    s.add(e.weight * std::pow(std::abs(eval(f, e.z)), p));
  return std::pow(s.value(), 1.0 / p);
}

namespace detail {

namespace {

void push_interval(std::vector<SweepPlan::Event>& ev, double lo, double hi,
                   std::int32_t idx) {
  ev.push_back({lo, idx, true});
  ev.push_back({hi, idx, false});
}

}  // namespace

SweepPlan SweepPlan::build(std::span<const Arc> arcs) {
  SweepPlan plan;
  plan.events.reserve(2 * arcs.size() + 2);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    if (a.empty()) continue;
    std::int32_t idx = static_cast<std::int32_t>(i);
    if (a.full_circle()) {
      push_interval(plan.events, 0.0, kTwoPi, idx);
      continue;
    }
    double lo = a.center_angle - a.half_width;
    double hi = a.center_angle + a.half_width;
    if (lo < 0.0) {
      push_interval(plan.events, lo + kTwoPi, kTwoPi, idx);
      push_interval(plan.events, 0.0, hi, idx);
    } else if (hi > kTwoPi) {
      push_interval(plan.events, lo, kTwoPi, idx);
      push_interval(plan.events, 0.0, hi - kTwoPi, idx);
    } else {
      push_interval(plan.events, lo, hi, idx);
    }
  }
  std::sort(plan.events.begin(), plan.events.end(),
            [](const SweepPlan::Event& x, const SweepPlan::Event& y) {
              if (x.angle != y.angle) return x.angle < y.angle;
              if (x.idx != y.idx) return x.idx < y.idx;
              return x.add < y.add;
            });
  return plan;
}

MaxProfile max_profile(const SweepPlan& plan, std::span<const double> values) {
  MaxProfile prof;
  std::multiset<double> active;
  double prev = 0.0;
  for (const SweepPlan::Event& e : plan.events) {
    if (e.angle > prev) {
      prof.length.push_back(e.angle - prev);
      prof.value.push_back(active.empty() ? 0.0 : *active.rbegin());
      prof.covered.push_back(active.empty() ? 0 : 1);
      prev = e.angle;
    }
    if (e.add) {
      active.insert(values[e.idx]);
    } else {
      active.erase(active.find(values[e.idx]));
    }
  }
  if (prev < kTwoPi) {
    prof.length.push_back(kTwoPi - prev);
    prof.value.push_back(0.0);
    prof.covered.push_back(0);
  }
  return prof;
}

MaxProfile max_profile(std::span<const Arc> arcs, std::span<const double> values) {
  return max_profile(SweepPlan::build(arcs), values);
}

}  // namespace detail

namespace {

std::vector<double> point_abs_values(const FunctionSpec& f, const PointSet& a, int threads) {
  std::vector<double> v(a.size());
  parallel_for_index(a.size(), threads, [&](std::size_t i) {
    v[i] = std::abs(eval(f, a[i].z));
  });
  return v;
}

std::vector<Arc> dual_arcs(const PointSet& a, StolzParams alpha) {
  std::vector<Arc> arcs;
  arcs.reserve(a.size());
  for (const PointSet::Entry& e : a.entries()) arcs.push_back(stolz_arc(e.z, alpha));
  return arcs;
}

}  // namespace

double m_a_lp_norm(const FunctionSpec& f, const PointSet& a, double p, StolzParams alpha,
                   int threads) {
  if (!(p > 0.0)) throw std::invalid_argument("m_a_lp_norm: p must be positive");
  if (a.empty()) return 0.0;
  std::vector<double> values = point_abs_values(f, a, threads);
  if (std::isinf(p)) return *std::max_element(values.begin(), values.end());
  detail::MaxProfile prof = detail::max_profile(dual_arcs(a, alpha), values);
  KahanSum s;
  for (std::size_t i = 0; i < prof.length.size(); ++i)
    s.add(prof.length[i] * std::pow(prof.value[i], p));
  return std::pow(s.value() / kTwoPi, 1.0 / p);
}

double m_a_lp_norm_grid(const FunctionSpec& f, const PointSet& a, double p,
                        StolzParams alpha, int grid_size) {
  if (grid_size < 8) throw std::invalid_argument("m_a_lp_norm_grid: grid too small");
  std::vector<double> values = point_abs_values(f, a, 1);
  std::vector<double> m(grid_size, 0.0);
  for (int j = 0; j < grid_size; ++j) {
    double theta = kTwoPi * j / grid_size;
    double mj = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (in_stolz_angle(a[i].z, theta, alpha)) mj = std::max(mj, values[i]);
    m[j] = mj;
  }
  return lp_mean(m, p);
}

SamplingReport sampling_ratio(const FunctionSpec& f, const PointSet& a, double p,
                              StolzParams alpha, double ceiling, int dump_grid) {
  SamplingReport rep;
  rep.p = p;
  rep.alpha = alpha.alpha;
  rep.ceiling = ceiling;
  rep.f_norm = hp_norm(f, p);
  if (!(rep.f_norm > 0.0))
    throw std::invalid_argument("sampling_ratio: ||f||_p must be positive");
  rep.maximal_norm = m_a_lp_norm(f, a, p, alpha);
  rep.ratio = rep.maximal_norm / rep.f_norm;
  rep.ceiling_ok = rep.ratio <= ceiling * (1.0 + 1e-9);
  if (dump_grid > 0) {
    rep.grid_size = dump_grid;
    for (int j = 0; j < dump_grid; ++j) {
      double theta = kTwoPi * j / dump_grid;
      rep.theta_dump.push_back({theta, m_a(f, a, theta, alpha)});
    }
  }
  return rep;
}

IdentityCheck lemma1_identity_check(const FunctionSpec& f, const PointSet& a, double p,
                                    StolzParams alpha) {
  if (!(p > 0.0) || std::isinf(p))
    throw std::invalid_argument("lemma1_identity_check: finite p > 0");
  IdentityCheck out;
  if (a.empty()) return out;

  std::vector<double> wp(a.size());
  std::vector<Arc> arcs = dual_arcs(a, alpha);
  for (std::size_t i = 0; i < a.size(); ++i)
    wp[i] = std::pow(std::abs(eval(f, a[i].z)), p);

  // lhs: the integrand is a sum of indicator bumps; integrate the running sum
  // over the segments of the endpoint sweep
  struct Ev {
    double angle;
    double delta;
    std::int32_t ord;
  };
  std::vector<Ev> events;
  events.reserve(2 * arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& arc = arcs[i];
    if (arc.empty()) continue;
    double lo = arc.center_angle - arc.half_width;
    double hi = arc.center_angle + arc.half_width;
    auto push = [&](double l, double h) {
      events.push_back({l, wp[i], static_cast<std::int32_t>(i)});
      events.push_back({h, -wp[i], static_cast<std::int32_t>(i)});
    };
    if (arc.full_circle()) {
      push(0.0, kTwoPi);
    } else if (lo < 0.0) {
      push(lo + kTwoPi, kTwoPi);
      push(0.0, hi);
    } else if (hi > kTwoPi) {
      push(lo, kTwoPi);
      push(0.0, hi - kTwoPi);
    } else {
      push(lo, hi);
    }
  }
  std::sort(events.begin(), events.end(), [](const Ev& x, const Ev& y) {
    if (x.angle != y.angle) return x.angle < y.angle;
    if (x.ord != y.ord) return x.ord < y.ord;
    return x.delta < y.delta;
  });
  KahanSum integral;
  KahanSum running;
  double prev = 0.0;
  for (const Ev& e : events) {
    if (e.angle > prev) {
      integral.add((e.angle - prev) * running.value());
      prev = e.angle;
    }
    running.add(e.delta);
  }
  out.lhs = integral.value();

  // rhs: direct weighted sum of exact arc measures
  KahanSum rhs;
  for (std::size_t i = 0; i < arcs.size(); ++i) rhs.add(wp[i] * arcs[i].measure());
  out.rhs = rhs.value();

  double scale = std::max(std::fabs(out.lhs), std::fabs(out.rhs));
  out.relative_error = scale > 0.0 ? std::fabs(out.lhs - out.rhs) / scale : 0.0;
  return out;
}

double nt_coverage(const PointSet& a, StolzParams alpha, int depth) {
  if (depth < 1) throw std::invalid_argument("nt_coverage: depth must be >= 1");
  double threshold = 1.0 - 1.0 / depth;
  std::vector<Arc> arcs;
  for (const PointSet::Entry& e : a.entries())
    if (e.z.abs() >= threshold) arcs.push_back(stolz_arc(e.z, alpha));
  return arc_union_measure(arcs);
}

}  // namespace hardy
