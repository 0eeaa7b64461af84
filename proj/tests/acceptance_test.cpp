// Acceptance suite: one criterion per function, one pass/fail line each.
// Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hardy/experiments.hpp"
#include "hardy/witness_constructions.hpp"

using namespace hardy;

namespace {

struct Checker {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

ArcSet upper() { return ArcSet::from_arcs({Arc(0.5 * kPi, 0.5 * kPi)}); }

FunctionSpec random_blaschke(std::mt19937_64& rng, int zeros) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<DiskPoint> zs;
  for (int i = 0; i < zeros; ++i)
    zs.push_back(DiskPoint::polar(0.95 * std::sqrt(unif(rng)), kTwoPi * unif(rng)));
  return FunctionSpec::blaschke(zs);
}

// ---- the 20-function transform suite (mixes of Blaschke/outer/monomial) ----
std::vector<FunctionSpec> transform_suite() {
  FunctionSpec om_up = outer_from_gap(upper());
  FunctionSpec om_arc = outer_from_gap(ArcSet::from_arcs({Arc(2.0, 0.8)}));
  Factor up = om_up.terms[0].factor;
  Factor arc = om_arc.terms[0].factor;

  std::vector<FunctionSpec> suite;
  suite.push_back(FunctionSpec::monomial(1));                               // 0
  suite.push_back(FunctionSpec::monomial(5));                               // 1
  suite.push_back(FunctionSpec::monomial(16));                              // 2
  suite.push_back(FunctionSpec::blaschke({DiskPoint(0.5, 0.0)}));           // 3
  suite.push_back(FunctionSpec::blaschke({DiskPoint(0.5, 0.0)}, 2));        // 4
  suite.push_back(FunctionSpec::blaschke(
      {DiskPoint(0.5, 0.0), DiskPoint(-0.3, 0.4), DiskPoint(0.2, -0.6)}));  // 5
  std::mt19937_64 rng(2024);
  suite.push_back(random_blaschke(rng, 8));                                 // 6
  suite.push_back(om_up);                                                   // 7
  suite.push_back(om_arc);                                                  // 8
  FunctionSpec om2;
  om2.multiply(up, 2);
  suite.push_back(om2);                                                     // 9
  FunctionSpec m2o = FunctionSpec::monomial(2);
  m2o.multiply(up, 1);
  suite.push_back(m2o);                                                     // 10
  FunctionSpec bo = FunctionSpec::blaschke({DiskPoint(0.5, 0.0)});
  bo.multiply(arc, 1);
  suite.push_back(bo);                                                      // 11
  FunctionSpec zbo = FunctionSpec::monomial(1);
  zbo.multiply(BlaschkeProduct{{DiskPoint(0.0, 0.3)}}, 1);
  zbo.multiply(up, 1);
  suite.push_back(zbo);                                                     // 12
  suite.push_back(FunctionSpec::singular_inner(0.0, 1.0));                  // 13
  FunctionSpec zsi = FunctionSpec::monomial(3);
  zsi.multiply(SingularInnerAtPoint{0.5 * kPi, 0.5}, 1);
  suite.push_back(zsi);                                                     // 14
  FunctionSpec bso = FunctionSpec::blaschke({DiskPoint(0.6, 0.0)});
  bso.multiply(SingularInnerAtPoint{1.0, 0.3}, 1);
  bso.multiply(up, 1);
  suite.push_back(bso);                                                     // 15
  suite.push_back(FunctionSpec::constant({2.5, 0.0}));                      // 16
  FunctionSpec cz = FunctionSpec::monomial(2);
  cz.multiply(ConstantFactor{{0.3, 0.0}}, 1);
  suite.push_back(cz);                                                      // 17
  FunctionSpec bc = FunctionSpec::blaschke({DiskPoint(0.5, 0.0), DiskPoint(-0.5, 0.0),
                                            DiskPoint(0.0, 0.3), DiskPoint(0.0, -0.3)});
  bc.multiply(ConstantFactor{{1.2, 0.0}}, 1);
  suite.push_back(bc);                                                      // 18
  FunctionSpec amp = FunctionSpec::outer(BoundaryData::piecewise(
      {{Arc(1.0, 0.4), 0.5}, {Arc(4.0, 0.6), -0.7}}, -0.2));
  suite.push_back(amp);                                                     // 19
  return suite;
}

// indices of the suite members with sup norm <= 1 by construction
std::vector<int> bounded_suite_indices() {
  return {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 17};
}

// ---------------------------------------------------------------------------

void lemma1_identity(Checker& c) {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    int count = 1 + static_cast<int>(unif(rng) * 499);
    PointSet a;
    for (int i = 0; i < count; ++i)
      a.add(DiskPoint::polar(0.998 * std::sqrt(unif(rng)), kTwoPi * unif(rng)));
    FunctionSpec fs[] = {FunctionSpec::one(), random_blaschke(rng, 4 + trial % 6)};
    for (const FunctionSpec& f : fs)
      for (double p : {1.0, 2.0})
        for (double alpha : {0.5, 1.0, 2.0}) {
          IdentityCheck chk = lemma1_identity_check(f, a, p, StolzParams(alpha));
          worst = std::max(worst, chk.relative_error);
        }
  }
  std::ostringstream os;
  os << "max relative error " << worst;
  c.note = os.str();
  c.require(worst <= 1e-10, "relative error above 1e-10");
}

void herglotz_oracle(Checker& c) {
  std::vector<double> gx, gw;
  gauss_legendre(4, gx, gw);
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    Arc arc(kTwoPi * unif(rng), 0.01 + (kPi - 0.01) * unif(rng));
    DiskPoint z = DiskPoint::polar(0.9 * std::sqrt(unif(rng)), kTwoPi * unif(rng));
    std::complex<double> zc = z.value();
    // 2^14-node oracle: composite 4-point Gauss-Legendre over the arc
    const int panels = 1 << 12;
    double lo = arc.center_angle - arc.half_width;
    double h = arc.measure() / panels;
    std::complex<double> acc(0.0, 0.0);
    for (int i = 0; i < panels; ++i) {
      double mid = lo + (i + 0.5) * h;
      for (int q = 0; q < 4; ++q) {
        double t = mid + 0.5 * h * gx[q];
        std::complex<double> e = std::exp(std::complex<double>(0.0, t));
        acc += gw[q] * 0.5 * h * (e + zc) / (e - zc);
      }
    }
    worst = std::max(worst,
                     std::abs(herglotz_arc_closed_form(arc, z) - acc / kTwoPi));
  }
  std::ostringstream os;
  os << "max abs error " << worst << " over 1000 (arc, z)";
  c.note = os.str();
  c.require(worst <= 1e-9, "closed form vs quadrature above 1e-9");
}

void omega_structure(Checker& c) {
  ArcSet A = upper();
  FunctionSpec om = outer_from_gap(A);
  double r = 1.0 - std::ldexp(1.0, -20);
  for (double theta : {0.3, 0.5 * kPi, kPi - 0.3}) {
    double v = std::abs(eval(om, DiskPoint::polar(r, theta)));
    c.require(std::fabs(v - 1.0) <= 1e-3, "interior radial limit not 1");
  }
  for (double theta : {kPi + 0.3, 1.5 * kPi, kTwoPi - 0.3}) {
    double v = std::abs(eval(om, DiskPoint::polar(r, theta)));
    c.require(std::fabs(v - std::exp(-1.0)) <= 1e-3, "exterior radial limit not e^{-1}");
  }
  double at0 = std::abs(eval(om, DiskPoint(0.0, 0.0)));
  double expect = std::exp(-(1.0 - A.measure() / kTwoPi));
  c.require(std::fabs(at0 - expect) <= 1e-10, "|omega(0)| mismatch");

  FloorEstimate est = harmonic_measure_floor(A, StolzParams(1.0), 30000);
  std::ostringstream os;
  os << "floor " << est.floor << " over " << est.samples_outside << " samples";
  c.note = os.str();
  c.require(est.samples_outside >= 10000, "fewer than 1e4 star-complement samples");
  c.require(est.floor > 0.0, "harmonic-measure floor not positive");
}

void theorem1_converse(Checker& c) {
  ExperimentConfig cfg = default_config("theorem1-converse");
  Report rep = run_theorem1_converse(cfg);
  const ReportTable& t = rep.tables.at(0);
  c.require(t.rows.size() == 200, "expected 200 rows");
  double prev = 2.0;
  for (const auto& row : t.rows) {
    c.require(row[2] >= 0.5 - 1e-6, "||f_n||_2^2 below 1/2 - 1e-6");
    c.require(row[3] < prev, "||M_a f_n||_2 not strictly decreasing");
    prev = row[3];
  }
  std::ostringstream os;
  os << "final ||M_a f_n||_2 = " << prev;
  c.note = os.str();
  c.require(prev <= 0.05, "final maximal norm above 0.05");
  c.require(rep.all_pass(), "runner verdicts failed");
}

void theorem1_forward(Checker& c) {
  ExperimentConfig cfg = default_config("theorem1-forward");
  Report rep = run_theorem1_forward(cfg);
  const ReportTable& cov = rep.tables.at(0);
  for (const auto& row : cov.rows)
    c.require(row[2] == kTwoPi, "coverage not exactly 2pi at some depth <= 2^10");
  const ReportTable& ratios = rep.tables.at(1);
  double min_ratio = 2.0;
  for (const auto& row : ratios.rows) min_ratio = std::min(min_ratio, row[5]);
  std::ostringstream os;
  os << "min ratio " << min_ratio << " over " << ratios.rows.size() << " (f, p) pairs";
  c.note = os.str();
  c.require(ratios.rows.size() == 24, "expected 12 functions x p in {1,2}");
  c.require(min_ratio >= 0.5, "sampling ratio below 0.5");
  c.require(rep.all_pass(), "runner verdicts failed");
}

void theorem2_divergence(Checker& c) {
  ExperimentConfig cfg = default_config("theorem2-divergence");
  Report rep = run_theorem2_experiments(cfg);
  const ReportTable& t = rep.tables.at(0);
  double worst = 10.0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    int m = static_cast<int>(t.rows[i][0]);
    if (m >= 5 && m <= 10) {
      double ratio = t.rows[i][2] / t.rows[i - 1][2];
      worst = std::min(worst, ratio);
      c.require(t.rows[i][2] >= 2.0 * t.rows[i - 1][2], "partial sums did not double");
    }
  }
  std::ostringstream os;
  os << "min per-ring growth " << worst;
  c.note = os.str();
  c.require(rep.all_pass(), "runner verdicts failed");
}

void lemma2_transform_gate(Checker& c) {
  std::vector<FunctionSpec> suite = transform_suite();
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst_sup = 0.0;
  long long violations = 0;
  for (const FunctionSpec& f : suite) {
    for (double p : {0.5, 1.0, 2.0, 3.0}) {
      TransformRecord rec = lemma2_transform(f, p);
      worst_sup = std::max(worst_sup, rec.sup_probe);
      for (int i = 0; i < 10000; ++i) {
        DiskPoint z = DiskPoint::polar(0.995 * std::sqrt(unif(rng)), kTwoPi * unif(rng));
        double lf = log_abs(f, z);
        if (std::isinf(lf)) continue;
        double lf1 = log_abs(rec.f1, z);
        double lg = log_abs(rec.output, z);
        if (lf1 > std::min(0.0, lf) + 1e-10) ++violations;
        if (lg > p * lf1 + 1e-10) ++violations;
      }
      for (int s = 0; s < 10; ++s) {
        PointSet a;
        int count = 20 + static_cast<int>(unif(rng) * 180);
        for (int i = 0; i < count; ++i)
          a.add(DiskPoint::polar(0.999 * std::sqrt(unif(rng)), kTwoPi * unif(rng)));
        double mu_f = std::pow(mu_norm(f, a, p), p);
        double mu_g = mu_norm(rec.output, a, 1.0);
        if (mu_g > mu_f + 1e-12 * std::max(1.0, mu_f)) ++violations;
      }
    }
  }
  std::ostringstream os;
  os << "sup probe max " << worst_sup << ", violations " << violations;
  c.note = os.str();
  c.require(worst_sup <= 1.0 + 1e-8, "||g||_inf probe above 1 + 1e-8");
  c.require(violations == 0, "pointwise or mu-transfer violation");
}

void prop3_certificate(Checker& c) {
  Prop3Params params = Prop3Params::default_schedule(1, 12);
  std::vector<FunctionSpec> gs;
  gs.push_back(FunctionSpec::monomial(1));
  gs.push_back(FunctionSpec::monomial(8));
  gs.push_back(FunctionSpec::blaschke(
      {DiskPoint(0.3, 0.0), DiskPoint(0.0, -0.5), DiskPoint(-0.25, 0.55)}));
  gs.push_back(FunctionSpec::singular_inner(0.0, 1.0));
  ArcSet gap_complement =
      ArcSet::from_arcs({Arc(0.5 * (1.3 + kTwoPi - 0.5), 0.5 * (kTwoPi - 1.8))});
  FunctionSpec om_pow;
  om_pow.multiply(outer_from_gap(gap_complement).terms[0].factor, 10);
  gs.push_back(om_pow);

  // (a) exact Chebyshev count soundness
  for (const FunctionSpec& g : gs)
    for (int n = 1; n <= 12; ++n) {
      CertificateRecord rec = chebyshev_certificate(g, params, n);
      c.require(static_cast<double>(rec.count_above) <=
                    rec.count_bound * (1.0 + 1e-12) + 1e-9,
                "Chebyshev count bound violated");
    }

  // (b) arc-smoothness bound, dense scan on 100 random (n, k) per function
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (const FunctionSpec& g : gs) {
    for (int trial = 0; trial < 100; ++trial) {
      int n = 1 + static_cast<int>(unif(rng) * 11.999);
      double r = params.radius(n);
      double l = params.ell(n);
      std::int64_t pn = params.points(n);
      std::int64_t k = 1 + static_cast<std::int64_t>(unif(rng) * double(pn - 1));
      std::complex<double> at_node = eval(g, DiskPoint::polar(r, double(k) * l));
      double bound = 2.0 * std::ldexp(1.0, n) * l;
      for (int j = 0; j <= 100; ++j) {
        double theta = (double(k) - 0.5) * l + l * j / 100.0;
        c.require(std::abs(eval(g, DiskPoint::polar(r, theta)) - at_node) <=
                      bound + 1e-12,
                  "arc-smoothness bound violated");
      }
    }
  }

  // (c) certified integral bound is a true upper bound wherever premise holds
  int premise_rows = 0;
  for (const FunctionSpec& g : gs) {
    DivergenceReport rep = divergence_report(g, params);
    for (const DivergenceRow& row : rep.rows) {
      if (!row.cert.premise) continue;
      ++premise_rows;
      c.require(row.measured_log_integral <= row.cert.integral_upper_bound + 1e-3,
                "measured log-integral above the certified bound");
    }
  }
  c.require(premise_rows > 0, "no premise rows exercised");

  // (d) singular inner: constant measured integral, unbounded s_n
  DivergenceReport si = divergence_report(FunctionSpec::singular_inner(0.0, 1.0), params);
  double prev_s = 0.0;
  for (const DivergenceRow& row : si.rows) {
    c.require(std::fabs(row.measured_log_integral + 1.0) <= 1e-6,
              "singular-inner log-integral not -1");
    if (row.cert.n >= 6) {
      c.require(row.cert.s_n > prev_s, "singular-inner s_n not increasing on 6..12");
    }
    prev_s = row.cert.s_n;
  }
  std::ostringstream os;
  os << premise_rows << " premise rows certified";
  c.note = os.str();
}

void schwarz_pick(Checker& c) {
  std::vector<FunctionSpec> suite = transform_suite();
  std::mt19937_64 rng(113);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = 0.0;
  for (int idx : bounded_suite_indices()) {
    const FunctionSpec& f = suite[idx];
    for (int i = 0; i < 10000; ++i) {
      DiskPoint z = DiskPoint::polar(0.99 * std::sqrt(unif(rng)), kTwoPi * unif(rng));
      double v = std::abs(eval_derivative(f, z)) * (1.0 - z.abs2());
      worst = std::max(worst, v);
    }
    for (int i = 0; i < 500; ++i) {
      DiskPoint z = DiskPoint::polar(0.8 * std::sqrt(unif(rng)), kTwoPi * unif(rng));
      std::complex<double> exact = eval_derivative(f, z);
      double h = 1e-3;
      auto at = [&](double dx, double dy) {
        return eval(f, DiskPoint(z.re + dx, z.im + dy));
      };
      std::complex<double> fd =
          (-at(2 * h, 0) + 8.0 * at(h, 0) - 8.0 * at(-h, 0) + at(-2 * h, 0)) / (12.0 * h);
      c.require(std::abs(fd - exact) <= 1e-6 * std::max(std::abs(exact), 0.05),
                "derivative does not match finite differences");
    }
  }
  std::ostringstream os;
  os << "max |g'|(1-|z|^2) = " << worst;
  c.note = os.str();
  c.require(worst <= 1.0 + 1e-8, "Schwarz-Pick bound violated");
}

void determinism(Checker& c) {
  ExperimentConfig cfg = default_config("theorem2-divergence");
  cfg.params["points"] = json{{"generator", "rings"}, {"rings", 6}, {"base", 4}};
  cfg.params["check_ring_lo"] = 4;
  cfg.params["check_ring_hi"] = 6;
  Report a = run_theorem2_experiments(cfg);
  Report b = run_theorem2_experiments(cfg);
  c.require(a.to_json().dump() == b.to_json().dump(), "json reports differ on rerun");
  c.require(a.to_csv() == b.to_csv(), "csv reports differ on rerun");
  ExperimentConfig cfg4 = cfg;
  cfg4.threads = 4;
  Report d = run_theorem2_experiments(cfg4);
  c.require(a.to_csv() == d.to_csv(), "numeric fields differ across thread counts");

  ExperimentConfig lc = default_config("lemma2");
  lc.p_ladder = {2.0};
  lc.params["sets"] = 2;
  lc.params["set_size"] = 50;
  lc.params["random_points"] = 1000;
  Report l1 = run_lemma2(lc);
  Report l2 = run_lemma2(lc);
  c.require(l1.to_json().dump() == l2.to_json().dump(), "lemma2 reports differ on rerun");
  c.note = "byte-identical reruns; thread count does not change numeric fields";
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    void (*fn)(Checker&);
  };
  const Entry entries[] = {
      {"lemma1-identity", lemma1_identity},
      {"herglotz-oracle", herglotz_oracle},
      {"omega-structure", omega_structure},
      {"theorem1-converse", theorem1_converse},
      {"theorem1-forward", theorem1_forward},
      {"theorem2-divergence", theorem2_divergence},
      {"lemma2-transform", lemma2_transform_gate},
      {"prop3-certificate", prop3_certificate},
      {"schwarz-pick", schwarz_pick},
      {"determinism", determinism},
  };
  int failures = 0;
  for (const Entry& e : entries) {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.fn(c);
    } catch (const std::exception& ex) {
      c.ok = false;
      c.note = std::string("exception: ") + ex.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %-20s (%6.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", e.name, secs,
                c.note.empty() ? "" : "  ", c.note.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
  }
  std::printf("%d/%d acceptance criteria passed\n",
              static_cast<int>(std::size(entries)) - failures,
              static_cast<int>(std::size(entries)));
  return failures;
}
