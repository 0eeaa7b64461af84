#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hardy/disk_geometry.hpp"
#include "hardy/function_model.hpp"
#include "hardy/sampling_analysis.hpp"

namespace hardy {

// Truncated generation schedule for the one-point accumulation sequence
//   a_{n,k} = (1 - 2^{-n})^{1/2} e^{i k ell_n},  k = 0..p_n,
// with gamma_n = 2^n / (2 p_n) and ell_n = p_n^{-1} |log gamma_n|^{-1/2}.
struct Prop3Params {
  int n_min = 1;
  int n_max = 12;
  std::vector<std::int64_t> schedule;  // p_n for n = n_min..n_max

  // default schedule p_n = n 2^n (2^{-n} p_n = n, strictly increasing)
  static Prop3Params default_schedule(int n_min = 1, int n_max = 12);
  static Prop3Params from_schedule(int n_min, std::vector<std::int64_t> p);

  std::int64_t points(int n) const { return schedule.at(static_cast<std::size_t>(n - n_min)); }
  double gamma(int n) const;   // 2^n / (2 p_n), must be < 1
  double ell(int n) const;     // p_n^{-1} |log gamma_n|^{-1/2}
  double radius(int n) const;  // (1 - 2^{-n})^{1/2}
  double span(int n) const { return static_cast<double>(points(n)) * ell(n); }
  void validate() const;
};

// Per-generation ledger of the divergence argument.  Integral-type fields use
// the dtheta/2pi convention of log_integral; geometric fields are raw radians.
struct CertificateRecord {
  int n = 0;
  std::int64_t p_n = 0;
  double gamma_n = 0.0;
  double ell_n = 0.0;
  double s_n = 0.0;                   // 2^{-n} sum_{k=1..p_n} |g(a_{n,k})|
  double count_bound = 0.0;           // 2^n s_n / gamma_n >= #A_n
  std::int64_t count_above = 0;       // exact #{k : |g(a_{n,k})| >= gamma_n}
  bool premise = false;               // s_n <= 1/4, forcing #A'_n >= p_n/2
  double covered_measure = 0.0;       // #A'_n * ell_n (J-arcs are disjoint)
  double per_point_log_bound = 0.0;   // log(gamma_n + 2 * 2^n * ell_n)
  double integral_upper_bound = 0.0;  // (covered/2pi) * min(0, bound), 0 if premise fails
  double target_rate = 0.0;           // -|log gamma_n|^{1/2} / 2pi
};

struct DivergenceRow {
  CertificateRecord cert;
  double measured_log_integral = 0.0;  // log_integral(g, r_n), dtheta/2pi
};

struct DivergenceReport {
  std::vector<DivergenceRow> rows;
  bool certificate_sound = true;  // measured <= bound + tol wherever premise holds
  bool s_summable = false;        // finite-truncation surrogate: sum s_n <= budget
  double soundness_tol = 1e-3;
  double summable_budget = 1.0;
  double rescale = 1.0;  // applied normalization when the probe sup exceeded 1
};

struct FloorEstimate {
  double floor = 0.0;    // min of -log|omega_A| over the accepted samples
  int samples_outside = 0;
  int budget = 0;
};

// omega_A = exp(-Herglotz(1 - 1_A)): boundary modulus 1 on A, e^{-1} off A;
// -log|omega_A| is the harmonic measure of the complementary boundary set.
FunctionSpec outer_from_gap(const ArcSet& A);

// Empirical floor c_alpha: min of -log|omega_A(z)| over quasi-random z outside
// the Stolz star of A, stratified by 1-|z| in {2^{-k}}.
FloorEstimate harmonic_measure_floor(const ArcSet& A, StolzParams alpha, int sample_budget);

// f_n(z) = z^n omega_A(z)^n; the gap witness family of the converse argument.
FunctionSpec gap_witness_family(const ArcSet& A, int n);

// The a_{n,k} rings (k = 0..p_n per generation, structural weight 2^{-n}).
PointSet prop3_pointset(const Prop3Params& params);

// For each Blaschke zero b_n: q_n points equispaced on the circle of radius
// q_n^{-1} (1-|b_n|^2)^2 / 2 around b_n (inside the stated cluster disk).
PointSet cluster_pointset(std::span<const DiskPoint> blaschke_zeros,
                          std::span<const std::int64_t> q);

// Chebyshev count + Schwarz-Pick arc bound for one generation; requires
// ||g||_inf <= 1 (rescale upstream if the probe exceeds 1).
CertificateRecord chebyshev_certificate(const FunctionSpec& g, const Prop3Params& params,
                                        int n);

// Certified upper bounds vs directly measured log-integrals, per generation.
DivergenceReport divergence_report(const FunctionSpec& g, const Prop3Params& params,
                                   double soundness_tol = 1e-3,
                                   double summable_budget = 1.0);

}  // namespace hardy
