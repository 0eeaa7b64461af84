#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hardy/disk_geometry.hpp"
#include "hardy/function_model.hpp"

namespace hardy {

// Discrete candidate sampling set.  Each point carries the mu-weight 1-|z|^2;
// generators may store the structural weight (e.g. exactly 2^{-n}), which is
// validated against the computed value to 1e-12 absolute.
class PointSet {
 public:
  struct Entry {
    DiskPoint z;
    double weight = 0.0;  // 1 - |z|^2
    int generation = -1;
  };

  void add(const DiskPoint& z, int generation = -1) {
    entries_.push_back({z, 1.0 - z.abs2(), generation});
  }
  void add_weighted(const DiskPoint& z, double weight, int generation = -1);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

struct SamplingReport {
  double p = 1.0;
  double alpha = 1.0;
  int grid_size = 0;  // 0: exact event-sweep path
  double f_norm = 0.0;
  double maximal_norm = 0.0;
  double ratio = 0.0;
  double ceiling = 0.0;  // configured upper bound C_{p,alpha}
  bool ceiling_ok = true;
  std::vector<std::pair<double, double>> theta_dump;  // optional (theta, M_a)
};

struct IdentityCheck {
  double lhs = 0.0;  // int M_{a,p}^p dtheta (unnormalized, as printed)
  double rhs = 0.0;  // sum |f(z)|^p measure(I_z)
  double relative_error = 0.0;
};

// sup of |f| over Gamma_alpha(e^{i theta}) cap a; empty intersection -> 0.
double m_a(const FunctionSpec& f, const PointSet& a, double theta, StolzParams alpha);

// (sum over Gamma cap a of |f|^p)^{1/p}; always >= m_a.
double m_a_p(const FunctionSpec& f, const PointSet& a, double theta, StolzParams alpha,
             double p);

// (sum (1-|z|^2) |f(z)|^p)^{1/p} in fixed point order.
double mu_norm(const FunctionSpec& f, const PointSet& a, double p);

// L^p(dtheta/2pi) norm of theta -> m_a(f,a,theta,alpha).  Each point
// contributes |f(z)| on its exact dual arc I_z; the piecewise-constant max is
// integrated exactly by an endpoint sweep (no theta grid).
double m_a_lp_norm(const FunctionSpec& f, const PointSet& a, double p, StolzParams alpha,
                   int threads = 1);

// Dense theta-grid fallback, kept as a validation oracle for the sweep.
double m_a_lp_norm_grid(const FunctionSpec& f, const PointSet& a, double p,
                        StolzParams alpha, int grid_size);

// ratio = ||M_a f||_p / ||f||_p, plus the configured upper-bound check.
SamplingReport sampling_ratio(const FunctionSpec& f, const PointSet& a, double p,
                              StolzParams alpha, double ceiling = 64.0,
                              int dump_grid = 0);

// Both sides of the exact arc identity
//   int_0^{2pi} M_{a,p}(f)^p dtheta = sum_z |f(z)|^p lambda_1(I_z),
// computed by independent code paths (sweep vs direct sum).
IdentityCheck lemma1_identity_check(const FunctionSpec& f, const PointSet& a, double p,
                                    StolzParams alpha);

// lambda_1 measure of { theta : exists z in a, |z| >= 1 - 1/N, z in
// Gamma_alpha(e^{i theta}) }, by exact interval merge.  Nonincreasing in N;
// lower-bounds the measure of NT(a) at this aperture.
double nt_coverage(const PointSet& a, StolzParams alpha, int depth);

namespace detail {

// Sorted endpoint events of a fixed arc family; reusable across value sets.
struct SweepPlan {
  struct Event {
    double angle;
    std::int32_t idx;
    bool add;
  };
  std::vector<Event> events;

  static SweepPlan build(std::span<const Arc> arcs);
};

// Piecewise-max profile of the arc contributions: disjoint segments of total
// length 2pi with, per segment, the max over covering arcs of an attached
// value.  `covered` distinguishes empty segments (value 0) from genuine
// maxima, so callers may attach signed values.
struct MaxProfile {
  std::vector<double> length;
  std::vector<double> value;
  std::vector<char> covered;
};

MaxProfile max_profile(const SweepPlan& plan, std::span<const double> values);
MaxProfile max_profile(std::span<const Arc> arcs, std::span<const double> values);

}  // namespace detail

}  // namespace hardy
