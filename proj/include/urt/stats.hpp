#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "urt/canonical.hpp"
#include "urt/network.hpp"
#include "urt/random.hpp"
#include "urt/sampler.hpp"

namespace urt {

/// A (possibly weighted) distribution over canonical depth-r classes.
class EmpiricalRootedDist {
 public:
  EmpiricalRootedDist(int depth, double quantization) : depth_(depth), q_(quantization) {}

  void add(const CanonicalCode& code, double weight = 1.0);
  void add_bytes(const std::string& bytes, double weight);
  /// Folds in another distribution of the same depth and quantization.
  void merge(const EmpiricalRootedDist& other);

  int depth() const { return depth_; }
  double quantization() const { return q_; }
  /// Sum of all weights.
  double total() const { return total_; }
  /// Number of observations; 0 for exactly known laws.
  long samples() const { return samples_; }
  void set_samples(long n) { samples_ = n; }

  double frequency(const std::string& bytes) const;
  double frequency(const CanonicalCode& code) const { return frequency(code.bytes); }
  std::size_t class_count() const { return weights_.size(); }
  const std::unordered_map<std::string, double>& weights() const { return weights_; }

  /// Classes sorted by decreasing frequency, ties by bytes.
  std::vector<std::pair<std::string, double>> sorted_frequencies() const;

 private:
  int depth_;
  double q_;
  double total_ = 0.0;
  long samples_ = 0;
  std::unordered_map<std::string, double> weights_;
};

/// Depth-r classes of `samples` independent draws. Draws are split across
/// kDefaultChunks sub-streams of `seed`, so the result does not depend on the
/// number of worker threads.
EmpiricalRootedDist empirical_distribution(const RootedLawSampler& mu, int depth,
                                           long samples, std::uint64_t seed,
                                           double quantization = 0.0,
                                           int sample_radius = -1);

/// Depth-r classes of U(G): `samples` uniform roots, or every vertex once
/// (an exact law) when samples == 0.
EmpiricalRootedDist empirical_distribution(const RootedNetwork& g, int depth,
                                           long samples, std::uint64_t seed,
                                           double quantization = 0.0);

double tv_distance(const EmpiricalRootedDist& a, const EmpiricalRootedDist& b);

/// Plug-in standard error of the TV statistic: half the sum over classes of
/// the binomial standard deviation of the frequency difference under the
/// pooled frequency. Exact laws contribute no variance.
double tv_standard_error(const EmpiricalRootedDist& a, const EmpiricalRootedDist& b);

struct ClassRow {
  std::string digest;
  double a = 0.0;
  double b = 0.0;
};

struct TestReport {
  std::string test;
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
  long samples = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> diagnostics;
  std::vector<std::string> warnings;
  /// Per-class frequencies of the two compared laws, largest gap first.
  std::vector<ClassRow> per_class;
};

/// Mass f(G, x, y) for adjacent x, y. The function sees ball(G, x, locality)
/// rooted at x with y as the second root, and must satisfy |f| <= bound.
struct MassFunction {
  std::string name;
  std::function<double(const DoublyRootedNetwork&)> f;
  int locality = 1;
  double bound = 1.0;
};

MassFunction mass_one();
/// f(G, u, v) = 1{deg u = 1}.
MassFunction mass_leaf_sender();

inline constexpr double kMtpZThreshold = 2.5758293035489;  // two-sided 1%

/// Compares E[sum_{x~o} f(G,o,x)] with E[sum_{x~o} f(G,x,o)] through the
/// per-sample difference D; statistic |mean D| / SE(mean D).
TestReport mtp_test(const RootedLawSampler& mu, const MassFunction& f, long samples,
                    std::uint64_t seed, double threshold = kMtpZThreshold);

enum class Calibration { multiplier_bootstrap, seed_harness };

struct InvolutionOptions {
  int depth = 1;
  double quantization = 0.0;
  Calibration calibration = Calibration::multiplier_bootstrap;
  int replicates = 100;
  double quantile = 0.99;
  /// Fixed threshold; overrides calibration when > 0.
  double fixed_threshold = 0.0;
};

/// Degree-weighted TV between the class of (ball_r(o), o') and of
/// (ball_r(o'), o) for o' a uniform neighbor of o. The pass threshold is the
/// `quantile` of the null distribution of the statistic at this sample size.
TestReport involution_test(const RootedLawSampler& mu, long samples, std::uint64_t seed,
                           const InvolutionOptions& options = {});

/// Vertex weights deg x / sum deg. Throws DomainError on isolated vertices.
std::vector<double> degree_biased(const RootedNetwork& g);

/// max_y |sum_x deg(x) P(x -> y) - deg(y)| for simple random walk.
double stationarity_residual(const RootedNetwork& g);

struct TightnessRow {
  double mean_degree = 0.0;
  double p_uniform = 0.0;   // P[F_r^M] under U(G)
  double p_biased = 0.0;    // P[F_r^M] under D(G)
  double ui_tail = 0.0;     // E_U[deg 1{deg > M}]
};

struct TightnessReport {
  int r = 0;
  int M = 0;
  double epsilon = 0.0;
  std::vector<TightnessRow> rows;
  double sup_uniform = 0.0;
  double sup_biased = 0.0;
  double sup_ui_tail = 0.0;
  bool tight = false;
};

/// F_r^M: some vertex within distance r of the root has degree > M. Computed
/// exactly over every vertex of each family member. `tight` holds when both
/// suprema are <= epsilon.
TightnessReport tightness_report(const std::vector<RootedNetwork>& family, int r, int M,
                                 double epsilon = 0.01);

/// TV(U(G_n), target) at depth r for each member, with U(G_n) sampled at
/// `samples` roots (exact when 0).
std::vector<double> convergence_check(const std::vector<RootedNetwork>& sequence,
                                      const EmpiricalRootedDist& target, long samples,
                                      std::uint64_t seed);

/// TV(U(G_n), U(G_{n+1})) at depth r, exact.
std::vector<double> cauchy_trend(const std::vector<RootedNetwork>& sequence, int depth,
                                 double quantization = 0.0);

/// Depth-r statistics drawn at two sampling radii; TV compared to 3 standard
/// errors.
TestReport consistency_test(const RootedLawSampler& mu, int depth, int radius_a,
                            int radius_b, long samples, std::uint64_t seed,
                            double quantization = 0.0);

/// TV(mu_d, mu) at `depth` for each d, with mu_d and mu computed from the
/// same draws.
std::vector<double> truncation_tv_profile(const RootedLawSampler& mu,
                                          const std::vector<int>& degrees, int depth,
                                          long samples, std::uint64_t seed);

}  // namespace urt
