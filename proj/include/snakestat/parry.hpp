#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "snakestat/markov.hpp"
#include "snakestat/rng.hpp"

namespace snakestat {

// Perron eigendata of the transition matrix: leading eigenvalue with left
// and right eigenvectors, normalized so sum u_i v_i = 1.  Deterministic
// power iteration from the all-ones vector.
struct PerronData {
  double lambda = 0;
  Eigen::VectorXd u, v;
  double residual_left = 0, residual_right = 0;
  int iterations = 0;
};

PerronData compute_perron(const TransitionMatrix& m, double tol = 1e-14,
                          int max_iter = 200000);

// Maximal-entropy (Parry) measure: pi_i = u_i v_i and
// q_ij = a_ij v_j / (lambda v_i).
class ParryData {
 public:
  explicit ParryData(const TransitionMatrix& m);

  const TransitionMatrix& matrix() const { return *m_; }
  const PerronData& perron() const { return perron_; }
  const Eigen::VectorXd& pi() const { return pi_; }
  const Eigen::MatrixXd& q() const { return q_; }

  // nu of the cylinder over a valid state string (telescoped product,
  // equal to u_{s_1} v_{s_n} / lambda^{n-1}).  Throws on invalid strings.
  double cylinder_measure(const std::vector<int>& s) const;

  // Stationary path: first state from pi, steps from q rows.
  std::vector<int> sample_path(int length, Rng& rng) const;

  static const ParryData& instance();

 private:
  const TransitionMatrix* m_;
  PerronData perron_;
  Eigen::VectorXd pi_;
  Eigen::MatrixXd q_;
  std::vector<double> pi_cdf_;
};

struct Estimate {
  double value = 0;
  double std_error = 0;
  bool exact = false;
};

// Hoeffding projection H_k(z) = E_nu h_k(z, Z): exact summation over
// cylinders for k <= exact_cap, Monte Carlo beyond.
Estimate hoeffding(const ParryData& p, const std::vector<int>& z, int k,
                   long long mc_samples, std::uint64_t seed, int exact_cap = 6);

// H(z) truncated at k_max: exact head plus one Monte Carlo tail batch.
Estimate hoeffding_sum(const ParryData& p, const std::vector<int>& z, int k_max,
                       long long mc_samples, std::uint64_t seed, int exact_cap = 6);

// H(x) - H(y) for the periodic straight path x = (A:a A:C)^inf and the
// zig-zag y = (ApR:a ApL:b)^inf, truncated at k_max, with a paired Monte
// Carlo tail.  Positive with high confidence; the returned std_error is
// that of the paired estimate.
Estimate cohomology_gap(const ParryData& p, int k_max, long long mc_samples,
                        std::uint64_t seed);

// kappa = E_nu H(X), estimated by independent-pair Monte Carlo.
Estimate kappa_direct(const ParryData& p, int k_max, long long mc_samples,
                      std::uint64_t seed);

struct Moments {
  double mean = 0, variance = 0, skewness = 0, excess_kurtosis = 0;
};

struct ExperimentResult {
  int n = 0;
  std::string mode;        // "exhaustive" or "sampled"
  bool subsampled = false; // exhaustive fell back to a uniform subsample
  double weight = 0;       // tuples visited (or samples drawn)
  double kappa_hat = 0;
  double sigma2_hat = 0;
  Moments normalized;      // of (N - kappa_hat n^2) / n^(3/2)
  double ks_distance = 0;  // to Normal(0, sigma_hat)
  std::map<long long, double> histogram;  // N value -> weight
};

struct ExperimentOptions {
  int exhaustive_cap = 12;           // refuse exhaustive n beyond this
  long long orbit_budget = 30000000; // fall back to subsampling beyond
  long long samples = 200000;        // sampled mode / subsample size
  int k_max = 12;                    // kernel truncation in sampled mode
  std::uint64_t seed = 1;
  int threads = 1;
};

ExperimentResult run_experiment(const ParryData& p, const std::string& mode, int n,
                                const ExperimentOptions& opt);

// Fit of |trace(A^n)/lambda^n - 1| ~ C beta^n over the given range.
struct GrowthFit {
  double beta = 0, log_c = 0, r_squared = 0;
  std::vector<double> residuals;  // the fitted quantity per n
};
GrowthFit growth_fit(const TransitionMatrix& m, const PerronData& pd, int n_lo = 5,
                     int n_hi = 30);

}  // namespace snakestat
