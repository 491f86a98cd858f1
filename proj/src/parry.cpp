#include "snakestat/parry.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <stdexcept>

#include "snakestat/snake.hpp"
#include "snakestat/spine.hpp"
#include "snakestat/states.hpp"

namespace snakestat {

namespace {

Eigen::MatrixXd dense_matrix(const TransitionMatrix& m) {
  Eigen::MatrixXd a(kNumStates, kNumStates);
  for (int i = 0; i < kNumStates; ++i)
    for (int j = 0; j < kNumStates; ++j) a(i, j) = m.at(i, j) ? 1.0 : 0.0;
  return a;
}

}  // namespace

PerronData compute_perron(const TransitionMatrix& m, double tol, int max_iter) {
  Eigen::MatrixXd a = dense_matrix(m);
  PerronData pd;
  auto iterate = [&](const Eigen::MatrixXd& mat, Eigen::VectorXd& vec) {
    vec = Eigen::VectorXd::Ones(kNumStates);
    double lam = 0;
    int it = 0;
    for (; it < max_iter; ++it) {
      Eigen::VectorXd nxt = mat * vec;
      lam = nxt.maxCoeff();
      nxt /= lam;
      double delta = (nxt - vec).cwiseAbs().maxCoeff();
      vec = nxt;
      if (delta < tol) break;
    }
    pd.iterations = std::max(pd.iterations, it);
    if (it >= max_iter) throw std::runtime_error("compute_perron: no convergence");
    return lam;
  };
  double lr = iterate(a, pd.v);
  double ll = iterate(a.transpose(), pd.u);
  pd.lambda = (lr + ll) / 2;
  // normalize sum u_i v_i = 1
  double s = pd.u.dot(pd.v);
  pd.u /= s;
  pd.residual_right = (a * pd.v - pd.lambda * pd.v).cwiseAbs().maxCoeff() /
                      pd.v.cwiseAbs().maxCoeff();
  pd.residual_left =
      (a.transpose() * pd.u - pd.lambda * pd.u).cwiseAbs().maxCoeff() /
      pd.u.cwiseAbs().maxCoeff();
  return pd;
}

ParryData::ParryData(const TransitionMatrix& m) : m_(&m) {
  perron_ = compute_perron(m);
  pi_ = Eigen::VectorXd(kNumStates);
  q_ = Eigen::MatrixXd::Zero(kNumStates, kNumStates);
  for (int i = 0; i < kNumStates; ++i) {
    pi_(i) = perron_.u(i) * perron_.v(i);
    for (int j = 0; j < kNumStates; ++j)
      if (m.at(i, j)) q_(i, j) = perron_.v(j) / (perron_.lambda * perron_.v(i));
  }
  pi_cdf_.resize(kNumStates);
  double acc = 0;
  for (int i = 0; i < kNumStates; ++i) {
    acc += pi_(i);
    pi_cdf_[i] = acc;
  }
}

const ParryData& ParryData::instance() {
  static ParryData p(TransitionMatrix::instance());
  return p;
}

double ParryData::cylinder_measure(const std::vector<int>& s) const {
  if (s.empty()) return 1.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (!m_->at(s[i], s[i + 1]))
      throw std::invalid_argument("cylinder_measure: invalid string");
  double nu = pi_(s[0]);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) nu *= q_(s[i], s[i + 1]);
  return nu;
}

std::vector<int> ParryData::sample_path(int length, Rng& rng) const {
  if (length < 1) throw std::invalid_argument("sample_path: length >= 1");
  std::vector<int> out;
  out.reserve(length);
  double r = rng.next_double();
  int s0 = kNumStates - 1;
  for (int i = 0; i < kNumStates; ++i)
    if (r <= pi_cdf_[i]) {
      s0 = i;
      break;
    }
  out.push_back(s0);
  while (static_cast<int>(out.size()) < length) {
    int cur = out.back();
    double rr = rng.next_double();
    double acc = 0;
    int pick = -1;
    for (int j : m_->successors(cur)) {
      acc += q_(cur, j);
      if (rr <= acc) {
        pick = j;
        break;
      }
    }
    if (pick < 0) pick = m_->successors(cur).back();
    out.push_back(pick);
  }
  return out;
}

namespace {

// Exact E_nu [ f(Z_1..Z_k) ] by summing f over all valid k-strings with
// their cylinder measures.
template <typename F>
double exact_cylinder_sum(const ParryData& p, int k, F&& f) {
  std::vector<int> s(k);
  double total = 0;
  const auto& m = p.matrix();
  std::function<void(int, double)> rec = [&](int depth, double nu) {
    if (depth == k) {
      total += f(s) * nu;
      return;
    }
    if (depth == 0) {
      for (int i = 0; i < kNumStates; ++i) {
        s[0] = i;
        rec(1, p.pi()(i));
      }
      return;
    }
    for (int j : m.successors(s[depth - 1])) {
      s[depth] = j;
      rec(depth + 1, nu * p.q()(s[depth - 1], j));
    }
  };
  rec(0, 1.0);
  return total;
}

}  // namespace

Estimate hoeffding(const ParryData& p, const std::vector<int>& z, int k,
                   long long mc_samples, std::uint64_t seed, int exact_cap) {
  if (static_cast<int>(z.size()) < k)
    throw std::invalid_argument("hoeffding: z shorter than k");
  if (k <= exact_cap) {
    double v = exact_cylinder_sum(p, k, [&](const std::vector<int>& s) {
      return static_cast<double>(h_k(z, s, k));
    });
    return {v, 0.0, true};
  }
  Rng rng(seed, 0x480EFF);
  double sum = 0, sumsq = 0;
  for (long long t = 0; t < mc_samples; ++t) {
    auto zpath = p.sample_path(k, rng);
    double val = h_k(z, zpath, k);
    sum += val;
    sumsq += val * val;
  }
  double mean = sum / mc_samples;
  double var = std::max(0.0, sumsq / mc_samples - mean * mean);
  return {mean, std::sqrt(var / mc_samples), false};
}

Estimate hoeffding_sum(const ParryData& p, const std::vector<int>& z, int k_max,
                       long long mc_samples, std::uint64_t seed, int exact_cap) {
  double head = 0;
  for (int k = 1; k <= std::min(k_max, exact_cap); ++k)
    head += hoeffding(p, z, k, 0, seed, exact_cap).value;
  if (k_max <= exact_cap) return {head, 0.0, true};
  Rng rng(seed, 0x5EAD);
  double sum = 0, sumsq = 0;
  for (long long t = 0; t < mc_samples; ++t) {
    auto zpath = p.sample_path(k_max, rng);
    double val = 0;
    for (int k = exact_cap + 1; k <= k_max; ++k) val += h_k(z, zpath, k);
    sum += val;
    sumsq += val * val;
  }
  double mean = sum / mc_samples;
  double var = std::max(0.0, sumsq / mc_samples - mean * mean);
  return {head + mean, std::sqrt(var / mc_samples), false};
}

namespace {

std::vector<int> periodic_states(std::initializer_list<const char*> tokens, int length) {
  std::vector<int> base;
  for (const char* t : tokens)
    base.push_back(StateAlphabet::instance().index_of(*SnakeState::from_token(t)));
  std::vector<int> out;
  for (int i = 0; i < length; ++i) out.push_back(base[i % base.size()]);
  return out;
}

}  // namespace

Estimate cohomology_gap(const ParryData& p, int k_max, long long mc_samples,
                        std::uint64_t seed) {
  const int exact_cap = 6;
  std::vector<int> x = periodic_states({"A:a", "A:C"}, k_max);
  std::vector<int> y = periodic_states({"ApR:a", "ApL:b"}, k_max);
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (!p.matrix().at(x[i], x[i + 1]) || !p.matrix().at(y[i], y[i + 1]))
      throw std::logic_error("cohomology_gap: periodic words violate transitions");

  double head = 0;
  for (int k = 1; k <= std::min(k_max, exact_cap); ++k) {
    head += hoeffding(p, x, k, 0, seed, exact_cap).value;
    head -= hoeffding(p, y, k, 0, seed, exact_cap).value;
  }
  if (k_max <= exact_cap) return {head, 0.0, true};
  // Paired tail: the same Z serves both arguments.
  Rng rng(seed, 0xC0503);
  double sum = 0, sumsq = 0;
  for (long long t = 0; t < mc_samples; ++t) {
    auto z = p.sample_path(k_max, rng);
    double val = 0;
    for (int k = exact_cap + 1; k <= k_max; ++k) val += h_k(x, z, k) - h_k(y, z, k);
    sum += val;
    sumsq += val * val;
  }
  double mean = sum / mc_samples;
  double var = std::max(0.0, sumsq / mc_samples - mean * mean);
  return {head + mean, std::sqrt(var / mc_samples), false};
}

Estimate kappa_direct(const ParryData& p, int k_max, long long mc_samples,
                      std::uint64_t seed) {
  Rng rng(seed, 0xCA99A);
  double sum = 0, sumsq = 0;
  for (long long t = 0; t < mc_samples; ++t) {
    auto x = p.sample_path(k_max, rng);
    auto z = p.sample_path(k_max, rng);
    double val = 0;
    for (int k = 1; k <= k_max; ++k) val += h_k(x, z, k);
    sum += val;
    sumsq += val * val;
  }
  double mean = sum / mc_samples;
  double var = std::max(0.0, sumsq / mc_samples - mean * mean);
  return {mean, std::sqrt(var / mc_samples), false};
}

namespace {

Moments weighted_moments(const std::vector<std::pair<double, double>>& vw) {
  double W = 0, m1 = 0;
  for (auto& [v, w] : vw) {
    W += w;
    m1 += w * v;
  }
  m1 /= W;
  double m2 = 0, m3 = 0, m4 = 0;
  for (auto& [v, w] : vw) {
    double d = v - m1;
    m2 += w * d * d;
    m3 += w * d * d * d;
    m4 += w * d * d * d * d;
  }
  m2 /= W;
  m3 /= W;
  m4 /= W;
  Moments mo;
  mo.mean = m1;
  mo.variance = m2;
  mo.skewness = m2 > 0 ? m3 / std::pow(m2, 1.5) : 0;
  mo.excess_kurtosis = m2 > 0 ? m4 / (m2 * m2) - 3.0 : 0;
  return mo;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double ks_against_normal(const std::map<long long, double>& hist, double shift,
                         double scale, double sigma) {
  double W = 0;
  for (auto& [v, w] : hist) W += w;
  double cum = 0, worst = 0;
  for (auto& [v, w] : hist) {
    double z = (static_cast<double>(v) - shift) / scale;
    double lo = cum / W;
    cum += w;
    double hi = cum / W;
    double f = sigma > 0 ? normal_cdf(z / sigma) : (z < 0 ? 0.0 : 1.0);
    worst = std::max({worst, std::abs(f - lo), std::abs(f - hi)});
  }
  return worst;
}

}  // namespace

ExperimentResult run_experiment(const ParryData& p, const std::string& mode, int n,
                                const ExperimentOptions& opt) {
  ExperimentResult res;
  res.n = n;
  res.mode = mode;
  const auto& m = p.matrix();

  if (mode == "exhaustive") {
    if (n > opt.exhaustive_cap)
      throw std::length_error("run_experiment: exhaustive cap exceeded");
    BigCount tuples = m.trace_power(n);
    if (tuples.to_double() <= static_cast<double>(opt.orbit_budget)) {
      m.enumerate_periodic(n, [&](const std::vector<int>& orbit, int d) {
        long long N = intersection_number(orbit);
        res.histogram[N] += d;
      }, std::max(n, 14));
    } else {
      res.subsampled = true;
      Rng rng(opt.seed, 0xE7);
      for (long long t = 0; t < opt.samples; ++t) {
        auto orbit = m.sample_periodic(n, rng);
        res.histogram[intersection_number(orbit)] += 1;
      }
    }
  } else if (mode == "sampled") {
    Rng rng(opt.seed, 0x5A);
    std::vector<std::vector<int>> shifts(n + 1);
    for (long long t = 0; t < opt.samples; ++t) {
      auto path = p.sample_path(n + opt.k_max, rng);
      for (int i = 1; i <= n; ++i)
        shifts[i].assign(path.begin() + i, path.end());
      long long N = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) N += pair_h(shifts[i], shifts[j], opt.k_max);
      res.histogram[N] += 1;
    }
  } else {
    throw std::invalid_argument("run_experiment: unknown mode");
  }

  double W = 0, sumN = 0;
  for (auto& [v, w] : res.histogram) {
    W += w;
    sumN += w * static_cast<double>(v);
  }
  res.weight = W;
  res.kappa_hat = sumN / W / (static_cast<double>(n) * n);
  const double scale = std::pow(static_cast<double>(n), 1.5);
  const double shift = res.kappa_hat * n * n;
  std::vector<std::pair<double, double>> vw;
  vw.reserve(res.histogram.size());
  for (auto& [v, w] : res.histogram)
    vw.emplace_back((static_cast<double>(v) - shift) / scale, w);
  res.normalized = weighted_moments(vw);
  res.sigma2_hat = res.normalized.variance;
  res.ks_distance =
      ks_against_normal(res.histogram, shift, scale, std::sqrt(res.sigma2_hat));
  return res;
}

GrowthFit growth_fit(const TransitionMatrix& m, const PerronData& pd, int n_lo, int n_hi) {
  GrowthFit fit;
  std::vector<double> xs, ys;
  for (int n = n_lo; n <= n_hi; ++n) {
    double r = std::abs(m.trace_power(n).to_double() / std::pow(pd.lambda, n) - 1.0);
    fit.residuals.push_back(r);
    if (r <= 0) continue;
    xs.push_back(n);
    ys.push_back(std::log(r));
  }
  const double N = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  double slope = (N * sxy - sx * sy) / (N * sxx - sx * sx);
  double inter = (sy - slope * sx) / N;
  double ss_tot = syy - sy * sy / N;
  double ss_res = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double e = ys[i] - (inter + slope * xs[i]);
    ss_res += e * e;
  }
  fit.beta = std::exp(slope);
  fit.log_c = inter;
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 0.0;
  return fit;
}

}  // namespace snakestat
