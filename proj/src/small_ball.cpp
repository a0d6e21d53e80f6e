#include "shiftlab/small_ball.hpp"

#include <cmath>
#include <stdexcept>

#include "shiftlab/rng.hpp"

namespace shiftlab {

namespace {

double f1_at(const LinkFunction& f, double mu, const QuadratureRule& rule) {
  if (!f.kinks.empty()) {
    std::vector<double> bp;
    bp.reserve(f.kinks.size());
    for (double k : f.kinks) bp.push_back(k - mu);
    return gauss_expect_piecewise(
        [&](double z) { return f.eval(z + mu) * z; }, bp);
  }
  double s = 0.0;
  for (int i = 0; i < rule.order; ++i)
    s += rule.weights[i] * f.eval(rule.nodes[i] + mu) * rule.nodes[i];
  return s;
}

}  // namespace

std::vector<double> sample_f1_draws(const LinkFunction& f, long n,
                                    std::uint64_t seed,
                                    const QuadratureRule& rule, bool parallel) {
  std::vector<double> out(n);
#pragma omp parallel for schedule(static) if (parallel)
  for (long i = 0; i < n; ++i) {
    SplitMix64 g = stream_rng(seed, std::uint64_t(i));
    double mu = normal01(g);
    out[i] = std::abs(f1_at(f, mu, rule));
  }
  return out;
}

SmallBallEstimate small_ball_probability(const LinkFunction& f, double lambda,
                                         long n_samples, std::uint64_t seed,
                                         const QuadratureRule& rule,
                                         bool parallel) {
  if (n_samples < 100)
    throw std::invalid_argument("small_ball_probability: n_samples must be >= 100");
  auto draws = sample_f1_draws(f, n_samples, seed, rule, parallel);
  long hits = 0;
  for (double v : draws)
    if (v <= lambda) ++hits;
  SmallBallEstimate est;
  est.estimate = double(hits) / double(n_samples);
  est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / double(n_samples));
  est.n_samples = n_samples;
  est.seed = seed;
  return est;
}

std::vector<SmallBallEstimate> small_ball_sweep(const LinkFunction& f,
                                                const std::vector<double>& lambdas,
                                                long n_samples,
                                                std::uint64_t seed,
                                                const QuadratureRule& rule,
                                                bool parallel) {
  if (n_samples < 100)
    throw std::invalid_argument("small_ball_sweep: n_samples must be >= 100");
  auto draws = sample_f1_draws(f, n_samples, seed, rule, parallel);
  std::vector<SmallBallEstimate> rows;
  rows.reserve(lambdas.size());
  for (double lambda : lambdas) {
    long hits = 0;
    for (double v : draws)
      if (v <= lambda) ++hits;
    SmallBallEstimate est;
    est.estimate = double(hits) / double(n_samples);
    est.std_error =
        std::sqrt(est.estimate * (1.0 - est.estimate) / double(n_samples));
    est.n_samples = n_samples;
    est.seed = seed;
    rows.push_back(est);
  }
  return rows;
}

double smallball_exponent_fit(const std::vector<double>& lambdas,
                              const std::vector<double>& estimates) {
  // regress log p on t = log(1/lambda)^{2/3}
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (estimates[i] <= 0.0 || lambdas[i] <= 0.0 || lambdas[i] >= 1.0) continue;
    double t = std::pow(std::log(1.0 / lambdas[i]), 2.0 / 3.0);
    double y = std::log(estimates[i]);
    sx += t;
    sy += y;
    sxx += t * t;
    sxy += t * y;
    ++n;
  }
  if (n < 2) return 0.0;
  double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-300) return 0.0;
  return (n * sxy - sx * sy) / denom;
}

}  // namespace shiftlab
