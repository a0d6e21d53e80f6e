#pragma once

#include <cstdint>
#include <vector>

#include "shiftlab/hermite.hpp"
#include "shiftlab/link_function.hpp"

namespace shiftlab {

struct SmallBallEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  long n_samples = 0;
  std::uint64_t seed = 0;
};

// |F_1(mu_j)| for n draws mu_j ~ N(0,1), one counter-derived stream per
// draw. Identical output for any thread count; `parallel=false` is the
// serial reference used in tests and the kernel benchmark.
std::vector<double> sample_f1_draws(const LinkFunction& f, long n,
                                    std::uint64_t seed,
                                    const QuadratureRule& rule,
                                    bool parallel = true);

// Monte-Carlo estimate of P_{mu~N(0,1)}(|F_1(mu)| <= lambda) with binomial
// standard error. Requires n_samples >= 100.
SmallBallEstimate small_ball_probability(const LinkFunction& f, double lambda,
                                         long n_samples, std::uint64_t seed,
                                         const QuadratureRule& rule,
                                         bool parallel = true);

// One row per lambda, all rows sharing the same draws, so estimates are
// exactly monotone in lambda.
std::vector<SmallBallEstimate> small_ball_sweep(const LinkFunction& f,
                                                const std::vector<double>& lambdas,
                                                long n_samples,
                                                std::uint64_t seed,
                                                const QuadratureRule& rule,
                                                bool parallel = true);

// Least-squares slope of log p against log(1/lambda)^{2/3} over the rows
// with p > 0: the empirical exponent of the small-ball bound, reported
// without asserting a constant.
double smallball_exponent_fit(const std::vector<double>& lambdas,
                              const std::vector<double>& estimates);

}  // namespace shiftlab
