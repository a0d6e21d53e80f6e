#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "shiftlab/link_function.hpp"

namespace shiftlab {

inline constexpr int kMaxHermiteOrder = 60;

// Normalized (unit L2(gamma) norm) Hermite polynomial H_k(x), stable
// three-term recurrence. Throws for k > kMaxHermiteOrder.
double hermite_eval(int k, double x);

// Quadrature against the standard Gaussian measure: sum_i w_i g(x_i)
// approximates E_{z~N(0,1)}[g(z)]. Weights sum to 1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;

  double expect(const std::function<double(double)>& g) const {
    double s = 0.0;
    for (int i = 0; i < order; ++i) s += weights[i] * g(nodes[i]);
    return s;
  }
};

// Gauss-Hermite rule of the given order (2..256), Newton iteration on the
// recurrence.
QuadratureRule gauss_hermite_rule(int order);

// E_{z~N(0,1)}[g(z)] by composite Gauss-Legendre panels on [-tail, tail],
// split at the given breakpoints. Machine precision for piecewise-smooth g;
// this is the path for links with kinks, where a fixed Gauss-Hermite rule
// converges only algebraically.
double gauss_expect_piecewise(const std::function<double(double)>& g,
                              std::span<const double> breakpoints,
                              double tail = 10.0);

// Truncated Hermite spectrum of f_mu = f(. + mu).
struct HermiteSpectrum {
  std::vector<double> coeffs;  // indexed 0..truncation_K
  int truncation_K = 0;
  double shift_mu = 0.0;
};

// f_mu(k) = E[f(z+mu) H_k(z)]. Smooth links use the supplied rule; links
// that declare kinks are routed through the kink-splitting integrator.
// Requires rule.order >= 2k+8.
double hermite_coefficient(const LinkFunction& f, int k, double mu,
                           const QuadratureRule& rule);

HermiteSpectrum compute_spectrum(const LinkFunction& f, int K, double mu,
                                 const QuadratureRule& rule);

struct SteinDiagnostics {
  double direct = 0.0;       // E[f(z+mu) z]
  double stein = 0.0;        // E[f'(z+mu)]
  double discrepancy = 0.0;  // |direct - stein| after any order doubling
  int order_used = 0;
  bool warned = false;  // discrepancy above 1e-4 even after doubling
};

// F_1(mu), the first Hermite coefficient of the shifted link. When the
// derivative is available both Stein routes are evaluated; the direct route
// is returned and the comparison lands in `diag`.
double first_coefficient_map(const LinkFunction& f, double mu,
                             const QuadratureRule& rule,
                             SteinDiagnostics* diag = nullptr);

// Smallest k in 1..K with |f_0(k)| > tol, or nullopt if none.
std::optional<int> information_exponent(const LinkFunction& f,
                                        const QuadratureRule& rule, int K,
                                        double tol = 1e-9);

}  // namespace shiftlab
