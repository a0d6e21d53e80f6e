#include "shiftlab/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace shiftlab {

double hermite_eval(int k, double x) {
  if (k < 0) throw std::invalid_argument("hermite_eval: negative order");
  if (k > kMaxHermiteOrder)
    throw std::invalid_argument("hermite_eval: order " + std::to_string(k) +
                                " above supported cap " +
                                std::to_string(kMaxHermiteOrder));
  if (k == 0) return 1.0;
  if (k == 1) return x;
  // H_{j+1} = (x H_j - sqrt(j) H_{j-1}) / sqrt(j+1)
  double hm1 = 1.0, h = x;
  for (int j = 1; j < k; ++j) {
    double hp1 = (x * h - std::sqrt(double(j)) * hm1) / std::sqrt(double(j + 1));
    hm1 = h;
    h = hp1;
  }
  return h;
}

namespace {

// Normalized physicists' Hermite value and its (n, value_{n-1}) pair at x,
// for the Newton root polish. Orthonormal w.r.t. exp(-x^2)/sqrt(pi).
void hermite_phys_pair(int n, double x, double& pn, double& pnm1) {
  double p1 = 0.7511255444649425;  // pi^{-1/4}
  double p2 = 0.0;
  for (int j = 0; j < n; ++j) {
    double p3 = p2;
    p2 = p1;
    p1 = x * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(double(j) / (j + 1)) * p3;
  }
  pn = p1;
  pnm1 = p2;
}

}  // namespace

QuadratureRule gauss_hermite_rule(int order) {
  if (order < 2 || order > 256)
    throw std::invalid_argument("gauss_hermite_rule: order must be in [2,256]");

  const int n = order;
  std::vector<double> x(n), w(n);
  const double eps = 1e-14;
  const int max_iter = 200;

  // Roots of the physicists' polynomial, largest first, symmetric pairs.
  const int m = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      z = std::sqrt(double(2 * n + 1)) -
          1.85575 * std::pow(double(2 * n + 1), -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(double(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * x[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * x[1];
    } else {
      z = 2.0 * z - x[i - 2];
    }
    // x[] temporarily holds physicists' nodes
    double pn = 0.0, pnm1 = 0.0;
    for (int it = 0; it < max_iter; ++it) {
      hermite_phys_pair(n, z, pn, pnm1);
      double dp = std::sqrt(2.0 * n) * pnm1;
      double z1 = z;
      z = z1 - pn / dp;
      if (std::abs(z - z1) <= eps) break;
    }
    hermite_phys_pair(n, z, pn, pnm1);
    double dp = std::sqrt(2.0 * n) * pnm1;
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = 2.0 / (dp * dp);
    w[n - 1 - i] = w[i];
  }

  // Convert from weight exp(-x^2) to the standard Gaussian measure.
  QuadratureRule rule;
  rule.order = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = std::sqrt(2.0) * x[n - 1 - i];  // ascending
    rule.weights[i] = w[n - 1 - i] * inv_sqrt_pi;
  }
  return rule;
}

double gauss_expect_piecewise(const std::function<double(double)>& g,
                              std::span<const double> breakpoints, double tail) {
  // 24-point Gauss-Legendre nodes/weights on [-1,1] (positive half; mirror).
  static const double gl_x[12] = {
      0.064056892862605626, 0.191118867473616309, 0.315042679696163374,
      0.433793507626045138, 0.545421471388839536, 0.648093651936975569,
      0.740124191578554364, 0.820001985973902922, 0.886415527004401034,
      0.938274552002732758, 0.974728555971309498, 0.995187219997021360};
  static const double gl_w[12] = {
      0.127938195346752157, 0.125837456346828296, 0.121670472927803391,
      0.115505668053725601, 0.107444270115965634, 0.097618652104113888,
      0.086190161531953276, 0.073346481411080306, 0.059298584915436781,
      0.044277438817419806, 0.028531388628933663, 0.012341229799987200};

  std::set<double> pts = {-tail, tail};
  for (double b : breakpoints)
    if (b > -tail && b < tail) pts.insert(b);

  const double inv_sqrt_2pi = 0.3989422804014326779;
  const double max_panel = 1.0;
  double total = 0.0;
  auto it = pts.begin();
  double a = *it;
  for (++it; it != pts.end(); ++it) {
    double b = *it;
    int nsub = std::max(1, int(std::ceil((b - a) / max_panel)));
    for (int s = 0; s < nsub; ++s) {
      double lo = a + (b - a) * s / nsub;
      double hi = a + (b - a) * (s + 1) / nsub;
      double xm = 0.5 * (hi + lo), xr = 0.5 * (hi - lo);
      double panel = 0.0;
      for (int i = 0; i < 12; ++i) {
        double xp = xm + xr * gl_x[i];
        double xn = xm - xr * gl_x[i];
        panel += gl_w[i] * (g(xp) * std::exp(-0.5 * xp * xp) +
                            g(xn) * std::exp(-0.5 * xn * xn));
      }
      total += xr * panel * inv_sqrt_2pi;
    }
    a = b;
  }
  return total;
}

namespace {

std::vector<double> shifted_breakpoints(const LinkFunction& f, double mu) {
  std::vector<double> bp;
  bp.reserve(f.kinks.size());
  for (double k : f.kinks) bp.push_back(k - mu);  // f(z+mu) kinks at z = k-mu
  return bp;
}

}  // namespace

double hermite_coefficient(const LinkFunction& f, int k, double mu,
                           const QuadratureRule& rule) {
  if (k < 0) throw std::invalid_argument("hermite_coefficient: negative k");
  if (rule.order < 2 * k + 8)
    throw std::invalid_argument(
        "hermite_coefficient: rule order must be >= 2k+8");
  if (!f.kinks.empty()) {
    auto bp = shifted_breakpoints(f, mu);
    return gauss_expect_piecewise(
        [&](double z) { return f.eval(z + mu) * hermite_eval(k, z); }, bp);
  }
  double s = 0.0;
  for (int i = 0; i < rule.order; ++i)
    s += rule.weights[i] * f.eval(rule.nodes[i] + mu) *
         hermite_eval(k, rule.nodes[i]);
  return s;
}

HermiteSpectrum compute_spectrum(const LinkFunction& f, int K, double mu,
                                 const QuadratureRule& rule) {
  HermiteSpectrum spec;
  spec.truncation_K = K;
  spec.shift_mu = mu;
  spec.coeffs.resize(K + 1);
  for (int k = 0; k <= K; ++k) spec.coeffs[k] = hermite_coefficient(f, k, mu, rule);
  return spec;
}

double first_coefficient_map(const LinkFunction& f, double mu,
                             const QuadratureRule& rule,
                             SteinDiagnostics* diag) {
  auto eval_routes = [&](const QuadratureRule& r, double& direct, double& stein) {
    if (!f.kinks.empty()) {
      auto bp = shifted_breakpoints(f, mu);
      direct = gauss_expect_piecewise(
          [&](double z) { return f.eval(z + mu) * z; }, bp);
      if (f.has_derivative())
        stein = gauss_expect_piecewise(
            [&](double z) { return f.derivative(z + mu); }, bp);
    } else {
      direct = r.expect([&](double z) { return f.eval(z + mu) * z; });
      if (f.has_derivative())
        stein = r.expect([&](double z) { return f.derivative(z + mu); });
    }
  };

  double direct = 0.0, stein = 0.0;
  eval_routes(rule, direct, stein);
  int order_used = rule.order;
  bool warned = false;

  if (f.has_derivative()) {
    double disc = std::abs(direct - stein);
    if (disc > 1e-4 && f.kinks.empty()) {
      // One automatic retry with a doubled rule before flagging.
      QuadratureRule fine = gauss_hermite_rule(std::min(2 * rule.order, 256));
      eval_routes(fine, direct, stein);
      order_used = fine.order;
      disc = std::abs(direct - stein);
    }
    warned = disc > 1e-4;
    if (diag) {
      diag->direct = direct;
      diag->stein = stein;
      diag->discrepancy = disc;
      diag->order_used = order_used;
      diag->warned = warned;
    }
  } else if (diag) {
    *diag = SteinDiagnostics{direct, 0.0, 0.0, order_used, false};
  }
  return direct;
}

std::optional<int> information_exponent(const LinkFunction& f,
                                        const QuadratureRule& rule, int K,
                                        double tol) {
  if (tol <= 0.0) throw std::invalid_argument("information_exponent: tol must be > 0");
  for (int k = 1; k <= K; ++k) {
    if (std::abs(hermite_coefficient(f, k, 0.0, rule)) > tol) return k;
  }
  return std::nullopt;
}

}  // namespace shiftlab
