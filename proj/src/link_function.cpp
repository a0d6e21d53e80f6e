#include "shiftlab/link_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "shiftlab/hermite.hpp"

namespace shiftlab {

namespace {

double grid_sup_abs(const std::function<double(double)>& g, double lo, double hi,
                    int n = 2001) {
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    double x = lo + (hi - lo) * i / (n - 1);
    m = std::max(m, std::abs(g(x)));
  }
  return m;
}

// Numeric witnesses for the non-linearity condition: scan candidate centers
// c and take the one maximizing min_{delta/2<s<delta} |f'(c+s)-f'(c-s)|.
std::optional<Nonlinearity> scan_nonlinearity(
    const std::function<double(double)>& deriv) {
  const double delta = 0.5;
  double best_eps = 0.0, best_c = 0.0;
  for (double c : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    double lo = 1e300;
    for (int i = 0; i <= 20; ++i) {
      double s = delta / 2 + (delta / 2) * i / 20.0;
      lo = std::min(lo, std::abs(deriv(c + s) - deriv(c - s)));
    }
    if (lo > best_eps) {
      best_eps = lo;
      best_c = c;
    }
  }
  if (best_eps < 1e-6) return std::nullopt;
  return Nonlinearity{0.9 * best_eps, delta, best_c};
}

}  // namespace

LinkFunction relu_link() {
  LinkFunction f;
  f.eval = [](double x) { return x > 0.0 ? x : 0.0; };
  // a.e. derivative; subgradient 0 at the kink
  f.derivative = [](double x) { return x > 0.0 ? 1.0 : 0.0; };
  f.lipschitz_L = 1.0;
  f.nonlinearity = Nonlinearity{0.9, 1.0, 0.0};
  f.label = "relu";
  f.kinks = {0.0};
  return f;
}

LinkFunction sigmoid_link() {
  LinkFunction f;
  f.eval = [](double x) { return 1.0 / (1.0 + std::exp(-x)); };
  f.derivative = [](double x) {
    double s = 1.0 / (1.0 + std::exp(-x));
    return s * (1.0 - s);
  };
  f.lipschitz_L = 1.0;  // true constant is 1/4; keep L >= 1 per the model class
  f.nonlinearity = scan_nonlinearity(f.derivative);
  f.label = "sigmoid";
  return f;
}

LinkFunction hermite_link(int k) {
  LinkFunction f;
  f.eval = [k](double x) { return hermite_eval(k, x); };
  if (k >= 1) {
    double sk = std::sqrt(double(k));
    f.derivative = [k, sk](double x) { return sk * hermite_eval(k - 1, x); };
  } else {
    f.derivative = [](double) { return 0.0; };
  }
  f.lipschitz_L = std::max(1.0, grid_sup_abs(f.derivative, -6.0, 6.0));
  if (k >= 2) f.nonlinearity = scan_nonlinearity(f.derivative);
  f.label = "hermite:" + std::to_string(k);
  return f;
}

LinkFunction poly_link(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  auto eval = [coeffs](double x) {
    double v = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
  };
  auto deriv = [coeffs](double x) {
    double v = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 1;) v = v * x + coeffs[i] * double(i);
    return v;
  };
  LinkFunction f;
  f.eval = eval;
  f.derivative = deriv;
  f.lipschitz_L = std::max(1.0, grid_sup_abs(deriv, -8.0, 8.0));
  if (coeffs.size() > 2) f.nonlinearity = scan_nonlinearity(deriv);
  std::ostringstream label;
  label << "poly:";
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    label << (i ? "," : "") << coeffs[i];
  f.label = label.str();
  return f;
}

LinkFunction linear_link() {
  LinkFunction f = poly_link({0.0, 1.0});
  f.label = "linear";
  return f;
}

LinkFunction shifted_link(const LinkFunction& f, double mu0) {
  LinkFunction g;
  auto eval = f.eval;
  g.eval = [eval, mu0](double x) { return eval(x + mu0); };
  if (f.has_derivative()) {
    auto deriv = f.derivative;
    g.derivative = [deriv, mu0](double x) { return deriv(x + mu0); };
  }
  g.lipschitz_L = f.lipschitz_L;
  g.nonlinearity = f.nonlinearity;
  std::ostringstream label;
  label << f.label << "@" << mu0;
  g.label = label.str();
  g.kinks.reserve(f.kinks.size());
  for (double k : f.kinks) g.kinks.push_back(k - mu0);
  return g;
}

LinkFunction make_link(const std::string& name) {
  if (name == "relu") return relu_link();
  if (name == "sigmoid") return sigmoid_link();
  if (name == "linear") return linear_link();
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string head = name.substr(0, colon);
    std::string rest = name.substr(colon + 1);
    if (head == "hermite") return hermite_link(std::stoi(rest));
    if (head == "poly") {
      std::vector<double> coeffs;
      std::stringstream ss(rest);
      std::string tok;
      while (std::getline(ss, tok, ',')) coeffs.push_back(std::stod(tok));
      return poly_link(std::move(coeffs));
    }
  }
  throw std::invalid_argument("make_link: unknown link '" + name + "'");
}

}  // namespace shiftlab
