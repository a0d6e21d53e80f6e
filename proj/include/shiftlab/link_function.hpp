#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiftlab {

// Witnesses of the non-linearity condition: |int_{c-s}^{c+s} f''| > epsilon
// for all delta/2 < s < delta. Metadata only; nothing downstream asserts a
// constant derived from them.
struct Nonlinearity {
  double epsilon = 0.0;
  double delta = 0.0;
  double c = 0.0;
};

// Scalar target f with the metadata the estimators need. `kinks` lists the
// derivative discontinuities of f (empty for smooth links); integrators use
// them to split panels so piecewise-smooth links integrate to full accuracy.
struct LinkFunction {
  std::function<double(double)> eval;
  std::function<double(double)> derivative;  // empty if unavailable
  double lipschitz_L = 1.0;
  std::optional<Nonlinearity> nonlinearity;
  std::string label;
  std::vector<double> kinks;

  bool has_derivative() const { return static_cast<bool>(derivative); }

  double operator()(double x) const { return eval(x); }
};

LinkFunction relu_link();
LinkFunction sigmoid_link();
LinkFunction hermite_link(int k);
LinkFunction poly_link(std::vector<double> coeffs);
LinkFunction linear_link();

// f_mu0(x) = f(x + mu0), with metadata carried over.
LinkFunction shifted_link(const LinkFunction& f, double mu0);

// Parses "relu", "sigmoid", "linear", "hermite:k", "poly:c0,c1,...".
LinkFunction make_link(const std::string& name);

}  // namespace shiftlab
