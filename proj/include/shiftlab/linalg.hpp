#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace shiftlab {

// Row-major dense matrix, just enough for batches and weight blocks.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const double> row(std::size_t i) const {
    return {data.data() + i * cols, cols};
  }
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline void scale(std::span<double> a, double c) {
  for (double& v : a) v *= c;
}

inline void normalize(std::span<double> a) {
  double n = norm2(a);
  if (n > 0.0) scale(a, 1.0 / n);
}

// Tangential projection g <- (I - theta theta^T) g, then one more sweep to
// clean up roundoff so |<g,theta>| stays at machine precision.
inline void project_tangent(std::span<double> g, std::span<const double> theta) {
  double c = dot(g, theta);
  axpy(-c, theta, g);
  c = dot(g, theta);
  axpy(-c, theta, g);
}

}  // namespace shiftlab
