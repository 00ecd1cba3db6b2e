#pragma once

#include <random>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "sop/local_mode.hpp"
#include "sop/phase_space.hpp"

namespace sop::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed5eed);
  return gen;
}

inline double uniform(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng());
}

inline int uniform_int(int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(rng());
}

inline Vector random_vector(int n, double lo = -1.0, double hi = 1.0) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
  return v;
}

// Random window with y = z = 0 and sum(x w) = 1.
inline WindowFunctions random_no_mixing_window(int n) {
  while (true) {
    Vector x = random_vector(n);
    if (x.squaredNorm() < 0.5) continue;
    Vector w = random_vector(n);
    w += ((1.0 - x.dot(w)) / x.squaredNorm()) * x;
    return WindowFunctions::no_mixing(std::move(x), std::move(w));
  }
}

// Random window with q-p mixing, rescaled onto the canonical constraint.
inline WindowFunctions random_mixed_window(int n) {
  while (true) {
    Vector x = random_vector(n);
    Vector y = random_vector(n);
    Vector z = random_vector(n);
    Vector w = random_vector(n);
    const double r = x.dot(w) - z.dot(y);
    if (std::abs(r) < 0.2 || x.squaredNorm() < 0.5) continue;
    w /= r;
    z /= r;
    return WindowFunctions(std::move(x), std::move(y), std::move(z), std::move(w));
  }
}

// exp(J G) for a random symmetric G is symplectic.
inline SymplecticMap random_symplectic(int n_modes, double scale = 0.4) {
  Matrix g(2 * n_modes, 2 * n_modes);
  for (int i = 0; i < 2 * n_modes; ++i) {
    for (int j = i; j < 2 * n_modes; ++j) {
      g(i, j) = uniform(-scale, scale);
      g(j, i) = g(i, j);
    }
  }
  const Matrix generator = symplectic_form(n_modes) * g;
  return SymplecticMap(generator.exp());
}

inline double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const size_t n = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Two-mode squeezed covariance over (Q_A, Q_B, P_A, P_B).
inline Matrix pure_pair_pattern(double g) {
  const double nu = 0.5 * std::sqrt(1.0 + g * g);
  Matrix m = Matrix::Zero(4, 4);
  m.diagonal().setConstant(nu);
  m(0, 1) = m(1, 0) = 0.5 * g;
  m(2, 3) = m(3, 2) = -0.5 * g;
  return m;
}

// The standard two-site window q_A = q_1, p_A = p_1 + p_2 / delta.
inline WindowFunctions two_site_window(int n, double delta) {
  Vector x = Vector::Zero(n);
  Vector w = Vector::Zero(n);
  x(0) = 1.0;
  w(0) = 1.0;
  w(1) = 1.0 / delta;
  return WindowFunctions::no_mixing(std::move(x), std::move(w));
}

}  // namespace sop::testing
