#include "sop/phase_space.hpp"

#include <algorithm>
#include <cmath>

namespace sop {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kSymplecticTol = 1e-10;
constexpr double kPairingTol = 1e-8;

void require_even_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 2 || m.rows() % 2 != 0) {
    throw DimensionMismatch(std::string(what) +
                            " must be a square 2n x 2n matrix");
  }
}

void require_symmetric(const Matrix& m, const char* what) {
  const double dev = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (dev > kSymmetryTol) {
    throw ValidationError(std::string(what) + " is not symmetric (max deviation " +
                          std::to_string(dev) + ")");
  }
}

}  // namespace

Matrix symplectic_form(int n_modes) {
  if (n_modes < 1) throw ValidationError("n_modes must be at least 1");
  Matrix j = Matrix::Zero(2 * n_modes, 2 * n_modes);
  j.topRightCorner(n_modes, n_modes) = Matrix::Identity(n_modes, n_modes);
  j.bottomLeftCorner(n_modes, n_modes) = -Matrix::Identity(n_modes, n_modes);
  return j;
}

Vector apply_symplectic_form(const Vector& v) {
  const Eigen::Index n = v.size() / 2;
  Vector out(v.size());
  out.head(n) = v.tail(n);
  out.tail(n) = -v.head(n);
  return out;
}

double symplectic_pairing(const Vector& u, const Vector& v) {
  if (u.size() != v.size() || u.size() % 2 != 0) {
    throw DimensionMismatch("symplectic_pairing: vector sizes differ");
  }
  const Eigen::Index n = u.size() / 2;
  return u.head(n).dot(v.tail(n)) - u.tail(n).dot(v.head(n));
}

CovarianceMatrix::CovarianceMatrix(Matrix entries) {
  require_even_square(entries, "covariance matrix");
  require_symmetric(entries, "covariance matrix");
  mat_ = 0.5 * (entries + entries.transpose());
}

SymplecticMap::SymplecticMap(Matrix s) {
  require_even_square(s, "symplectic map");
  const Matrix j = symplectic_form(static_cast<int>(s.rows()) / 2);
  const double dev = (s * j * s.transpose() - j).cwiseAbs().maxCoeff();
  if (dev > kSymplecticTol) {
    throw ValidationError("matrix does not preserve the symplectic form (max deviation " +
                          std::to_string(dev) + ")");
  }
  mat_ = std::move(s);
}

SymplecticMap SymplecticMap::operator*(const SymplecticMap& rhs) const {
  if (rhs.mat_.rows() != mat_.rows()) {
    throw DimensionMismatch("symplectic map composition: dimension mismatch");
  }
  return SymplecticMap(mat_ * rhs.mat_);
}

QuadraticHamiltonian::QuadraticHamiltonian(Matrix h) {
  require_even_square(h, "quadratic Hamiltonian");
  require_symmetric(h, "quadratic Hamiltonian");
  mat_ = 0.5 * (h + h.transpose());
}

std::vector<double> williamson_eigenvalues(const CovarianceMatrix& cov) {
  const int n = cov.n_modes();
  const Matrix jc = symplectic_form(n) * cov.mat();
  Eigen::EigenSolver<Matrix> solver(jc, /*computeEigenvectors=*/false);
  std::vector<double> moduli(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    moduli[static_cast<size_t>(i)] = std::abs(solver.eigenvalues()(i));
  }
  std::sort(moduli.begin(), moduli.end());

  std::vector<double> nu(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double a = moduli[static_cast<size_t>(2 * i)];
    const double b = moduli[static_cast<size_t>(2 * i + 1)];
    if (std::abs(b - a) > kPairingTol * std::max(1.0, b)) {
      throw NumericalError("symplectic eigenvalues failed to pair up");
    }
    nu[static_cast<size_t>(i)] = 0.5 * (a + b);
  }
  if (nu.front() < 0.5 - 1e-10) {
    throw NonPositiveDefinite("covariance violates the uncertainty relation: min nu = " +
                              std::to_string(nu.front()));
  }
  return nu;
}

double gaussian_entropy(const std::vector<double>& nu) {
  double total = 0.0;
  for (double v : nu) {
    if (v < 0.5 - 1e-6) {
      throw NonPhysicalEigenvalue("symplectic eigenvalue below 1/2: " + std::to_string(v));
    }
    const double vc = std::max(v, 0.5);
    const double plus = vc + 0.5;
    const double minus = vc - 0.5;
    total += plus * std::log(plus);
    if (minus > 0.0) total -= minus * std::log(minus);
  }
  return total;
}

CovarianceMatrix transform_covariance(const SymplecticMap& s,
                                      const CovarianceMatrix& cov) {
  if (s.mat().rows() != cov.mat().rows()) {
    throw DimensionMismatch("transform_covariance: dimension mismatch");
  }
  Matrix out = s.mat() * cov.mat() * s.mat().transpose();
  return CovarianceMatrix(0.5 * (out + out.transpose()));
}

double quadratic_expectation(const QuadraticHamiltonian& h,
                             const CovarianceMatrix& cov) {
  if (h.mat().rows() != cov.mat().rows()) {
    throw DimensionMismatch("quadratic_expectation: dimension mismatch");
  }
  return 0.5 * (h.mat().array() * cov.mat().array()).sum();
}

}  // namespace sop
