#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sop/errors.hpp"

namespace sop {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Phase-space coordinates are ordered (q_1..q_n, p_1..p_n) everywhere in this
// library. Under that ordering the symplectic form is the block matrix
// [[0, I], [-I, 0]].
Matrix symplectic_form(int n_modes);

// Applies the symplectic form to a coefficient vector: (v_q, v_p) -> (v_p, -v_q).
Vector apply_symplectic_form(const Vector& v);

// Antisymmetric pairing u^T J v of two phase-space coefficient vectors. The
// commutator of the operators u.xi and v.xi is i times this value.
double symplectic_pairing(const Vector& u, const Vector& v);

// Symmetrized second moments <{xi_i, xi_j}>/2 of a zero-mean Gaussian state.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Matrix entries);

  const Matrix& mat() const { return mat_; }
  int n_modes() const { return static_cast<int>(mat_.rows()) / 2; }

 private:
  Matrix mat_;
};

// Linear phase-space map S with S J S^T = J (checked at construction).
class SymplecticMap {
 public:
  explicit SymplecticMap(Matrix s);

  const Matrix& mat() const { return mat_; }
  int n_modes() const { return static_cast<int>(mat_.rows()) / 2; }

  SymplecticMap operator*(const SymplecticMap& rhs) const;

 private:
  Matrix mat_;
};

// H = (1/2) xi^T h xi in unordered form (no normal-ordering constant).
class QuadraticHamiltonian {
 public:
  explicit QuadraticHamiltonian(Matrix h);

  const Matrix& mat() const { return mat_; }
  int n_modes() const { return static_cast<int>(mat_.rows()) / 2; }

 private:
  Matrix mat_;
};

// Symplectic eigenvalues, ascending. Computed as the moduli of the eigenvalues
// of J*cov, which come in equal pairs; pairs are merged with tolerance 1e-8.
// Throws NonPositiveDefinite if the smallest eigenvalue is below 1/2 - 1e-10.
std::vector<double> williamson_eigenvalues(const CovarianceMatrix& cov);

// Von Neumann entropy of a Gaussian state from its symplectic eigenvalues:
// sum of (nu+1/2)ln(nu+1/2) - (nu-1/2)ln(nu-1/2). Values within 1e-6 below
// 1/2 are clamped to 1/2; anything lower throws NonPhysicalEigenvalue.
double gaussian_entropy(const std::vector<double>& nu);

CovarianceMatrix transform_covariance(const SymplecticMap& s,
                                      const CovarianceMatrix& cov);

// <H> = (1/2) tr(h cov) for a zero-mean Gaussian state.
double quadratic_expectation(const QuadraticHamiltonian& h,
                             const CovarianceMatrix& cov);

}  // namespace sop
