#include "sop/lattice.hpp"

#include <cmath>
#include <numbers>

namespace sop {

LatticeSpec::LatticeSpec(int n_sites_, double eta_) : n_sites(n_sites_), eta(eta_) {
  if (n_sites < 2) throw ValidationError("lattice needs at least 2 sites");
  if (!(eta >= 0.0)) throw ValidationError("eta must be non-negative");
}

Matrix VacuumCorrelators::q_matrix() const {
  const int n = n_sites();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = q(i - j);
  return m;
}

Matrix VacuumCorrelators::p_matrix() const {
  const int n = n_sites();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = p(i - j);
  return m;
}

double dispersion(int k, const LatticeSpec& spec) {
  if (k < 0 || k >= spec.n_sites) throw ValidationError("momentum index out of range");
  const double c = std::cos(2.0 * std::numbers::pi * k / spec.n_sites);
  return std::sqrt(1.0 + 2.0 * spec.eta * (1.0 - c));
}

VacuumCorrelators correlators(const LatticeSpec& spec) {
  const int n = spec.n_sites;
  Vector omega(n);
  for (int k = 0; k < n; ++k) omega(k) = dispersion(k, spec);

  VacuumCorrelators corr{Vector::Zero(n), Vector::Zero(n)};
  for (int d = 0; d < n; ++d) {
    double sq = 0.0;
    double sp = 0.0;
    for (int k = 0; k < n; ++k) {
      const double c = std::cos(2.0 * std::numbers::pi * k * d / n);
      sq += c / (2.0 * omega(k));
      sp += omega(k) * c / 2.0;
    }
    corr.dq(d) = sq / n;
    corr.dp(d) = sp / n;
  }
  return corr;
}

CovarianceMatrix vacuum_covariance(const LatticeSpec& spec) {
  const int n = spec.n_sites;
  const VacuumCorrelators corr = correlators(spec);
  Matrix cov = Matrix::Zero(2 * n, 2 * n);
  cov.topLeftCorner(n, n) = corr.q_matrix();
  cov.bottomRightCorner(n, n) = corr.p_matrix();
  return CovarianceMatrix(std::move(cov));
}

QuadraticHamiltonian lattice_hamiltonian(const LatticeSpec& spec) {
  const int n = spec.n_sites;
  Matrix h = Matrix::Zero(2 * n, 2 * n);
  h.bottomRightCorner(n, n) = Matrix::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) += 1.0 + 2.0 * spec.eta;
    const int j = (i + 1) % n;
    h(i, j) += -spec.eta;
    h(j, i) += -spec.eta;
  }
  return QuadraticHamiltonian(std::move(h));
}

double vacuum_energy(const LatticeSpec& spec) {
  double e = 0.0;
  for (int k = 0; k < spec.n_sites; ++k) e += 0.5 * dispersion(k, spec);
  return e;
}

}  // namespace sop
