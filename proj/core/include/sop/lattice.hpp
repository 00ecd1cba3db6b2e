#pragma once

#include "sop/phase_space.hpp"

namespace sop {

// Periodic chain of N coupled oscillators with dimensionless coupling eta.
// eta = 0 decouples the sites and is admitted for analytic test cases.
struct LatticeSpec {
  int n_sites;
  double eta;

  LatticeSpec(int n_sites_, double eta_);
};

// Ground-state two-point functions <q_n q_n'> and <p_n p_n'>, stored as a
// function of the site separation d = 0..N-1 (even modulo N).
struct VacuumCorrelators {
  Vector dq;
  Vector dp;

  int n_sites() const { return static_cast<int>(dq.size()); }
  double q(long d) const { return dq(wrap(d)); }
  double p(long d) const { return dp(wrap(d)); }

  // Dense N x N Toeplitz-circulant matrices Dq(i,j) = dq(i-j), Dp likewise.
  Matrix q_matrix() const;
  Matrix p_matrix() const;

 private:
  long wrap(long d) const {
    const long n = n_sites();
    return ((d % n) + n) % n;
  }
};

// omega_k = sqrt(1 + 2 eta (1 - cos(2 pi k / N))); omega_0 = 1 always.
double dispersion(int k, const LatticeSpec& spec);

VacuumCorrelators correlators(const LatticeSpec& spec);

// 2N x 2N ground-state covariance: qq block Dq, pp block Dp, qp block zero.
CovarianceMatrix vacuum_covariance(const LatticeSpec& spec);

// p-block identity; q-block (1+2 eta) on the diagonal, -eta on cyclic nearest
// neighbours (for N = 2 both bonds connect the same pair, giving -2 eta).
QuadraticHamiltonian lattice_hamiltonian(const LatticeSpec& spec);

// Ground-state energy sum_k omega_k / 2 of the unordered Hamiltonian.
double vacuum_energy(const LatticeSpec& spec);

}  // namespace sop
