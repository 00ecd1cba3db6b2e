#pragma once

#include <complex>

#include "sop/lattice.hpp"
#include "sop/phase_space.hpp"

namespace sop {

// A local mode built from lattice operators:
//   q_A = sum_n (x(n) q_n + y(n) p_n),  p_A = sum_n (z(n) q_n + w(n) p_n),
// with the canonical constraint sum(x w - z y) = 1.
struct WindowFunctions {
  Vector x, y, z, w;

  WindowFunctions(Vector x_, Vector y_, Vector z_, Vector w_);
  static WindowFunctions no_mixing(Vector x_, Vector w_);

  int n_sites() const { return static_cast<int>(x.size()); }

  // Raw phase-space coefficient vectors (length 2N) of q_A and p_A.
  Vector q_coefficients() const;
  Vector p_coefficients() const;
};

// Signed deviation sum(x w - z y) - 1 of the canonical constraint.
double canonical_residual(const WindowFunctions& win);

// Throws NotCanonical if |canonical_residual| exceeds 1e-10.
void validate_window(const WindowFunctions& win);

// Symmetrized 2x2 covariance [[<q_A^2>, c], [c, <p_A^2>]] in the lattice
// ground state. The symmetrized <q_n p_n'> vanishes in the ground state, so
// only the q-q and p-p correlators enter, even for mixed windows.
Eigen::Matrix2d mode_covariance(const WindowFunctions& win,
                                const VacuumCorrelators& corr);

// g = sqrt(4 <q_A^2><p_A^2> - 1) for windows without q-p mixing (y = z = 0).
// A radicand in (-1e-9, 0) is clamped to zero; below that throws
// UncertaintyViolation. Mixed windows must go through standard_form.
double g_factor(const WindowFunctions& win, const VacuumCorrelators& corr);

// The mode after the standardizing symplectic transformation. Coefficients are
// stored with the scale factor (sqrt(1+g^2)/2)^(1/2) divided out, so the raw
// operator is prefactor() * (big_x . q + big_y . p) and its variance equals
// sqrt(1+g^2)/2.
struct StandardMode {
  Vector big_x, big_y, big_z, big_w;
  double g = 0.0;
  double theta = 0.0;        // final rotation, fixed to zero by convention
  double theta_prime = 0.0;  // diagonalizing rotation, in (-pi/4, pi/4]
  double sigma = 0.0;        // squeeze parameter

  int n_sites() const { return static_cast<int>(big_x.size()); }
  double nu() const;         // sqrt(1+g^2)/2
  double prefactor() const;  // sqrt(nu())

  // Raw phase-space coefficient vectors (length 2N), prefactor included.
  Vector q_coefficients() const;
  Vector p_coefficients() const;
  WindowFunctions as_window() const;
};

// Reduces a valid window to standard form: rotate by theta_prime to kill the
// symmetrized cross moment, squeeze by sigma = (1/4) ln of the diagonal ratio,
// final rotation theta = 0. For no-mixing windows this is the pure scaling
// Q_A = C q_A, P_A = p_A / C with C = (<p_A^2>/<q_A^2>)^(1/4).
StandardMode standard_form(const WindowFunctions& win,
                           const VacuumCorrelators& corr);

// Mode coefficients over the ladder-operator basis of the lattice. For a
// standardized mode they satisfy sum |Q(k)|^2 = sum |P(k)|^2 = 1 and
// sum P(k)* Q(k) = -i / sqrt(1+g^2).
struct MomentumRepresentation {
  Eigen::VectorXcd q;
  Eigen::VectorXcd p;
};

MomentumRepresentation momentum_representation(const StandardMode& mode,
                                               const LatticeSpec& spec);

}  // namespace sop
