#pragma once

#include <array>

#include "sop/local_mode.hpp"

namespace sop {

enum class PartnerClass { SOP, SSP };

const char* to_string(PartnerClass c);

// A standardized mode A together with its purification partner B. The partner
// windows use the same prefactor-out convention as StandardMode, and m_ab is
// the joint covariance over (Q_A, Q_B, P_A, P_B). For a valid pair m_ab is
// pure (both symplectic eigenvalues 1/2) and has the two-mode squeezed
// pattern: diagonal sqrt(1+g^2)/2, Q-Q cross +g/2, P-P cross -g/2, zeros
// elsewhere.
struct PartnerPair {
  StandardMode mode_a;
  Vector b_x, b_y, b_z, b_w;
  double g = 0.0;
  Matrix m_ab;

  int n_sites() const { return static_cast<int>(b_x.size()); }

  // Raw phase-space coefficient vectors of Q_B and P_B, prefactor included.
  Vector b_q_coefficients() const;
  Vector b_p_coefficients() const;
};

// Constructs the partner from the standardized windows:
//   X_B = (sqrt(1+g^2)/g) X_A - (2/g) Dp W_A
//   Y_B = (sqrt(1+g^2)/g) Y_A + (2/g) Dq Z_A
//   Z_B = -(sqrt(1+g^2)/g) Z_A - (2/g) Dp Y_A
//   W_B = -(sqrt(1+g^2)/g) W_A + (2/g) Dq X_A
// Throws NoPartner when g <= 1e-10 (the mode is already pure).
PartnerPair partner_window(const StandardMode& mode_a,
                           const VacuumCorrelators& corr);

// Magnitudes of the four cross commutators
// [Q_A,Q_B], [Q_A,P_B], [P_A,Q_B], [P_A,P_B], computed as symplectic pairings
// of the coefficient vectors. All below 1e-10 for a valid pair.
std::array<double, 4> check_locality(const PartnerPair& pair);

// Recomputes the ten independent entries of m_ab from windows and correlators.
CovarianceMatrix two_mode_covariance(const PartnerPair& pair,
                                     const VacuumCorrelators& corr);

// S_EE(g) = sqrt(1+g^2) ln((sqrt(1+g^2)+1)/g) + ln(g/2), with the g -> 0
// limit handled exactly (returns 0).
double entanglement_entropy(double g);

// A site belongs to a mode's support when any of its four coefficients
// exceeds support_tol in magnitude. SSP iff the supports are disjoint.
PartnerClass classify_partner(const PartnerPair& pair, double support_tol = 1e-12);

}  // namespace sop
