#pragma once

#include "sop/partner.hpp"

namespace sop {

// Second moments of a zero-mean Gaussian device state.
struct DeviceState {
  double q2 = 0.5;
  double p2 = 0.5;
  double qp = 0.0;

  DeviceState() = default;
  DeviceState(double q2_, double p2_, double qp_ = 0.0);
  static DeviceState vacuum() { return {}; }
};

// Field lattice extended by two external device modes. Mode order: sites
// 1..N, then device A', then device B' (phase-space dimension 2(N+2)).
struct ExtendedSystem {
  LatticeSpec spec;

  explicit ExtendedSystem(LatticeSpec spec_) : spec(spec_) {}

  int n_modes() const { return spec.n_sites + 2; }
  int device_a() const { return spec.n_sites; }
  int device_b() const { return spec.n_sites + 1; }

  // Zero-pads a field coefficient vector (length 2N) onto the extended space.
  Vector embed(const Vector& field_coefficients) const;

  // Block-diagonal product state: lattice vacuum and the two device states.
  CovarianceMatrix initial_covariance(const DeviceState& dev_a,
                                      const DeviceState& dev_b) const;

  // Lattice Hamiltonian on the field block, zero on the devices.
  QuadraticHamiltonian hamiltonian() const;
};

// Heisenberg-picture symplectic map of exp(i theta (Q p_dev - P q_dev)) where
// Q = mode_q . xi and P = mode_p . xi form a canonical pair supported away
// from the device mode. At theta = pi/2 this swaps the mode with the device:
// Q -> q_dev, q_dev -> -Q, P -> p_dev, p_dev -> -P. The matrix is assembled in
// closed form from the rotation generated in the (mode, device) planes.
// Throws NotCanonical if the pair fails its commutation checks.
SymplecticMap swap_symplectic(const Vector& mode_q, const Vector& mode_p,
                              int device, int n_modes,
                              double theta = 1.5707963267948966);

struct HarvestResult {
  CovarianceMatrix full_covariance;        // post-swap state, 2(N+2)
  CovarianceMatrix device_covariance;      // (A', B') marginal, (q,q,p,p) order
  CovarianceMatrix field_mode_marginal;    // post-swap moments of (Q_A,Q_B,P_A,P_B)
  double device_entropy = 0.0;             // entropy of the A' marginal
  double spectrum_deviation = 0.0;         // max |nu_after - nu_before|
};

// Runs the two-step protocol: swap A with device A', then B with device B'.
// The device marginal afterwards equals the pair covariance m_ab and the
// field-side (A, B) moments equal the devices' initial covariances.
HarvestResult harvest(const PartnerPair& pair, const DeviceState& dev_a,
                      const DeviceState& dev_b, const LatticeSpec& spec);

}  // namespace sop
