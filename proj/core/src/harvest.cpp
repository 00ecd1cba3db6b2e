#include "sop/harvest.hpp"

#include <cmath>

namespace sop {

DeviceState::DeviceState(double q2_, double p2_, double qp_)
    : q2(q2_), p2(p2_), qp(qp_) {
  if (q2 * p2 - qp * qp < 0.25 - 1e-10) {
    throw UncertaintyViolation("device moments violate the uncertainty relation");
  }
}

Vector ExtendedSystem::embed(const Vector& field_coefficients) const {
  const int n = spec.n_sites;
  if (field_coefficients.size() != 2 * n) {
    throw DimensionMismatch("field coefficient vector has the wrong length");
  }
  const int m = n_modes();
  Vector out = Vector::Zero(2 * m);
  out.head(n) = field_coefficients.head(n);
  out.segment(m, n) = field_coefficients.tail(n);
  return out;
}

CovarianceMatrix ExtendedSystem::initial_covariance(const DeviceState& dev_a,
                                                    const DeviceState& dev_b) const {
  const int n = spec.n_sites;
  const int m = n_modes();
  const VacuumCorrelators corr = correlators(spec);
  Matrix cov = Matrix::Zero(2 * m, 2 * m);
  cov.topLeftCorner(n, n) = corr.q_matrix();
  cov.block(m, m, n, n) = corr.p_matrix();

  auto put_device = [&](int mode, const DeviceState& dev) {
    cov(mode, mode) = dev.q2;
    cov(m + mode, m + mode) = dev.p2;
    cov(mode, m + mode) = dev.qp;
    cov(m + mode, mode) = dev.qp;
  };
  put_device(device_a(), dev_a);
  put_device(device_b(), dev_b);
  return CovarianceMatrix(std::move(cov));
}

QuadraticHamiltonian ExtendedSystem::hamiltonian() const {
  const int n = spec.n_sites;
  const int m = n_modes();
  const Matrix field = lattice_hamiltonian(spec).mat();
  Matrix h = Matrix::Zero(2 * m, 2 * m);
  h.topLeftCorner(n, n) = field.topLeftCorner(n, n);
  h.block(m, m, n, n) = field.bottomRightCorner(n, n);
  return QuadraticHamiltonian(std::move(h));
}

SymplecticMap swap_symplectic(const Vector& mode_q, const Vector& mode_p,
                              int device, int n_modes, double theta) {
  const int dim = 2 * n_modes;
  if (mode_q.size() != dim || mode_p.size() != dim) {
    throw DimensionMismatch("mode coefficient vectors must have length 2 n_modes");
  }
  if (device < 0 || device >= n_modes) {
    throw ValidationError("device mode index out of range");
  }

  const double pairing = symplectic_pairing(mode_q, mode_p);
  if (std::abs(pairing - 1.0) > 1e-10) {
    throw NotCanonical(pairing - 1.0);
  }
  const double overlap =
      std::max(std::max(std::abs(mode_q(device)), std::abs(mode_q(n_modes + device))),
               std::max(std::abs(mode_p(device)), std::abs(mode_p(n_modes + device))));
  if (overlap > 1e-12) {
    throw NotCanonical(overlap);
  }

  Vector e_q = Vector::Zero(dim);
  Vector e_p = Vector::Zero(dim);
  e_q(device) = 1.0;
  e_p(n_modes + device) = 1.0;

  const double c = std::cos(theta);
  const double s = std::sin(theta);

  // xi(theta) = S xi with (Q, q_dev) and (P, p_dev) rotating at unit rate and
  // every other operator driven linearly by them.
  Matrix map = Matrix::Identity(dim, dim);
  map.noalias() -= apply_symplectic_form(mode_q) *
                   (-(1.0 - c) * mode_p + s * e_p).transpose();
  map.noalias() -= apply_symplectic_form(e_p) *
                   (s * mode_q + (1.0 - c) * e_q).transpose();
  map.noalias() += apply_symplectic_form(mode_p) *
                   (-(1.0 - c) * mode_q + s * e_q).transpose();
  map.noalias() += apply_symplectic_form(e_q) *
                   (s * mode_p + (1.0 - c) * e_p).transpose();
  return SymplecticMap(std::move(map));
}

HarvestResult harvest(const PartnerPair& pair, const DeviceState& dev_a,
                      const DeviceState& dev_b, const LatticeSpec& spec) {
  if (pair.n_sites() != spec.n_sites) {
    throw DimensionMismatch("pair and lattice disagree on the site count");
  }
  const ExtendedSystem ext(spec);
  const int m = ext.n_modes();

  const Vector qa = ext.embed(pair.mode_a.q_coefficients());
  const Vector pa = ext.embed(pair.mode_a.p_coefficients());
  const Vector qb = ext.embed(pair.b_q_coefficients());
  const Vector pb = ext.embed(pair.b_p_coefficients());

  const SymplecticMap swap_a = swap_symplectic(qa, pa, ext.device_a(), m);
  const SymplecticMap swap_b = swap_symplectic(qb, pb, ext.device_b(), m);

  const CovarianceMatrix before = ext.initial_covariance(dev_a, dev_b);
  const CovarianceMatrix after =
      transform_covariance(swap_b * swap_a, before);

  // (A', B') marginal in (q_A', q_B', p_A', p_B') order.
  const std::array<int, 4> dev_idx = {ext.device_a(), ext.device_b(),
                                      m + ext.device_a(), m + ext.device_b()};
  Matrix dev_cov(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      dev_cov(i, j) = after.mat()(dev_idx[static_cast<size_t>(i)],
                                  dev_idx[static_cast<size_t>(j)]);

  // Post-swap second moments of the field modes (Q_A, Q_B, P_A, P_B).
  const std::array<Vector, 4> ops = {qa, qb, pa, pb};
  Matrix field_marginal(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      field_marginal(i, j) = ops[static_cast<size_t>(i)].dot(
          after.mat() * ops[static_cast<size_t>(j)]);
      field_marginal(j, i) = field_marginal(i, j);
    }
  }

  Matrix a_marginal(2, 2);
  a_marginal << dev_cov(0, 0), dev_cov(0, 2), dev_cov(2, 0), dev_cov(2, 2);
  const double entropy =
      gaussian_entropy(williamson_eigenvalues(CovarianceMatrix(a_marginal)));

  const std::vector<double> nu_before = williamson_eigenvalues(before);
  const std::vector<double> nu_after = williamson_eigenvalues(after);
  double spectrum_dev = 0.0;
  for (size_t i = 0; i < nu_before.size(); ++i) {
    spectrum_dev = std::max(spectrum_dev, std::abs(nu_after[i] - nu_before[i]));
  }

  return HarvestResult{after, CovarianceMatrix(dev_cov),
                       CovarianceMatrix(field_marginal), entropy, spectrum_dev};
}

}  // namespace sop
