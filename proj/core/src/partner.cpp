#include "sop/partner.hpp"

#include <cmath>

namespace sop {

const char* to_string(PartnerClass c) {
  return c == PartnerClass::SOP ? "SOP" : "SSP";
}

Vector PartnerPair::b_q_coefficients() const {
  const double pf = mode_a.prefactor();
  Vector out(2 * n_sites());
  out << pf * b_x, pf * b_y;
  return out;
}

Vector PartnerPair::b_p_coefficients() const {
  const double pf = mode_a.prefactor();
  Vector out(2 * n_sites());
  out << pf * b_z, pf * b_w;
  return out;
}

PartnerPair partner_window(const StandardMode& mode_a,
                           const VacuumCorrelators& corr) {
  if (mode_a.n_sites() != corr.n_sites()) {
    throw DimensionMismatch("mode and correlators disagree on the site count");
  }
  if (mode_a.g <= 1e-10) {
    throw NoPartner("mode is pure (g = " + std::to_string(mode_a.g) +
                    "); no purification partner exists");
  }
  const double g = mode_a.g;
  const double s = std::sqrt(1.0 + g * g);
  const Matrix dq = corr.q_matrix();
  const Matrix dp = corr.p_matrix();

  PartnerPair pair;
  pair.mode_a = mode_a;
  pair.g = g;
  pair.b_x = (s / g) * mode_a.big_x - (2.0 / g) * (dp * mode_a.big_w);
  pair.b_y = (s / g) * mode_a.big_y + (2.0 / g) * (dq * mode_a.big_z);
  pair.b_z = -(s / g) * mode_a.big_z - (2.0 / g) * (dp * mode_a.big_y);
  pair.b_w = -(s / g) * mode_a.big_w + (2.0 / g) * (dq * mode_a.big_x);
  pair.m_ab = two_mode_covariance(pair, corr).mat();
  return pair;
}

std::array<double, 4> check_locality(const PartnerPair& pair) {
  const Vector qa = pair.mode_a.q_coefficients();
  const Vector pa = pair.mode_a.p_coefficients();
  const Vector qb = pair.b_q_coefficients();
  const Vector pb = pair.b_p_coefficients();
  return {std::abs(symplectic_pairing(qa, qb)),
          std::abs(symplectic_pairing(qa, pb)),
          std::abs(symplectic_pairing(pa, qb)),
          std::abs(symplectic_pairing(pa, pb))};
}

CovarianceMatrix two_mode_covariance(const PartnerPair& pair,
                                     const VacuumCorrelators& corr) {
  const int n = pair.n_sites();
  if (n != corr.n_sites()) {
    throw DimensionMismatch("pair and correlators disagree on the site count");
  }
  const Matrix dq = corr.q_matrix();
  const Matrix dp = corr.p_matrix();
  const std::array<Vector, 4> ops = {
      pair.mode_a.q_coefficients(), pair.b_q_coefficients(),
      pair.mode_a.p_coefficients(), pair.b_p_coefficients()};

  // Symmetrized moment of two mode operators; the ground state has no
  // symmetrized q-p correlations, so the q and p sectors add independently.
  auto moment = [&](const Vector& u, const Vector& v) {
    return u.head(n).dot(dq * v.head(n)) + u.tail(n).dot(dp * v.tail(n));
  };

  Matrix m(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      m(i, j) = moment(ops[static_cast<size_t>(i)], ops[static_cast<size_t>(j)]);
      m(j, i) = m(i, j);
    }
  }
  return CovarianceMatrix(std::move(m));
}

double entanglement_entropy(double g) {
  if (g < 0.0) throw ValidationError("g must be non-negative");
  if (g == 0.0) return 0.0;
  const double s = std::sqrt(1.0 + g * g);
  return s * std::log((s + 1.0) / g) + std::log(0.5 * g);
}

PartnerClass classify_partner(const PartnerPair& pair, double support_tol) {
  if (!(support_tol > 0.0)) throw ValidationError("support_tol must be positive");
  const int n = pair.n_sites();
  for (int site = 0; site < n; ++site) {
    const bool in_a = std::abs(pair.mode_a.big_x(site)) > support_tol ||
                      std::abs(pair.mode_a.big_y(site)) > support_tol ||
                      std::abs(pair.mode_a.big_z(site)) > support_tol ||
                      std::abs(pair.mode_a.big_w(site)) > support_tol;
    const bool in_b = std::abs(pair.b_x(site)) > support_tol ||
                      std::abs(pair.b_y(site)) > support_tol ||
                      std::abs(pair.b_z(site)) > support_tol ||
                      std::abs(pair.b_w(site)) > support_tol;
    if (in_a && in_b) return PartnerClass::SOP;
  }
  return PartnerClass::SSP;
}

}  // namespace sop
