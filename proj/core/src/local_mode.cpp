#include "sop/local_mode.hpp"

#include <cmath>
#include <numbers>

namespace sop {

namespace {

constexpr double kCanonicalTol = 1e-10;

Vector stack(const Vector& q_part, const Vector& p_part) {
  Vector out(q_part.size() + p_part.size());
  out << q_part, p_part;
  return out;
}

}  // namespace

WindowFunctions::WindowFunctions(Vector x_, Vector y_, Vector z_, Vector w_)
    : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)), w(std::move(w_)) {
  const Eigen::Index n = x.size();
  if (n < 1 || y.size() != n || z.size() != n || w.size() != n) {
    throw DimensionMismatch("window function vectors must have equal nonzero length");
  }
}

WindowFunctions WindowFunctions::no_mixing(Vector x_, Vector w_) {
  const Eigen::Index n = x_.size();
  return WindowFunctions(std::move(x_), Vector::Zero(n), Vector::Zero(n),
                         std::move(w_));
}

Vector WindowFunctions::q_coefficients() const { return stack(x, y); }
Vector WindowFunctions::p_coefficients() const { return stack(z, w); }

double canonical_residual(const WindowFunctions& win) {
  return win.x.dot(win.w) - win.z.dot(win.y) - 1.0;
}

void validate_window(const WindowFunctions& win) {
  const double residual = canonical_residual(win);
  if (std::abs(residual) > kCanonicalTol) throw NotCanonical(residual);
}

Eigen::Matrix2d mode_covariance(const WindowFunctions& win,
                                const VacuumCorrelators& corr) {
  if (win.n_sites() != corr.n_sites()) {
    throw DimensionMismatch("window and correlators disagree on the site count");
  }
  const Matrix dq = corr.q_matrix();
  const Matrix dp = corr.p_matrix();
  const double q2 = win.x.dot(dq * win.x) + win.y.dot(dp * win.y);
  const double p2 = win.z.dot(dq * win.z) + win.w.dot(dp * win.w);
  const double cross = win.x.dot(dq * win.z) + win.y.dot(dp * win.w);
  Eigen::Matrix2d m;
  m << q2, cross, cross, p2;
  return m;
}

namespace {

double g_from_radicand(double radicand) {
  if (radicand < -1e-9) {
    throw UncertaintyViolation("mode covariance violates the uncertainty bound: 4 det m - 1 = " +
                               std::to_string(radicand));
  }
  return std::sqrt(std::max(radicand, 0.0));
}

}  // namespace

double g_factor(const WindowFunctions& win, const VacuumCorrelators& corr) {
  if (win.y.cwiseAbs().maxCoeff() != 0.0 || win.z.cwiseAbs().maxCoeff() != 0.0) {
    throw ValidationError("g_factor requires a no-mixing window (y = z = 0); use standard_form");
  }
  validate_window(win);
  const Eigen::Matrix2d m = mode_covariance(win, corr);
  return g_from_radicand(4.0 * m(0, 0) * m(1, 1) - 1.0);
}

double StandardMode::nu() const { return 0.5 * std::sqrt(1.0 + g * g); }
double StandardMode::prefactor() const { return std::sqrt(nu()); }

Vector StandardMode::q_coefficients() const {
  return prefactor() * stack(big_x, big_y);
}

Vector StandardMode::p_coefficients() const {
  return prefactor() * stack(big_z, big_w);
}

WindowFunctions StandardMode::as_window() const {
  const double pf = prefactor();
  return WindowFunctions(pf * big_x, pf * big_y, pf * big_z, pf * big_w);
}

StandardMode standard_form(const WindowFunctions& win,
                           const VacuumCorrelators& corr) {
  validate_window(win);
  const Eigen::Matrix2d m = mode_covariance(win, corr);
  const double a = m(0, 0);
  const double b = m(1, 1);
  const double c = m(0, 1);

  // Rotation angle that diagonalizes m, folded into (-pi/4, pi/4] so the
  // no-mixing case reduces to theta_prime = 0.
  constexpr double quarter_pi = std::numbers::pi / 4.0;
  double theta_prime = 0.0;
  if (std::abs(c) > 1e-15 * (std::abs(a) + std::abs(b))) {
    if (std::abs(a - b) <= 1e-15 * (std::abs(a) + std::abs(b))) {
      theta_prime = quarter_pi;
    } else {
      theta_prime = 0.5 * std::atan2(2.0 * c, a - b);
      if (theta_prime > quarter_pi) theta_prime -= 2.0 * quarter_pi;
      if (theta_prime <= -quarter_pi) theta_prime += 2.0 * quarter_pi;
    }
  }

  const double cs = std::cos(theta_prime);
  const double sn = std::sin(theta_prime);
  Eigen::Matrix2d rot;
  rot << cs, sn, -sn, cs;
  const Eigen::Matrix2d diag = rot * m * rot.transpose();
  const double sigma = 0.25 * std::log(diag(1, 1) / diag(0, 0));

  Eigen::Matrix2d s = Eigen::Matrix2d::Zero();
  s(0, 0) = std::exp(sigma);
  s(1, 1) = std::exp(-sigma);
  s = s * rot;  // theta = 0

  StandardMode mode;
  mode.g = g_from_radicand(4.0 * (a * b - c * c) - 1.0);
  mode.theta = 0.0;
  mode.theta_prime = theta_prime;
  mode.sigma = sigma;
  const double inv_pf = 1.0 / std::sqrt(0.5 * std::sqrt(1.0 + mode.g * mode.g));
  mode.big_x = inv_pf * (s(0, 0) * win.x + s(0, 1) * win.z);
  mode.big_y = inv_pf * (s(0, 0) * win.y + s(0, 1) * win.w);
  mode.big_z = inv_pf * (s(1, 0) * win.x + s(1, 1) * win.z);
  mode.big_w = inv_pf * (s(1, 0) * win.y + s(1, 1) * win.w);
  return mode;
}

MomentumRepresentation momentum_representation(const StandardMode& mode,
                                               const LatticeSpec& spec) {
  const int n = spec.n_sites;
  if (mode.n_sites() != n) {
    throw DimensionMismatch("mode and lattice disagree on the site count");
  }
  MomentumRepresentation rep{Eigen::VectorXcd::Zero(n), Eigen::VectorXcd::Zero(n)};
  for (int k = 0; k < n; ++k) {
    const double omega = dispersion(k, spec);
    const double qs = 1.0 / std::sqrt(2.0 * omega);
    const double ps = std::sqrt(omega / 2.0);
    std::complex<double> qk(0.0, 0.0);
    std::complex<double> pk(0.0, 0.0);
    for (int site = 0; site < n; ++site) {
      // conjugated plane wave at site index site+1
      const double phase = -2.0 * std::numbers::pi * k * (site + 1) / n;
      const std::complex<double> u(std::cos(phase), std::sin(phase));
      qk += u * std::complex<double>(qs * mode.big_x(site), ps * mode.big_y(site));
      pk += u * std::complex<double>(qs * mode.big_z(site), ps * mode.big_w(site));
    }
    rep.q(k) = qk / std::sqrt(static_cast<double>(n));
    rep.p(k) = pk / std::sqrt(static_cast<double>(n));
  }
  return rep;
}

}  // namespace sop
