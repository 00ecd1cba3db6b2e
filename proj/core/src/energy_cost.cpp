#include "sop/energy_cost.hpp"

#include <cmath>
#include <numbers>

namespace sop {

namespace {

constexpr int kSites = 3;
constexpr double kHalfPi = std::numbers::pi / 2.0;

// Extended-space layout: (q_1,q_2,q_3,q_A',q_B', p_1,p_2,p_3,p_A',p_B').
constexpr int kModes = 5;
constexpr int kQa = 3, kQb = 4;
constexpr int kP0 = 5, kPa = 8, kPb = 9;

LatticeSpec n3_spec(const N3Model& model) { return LatticeSpec(kSites, model.eta); }

ExtendedSystem n3_extended(const N3Model& model) {
  return ExtendedSystem(n3_spec(model));
}

Vector mode_a_q(const N3Model& model) {
  Vector v = Vector::Zero(2 * kModes);
  v(0) = model.x_a1;
  return v;
}

Vector mode_a_p(const N3Model& model) {
  Vector v = Vector::Zero(2 * kModes);
  v(kP0 + 0) = model.w_a1;
  v(kP0 + 1) = model.w_a2;
  return v;
}

Vector mode_b_q(const N3Model& model) {
  Vector v = Vector::Zero(2 * kModes);
  for (int j = 0; j < 3; ++j) v(j) = model.x_b(j);
  return v;
}

Vector mode_b_p(const N3Model& model) {
  Vector v = Vector::Zero(2 * kModes);
  for (int j = 0; j < 3; ++j) v(kP0 + j) = model.w_b(j);
  return v;
}

// Composed Heisenberg map of the generic swap path (B after A on the state).
Matrix generic_composed_map(const N3Model& model) {
  const SymplecticMap swap_a =
      swap_symplectic(mode_a_q(model), mode_a_p(model), kQa, kModes);
  const SymplecticMap swap_b =
      swap_symplectic(mode_b_q(model), mode_b_p(model), kQb, kModes);
  return (swap_b * swap_a).mat();
}

}  // namespace

N3Model build_n3(double eta, double delta) {
  if (!(eta > 0.0)) throw ValidationError("build_n3 requires eta > 0");
  if (!(delta > 0.0)) throw ValidationError("build_n3 requires delta > 0");

  N3Model model;
  model.eta = eta;
  model.delta = delta;
  model.corr = correlators(LatticeSpec(kSites, eta));
  const double dq0 = model.corr.q(0);
  const double dp0 = model.corr.p(0);
  const double dp1 = model.corr.p(1);

  const double q2 = dq0;
  const double p2 = dp0 * (1.0 + 1.0 / (delta * delta)) + (2.0 / delta) * dp1;
  if (!(p2 > 0.0) || !(q2 > 0.0)) {
    throw DegenerateMode("mode variances must be positive; got <q^2> = " +
                         std::to_string(q2) + ", <p^2> = " + std::to_string(p2));
  }
  model.c_factor = std::pow(p2 / q2, 0.25);

  const double radicand = 4.0 * q2 * p2 - 1.0;
  if (radicand < -1e-9) {
    throw UncertaintyViolation("4 <q^2><p^2> - 1 is negative");
  }
  model.g = std::sqrt(std::max(radicand, 0.0));
  if (model.g <= 1e-10) {
    // cannot happen for eta > 0; the partner construction divides by g
    throw DegenerateMode("mode is pure (g = 0); no partner to swap");
  }

  const double c = model.c_factor;
  model.x_a1 = c;
  model.w_a1 = 1.0 / c;
  model.w_a2 = 1.0 / (c * delta);

  const double g = model.g;
  const double sq = std::sqrt(1.0 + g * g);
  // Partner windows in the same normalization; the partner map is linear, so
  // it acts on these coefficients directly.
  model.x_b(0) = (sq / g) * model.x_a1 -
                 (2.0 / g) * (dp0 * model.w_a1 + dp1 * model.w_a2);
  model.x_b(1) = -(2.0 / g) * (dp1 * model.w_a1 + dp0 * model.w_a2);
  model.x_b(2) = -(2.0 / g) * (model.corr.p(2) * model.w_a1 + dp1 * model.w_a2);
  model.w_b(0) = -(sq / g) * model.w_a1 + (2.0 / g) * dq0 * model.x_a1;
  model.w_b(1) = -(sq / g) * model.w_a2 + (2.0 / g) * model.corr.q(1) * model.x_a1;
  model.w_b(2) = (2.0 / g) * model.corr.q(2) * model.x_a1;

  const double omega_sq = model.x_b.dot(model.w_b);
  if (!(omega_sq > 0.0)) {
    throw DegenerateMode("partner coefficient pairing is not positive");
  }
  model.omega = std::sqrt(omega_sq);
  const double ramp = (1.0 - std::cos(kHalfPi * model.omega)) / omega_sq;
  model.d = -ramp * model.x_b;
  model.s = -ramp * model.w_b;
  model.d_dev = std::sin(kHalfPi * model.omega) / model.omega;
  model.s_dev = model.d_dev;
  return model;
}

SymplecticMap n3_swap_aa(const N3Model& model) {
  const double c = model.c_factor;
  const double delta = model.delta;
  Matrix m = Matrix::Identity(2 * kModes, 2 * kModes);
  // q_1 -> (1/C) q_A'
  m(0, 0) = 0.0;
  m(0, kQa) = 1.0 / c;
  // q_2 -> q_2 - (1/delta) q_1 + (1/(C delta)) q_A'
  m(1, 0) = -1.0 / delta;
  m(1, kQa) = 1.0 / (c * delta);
  // q_A' -> -C q_1
  m(kQa, kQa) = 0.0;
  m(kQa, 0) = -c;
  // p_1 -> -(1/delta) p_2 + C p_A'
  m(kP0 + 0, kP0 + 0) = 0.0;
  m(kP0 + 0, kP0 + 1) = -1.0 / delta;
  m(kP0 + 0, kPa) = c;
  // p_A' -> -(1/C)(p_1 + p_2/delta)
  m(kPa, kPa) = 0.0;
  m(kPa, kP0 + 0) = -model.w_a1;
  m(kPa, kP0 + 1) = -model.w_a2;
  return SymplecticMap(std::move(m));
}

SymplecticMap n3_swap_bb(const N3Model& model) {
  Matrix m = Matrix::Identity(2 * kModes, 2 * kModes);
  for (int j = 0; j < 3; ++j) {
    // q_j -> q_j + w_b(j) [d_dev q_B' + sum_k d_k q_k]
    m(j, kQb) += model.w_b(j) * model.d_dev;
    for (int k = 0; k < 3; ++k) m(j, k) += model.w_b(j) * model.d(k);
    // p_j -> p_j + x_b(j) [s_dev p_B' + sum_k s_k p_k]
    m(kP0 + j, kPb) += model.x_b(j) * model.s_dev;
    for (int k = 0; k < 3; ++k) m(kP0 + j, kP0 + k) += model.x_b(j) * model.s(k);
  }
  // q_B'(theta) = cos(omega theta) q_B' - sin(omega theta)/omega sum_k x_b(k) q_k
  const double cos_term = std::cos(kHalfPi * model.omega);
  const double sinc_term = std::sin(kHalfPi * model.omega) / model.omega;
  m(kQb, kQb) = cos_term;
  for (int k = 0; k < 3; ++k) m(kQb, k) = -sinc_term * model.x_b(k);
  m(kPb, kPb) = cos_term;
  for (int k = 0; k < 3; ++k) m(kPb, kP0 + k) = -sinc_term * model.w_b(k);
  return SymplecticMap(std::move(m));
}

SymplecticMap n3_heisenberg_map(const N3Model& model) {
  // Conjugation order: H is transformed by the A swap first, then the B swap.
  return n3_swap_aa(model) * n3_swap_bb(model);
}

namespace {

double alpha_q_tabulated(const N3Model& m) {
  const double d1 = m.d(0), d2 = m.d(1), d3 = m.d(2);
  const double w1 = m.w_b(0), w2 = m.w_b(1), w3 = m.w_b(2);
  const double delta = m.delta, eta = m.eta;
  const double dsum = d1 * d1 + d2 * d2 + d3 * d3;
  const double b =
      w1 * w1 * (2 * eta + 1) * dsum + 2 * w1 * d1 * (2 * eta + 1) -
      2 * w1 * delta * (w2 * dsum + d2) +
      2 * w1 * eta * d1 * d1 * delta * (w3 - 2 * w2) +
      2 * w1 * eta * delta * d2 * d2 * (w3 - 2 * w2) +
      2 * w1 * eta * delta * d3 * d3 * (w3 - 2 * w2) +
      2 * w1 * eta * delta * (-2 * d2 + d3) + (2 * eta + 1) - d2 * delta * w2 +
      delta * w2 * w2 * (2 * eta + 1) * delta * dsum - 2 * delta +
      d1 * delta * w2 * delta +
      delta * w2 * eta * (delta * (w3 * dsum - 2 * d2 + d3) + 2 * d1) +
      delta * delta * w3 * w3 * (2 * eta + 1) * dsum + 2 * delta * w3 * d1 * eta +
      2 * w3 * delta * delta * (-d2 * eta + 2 * d3 * eta + d3) +
      4 * eta * delta * delta + 2 * delta * delta;
  return b / (2 * delta * delta);
}

// Re-collected coefficient of Dq(0) in the expanded operator sum. The
// tabulated expression above mis-collects several W2 cross terms; this form
// agrees with the symplectic oracle to rounding.
double alpha_q_corrected(const N3Model& m) {
  const double d1 = m.d(0), d2 = m.d(1), d3 = m.d(2);
  const double w1 = m.w_b(0), w2 = m.w_b(1), w3 = m.w_b(2);
  const double delta = m.delta, eta = m.eta;
  const double dsum = d1 * d1 + d2 * d2 + d3 * d3;
  const double two_eta1 = 2 * eta + 1;
  const double b =
      w1 * w1 * two_eta1 * dsum +
      w1 * (-2 * w2 * delta * two_eta1 * dsum + 2 * w3 * delta * eta * dsum +
            2 * two_eta1 * d1 - 2 * two_eta1 * delta * d2 + 2 * delta * eta * d3) +
      w2 * w2 * delta * delta * two_eta1 * dsum +
      w2 * (-2 * w3 * delta * delta * eta * dsum - 2 * two_eta1 * delta * d1 +
            2 * two_eta1 * delta * delta * d2 - 2 * delta * delta * eta * d3) +
      w3 * w3 * delta * delta * two_eta1 * dsum +
      w3 * (2 * delta * eta * d1 - 2 * delta * delta * eta * d2 +
            2 * two_eta1 * delta * delta * d3) +
      2 * two_eta1 * delta * delta + two_eta1;
  return b / (2 * delta * delta);
}

}  // namespace

CostBreakdown cost_coefficients(const N3Model& m, CostForm form) {
  const double d1 = m.d(0), d2 = m.d(1), d3 = m.d(2);
  const double s1 = m.s(0), s2 = m.s(1), s3 = m.s(2);
  const double x2 = m.x_b(1), x3 = m.x_b(2);
  const double w1 = m.w_b(0), w2 = m.w_b(1), w3 = m.w_b(2);
  const double delta = m.delta, eta = m.eta, c = m.c_factor;
  const double ssum = s1 * s1 + s2 * s2 + s3 * s3;
  const double sb = m.s_dev, db = m.d_dev;

  CostBreakdown out;
  out.alpha_p = (x2 * x2 * (delta * delta + 1) * ssum +
                 2 * x2 * s2 * (delta * delta + 1) +
                 delta * delta * (x3 * (x3 * ssum + 2 * s3) + 2) + 1) /
                (2 * delta * delta);
  out.beta_p = (x2 * x2 * (delta * delta + 1) * (s1 * (s2 + s3) + s2 * s3) +
                x2 * (delta * delta + 1) * (s1 + s3) +
                x3 * delta * delta * (x3 * s3 * (s1 + s2) + x3 * s1 * s2 + s1 + s2)) /
               (delta * delta);
  out.alpha_q = form == CostForm::corrected ? alpha_q_corrected(m) : alpha_q_tabulated(m);
  out.beta_q =
      (w1 * w1 * (2 * eta + 1) * (d1 * (d2 + d3) + d2 * d3) -
       w1 * d1 * (eta + 1) * delta -
       2 * w1 * w2 * d2 * (2 * eta + 1) * delta * (d1 + d3) +
       w1 * d2 * eta * (delta * (2 * w3 * (d1 + d3) + 1) + 2) + w1 * d2 -
       2 * w1 * d3 * eta * (2 * w2 * d1 * delta - w3 * d1 * delta + delta - 1) -
       2 * w1 * d3 * w2 * d1 * delta - w1 * d3 * (delta - 1) +
       delta * w2 * w2 * (2 * eta + 1) * delta * (d1 * (d2 + d3) + d2 * d3) -
       eta * w2 * delta * delta * d1 * (2 * w3 * (d2 + d3) - 1) -
       eta * w2 * delta * delta * (2 * w3 * d2 * d3 + d2 - 2 * d3) -
       2 * eta * w2 * delta * (d2 + d3) + d1 * w2 * delta * delta -
       w2 * delta * d2 + w2 * delta * d3 * (delta - 1) +
       w3 * w3 * delta * (2 * eta + 1) * delta * (d3 * (d1 + d2) + d1 * d2) +
       w3 * delta * eta * (delta * (d1 + 2 * d2 - d3) + d2 + d3) +
       w3 * delta * delta * (d1 + d2) - eta * delta * (delta + 1) - delta) /
      (delta * delta);
  out.gamma_a = c * c / 2;
  out.mu_a = (delta * delta + 2 * eta * ((delta - 1) * delta + 1) + 1) /
             (2 * c * c * delta * delta);
  out.gamma_b = sb * sb / (2 * delta * delta) *
                (delta * delta * (x2 * x2 + x3 * x3) + x2 * x2);
  out.mu_b = db * db / (2 * delta * delta) *
             (w1 * w1 * (2 * eta + 1) -
              2 * w1 * delta * (2 * w2 * eta + w2 - w3 * eta) +
              2 * delta * delta * eta * (w2 * w2 - w2 * w3 + w3 * w3) +
              delta * delta * (w2 * w2 + w3 * w3));
  out.kappa = out.alpha_p * m.corr.p(0) + out.beta_p * m.corr.p(1) +
              out.alpha_q * m.corr.q(0) + out.beta_q * m.corr.q(1);
  return out;
}

CostBreakdown cost_coefficients_oracle(const N3Model& model) {
  const ExtendedSystem ext = n3_extended(model);
  const Matrix map = generic_composed_map(model);
  const Matrix h_t = map.transpose() * ext.hamiltonian().mat() * map;

  CostBreakdown out;
  for (int i = 0; i < 3; ++i) {
    out.alpha_q += 0.5 * h_t(i, i);
    out.alpha_p += 0.5 * h_t(kP0 + i, kP0 + i);
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      out.beta_q += 0.5 * h_t(i, j);
      out.beta_p += 0.5 * h_t(kP0 + i, kP0 + j);
    }
  }
  out.mu_a = 0.5 * h_t(kQa, kQa);
  out.gamma_a = 0.5 * h_t(kPa, kPa);
  out.mu_b = 0.5 * h_t(kQb, kQb);
  out.gamma_b = 0.5 * h_t(kPb, kPb);
  out.kappa = out.alpha_p * model.corr.p(0) + out.beta_p * model.corr.p(1) +
              out.alpha_q * model.corr.q(0) + out.beta_q * model.corr.q(1);
  return out;
}

double delta_e_swap(const N3Model& model, const DeviceState& dev_a,
                    const DeviceState& dev_b, CostForm form) {
  const CostBreakdown cf = cost_coefficients(model, form);
  return cf.kappa + cf.gamma_a * dev_a.p2 + cf.mu_a * dev_a.q2 +
         cf.gamma_b * dev_b.p2 + cf.mu_b * dev_b.q2 - vacuum_energy(n3_spec(model));
}

double delta_e_swap_oracle(const LatticeSpec& spec, const N3Model& model,
                           const DeviceState& dev_a, const DeviceState& dev_b) {
  if (spec.n_sites != kSites) {
    throw DimensionMismatch("delta_e_swap_oracle requires a 3-site lattice");
  }
  if (spec.eta != model.eta) {
    throw ValidationError("lattice and model disagree on eta");
  }
  const ExtendedSystem ext(spec);
  const QuadraticHamiltonian h = ext.hamiltonian();
  const CovarianceMatrix before = ext.initial_covariance(dev_a, dev_b);
  const CovarianceMatrix after =
      transform_covariance(SymplecticMap(generic_composed_map(model)), before);
  return quadratic_expectation(h, after) - quadratic_expectation(h, before);
}

double LaurentSeries::at(int order) const {
  const int idx = order - min_order;
  if (idx < 0 || idx >= static_cast<int>(coefficients.size())) {
    throw ValidationError("Laurent order " + std::to_string(order) +
                          " was not extracted");
  }
  return coefficients[static_cast<size_t>(idx)];
}

namespace {

// Interpolation / least-squares on the scaled basis t^k, t = delta/delta0.
LaurentSeries extract_from_samples(const std::vector<double>& samples,
                                   int min_order, int max_order, double delta0,
                                   double ratio) {
  const int n_orders = max_order - min_order + 1;
  const int n_points = static_cast<int>(samples.size());

  std::vector<long double> t(static_cast<size_t>(n_points));
  std::vector<long double> g(static_cast<size_t>(n_points));
  for (int j = 0; j < n_points; ++j) {
    const size_t js = static_cast<size_t>(j);
    t[js] = std::pow(static_cast<long double>(ratio), j);
    if (!std::isfinite(samples[js])) {
      throw IllConditioned("non-finite sample in Laurent extraction");
    }
    g[js] = static_cast<long double>(samples[js]) *
            std::pow(t[js], static_cast<long double>(-min_order));
  }

  std::vector<long double> u(static_cast<size_t>(n_orders));
  if (n_points == n_orders) {
    // Bjorck-Pereira solve of the Vandermonde interpolation problem.
    std::vector<long double> a = g;
    const int n = n_points;
    for (int k = 0; k < n - 1; ++k) {
      for (int i = n - 1; i > k; --i) {
        a[static_cast<size_t>(i)] =
            (a[static_cast<size_t>(i)] - a[static_cast<size_t>(i - 1)]) /
            (t[static_cast<size_t>(i)] - t[static_cast<size_t>(i - k - 1)]);
      }
    }
    for (int k = n - 2; k >= 0; --k) {
      for (int i = k; i < n - 1; ++i) {
        a[static_cast<size_t>(i)] -= t[static_cast<size_t>(k)] * a[static_cast<size_t>(i + 1)];
      }
    }
    u = a;
  } else {
    Matrix vand(n_points, n_orders);
    Vector rhs(n_points);
    for (int j = 0; j < n_points; ++j) {
      rhs(j) = static_cast<double>(g[static_cast<size_t>(j)]);
      for (int k = 0; k < n_orders; ++k) {
        vand(j, k) = static_cast<double>(
            std::pow(t[static_cast<size_t>(j)], static_cast<long double>(k)));
      }
    }
    const Vector sol = vand.colPivHouseholderQr().solve(rhs);
    for (int k = 0; k < n_orders; ++k) u[static_cast<size_t>(k)] = sol(k);
  }

  long double residual = 0.0L;
  long double lead = 0.0L;
  for (int k = 0; k < n_orders; ++k) {
    lead = std::max(lead, std::abs(u[static_cast<size_t>(k)]));
  }
  for (int j = 0; j < n_points; ++j) {
    long double value = 0.0L;
    for (int k = n_orders - 1; k >= 0; --k) {
      value = value * t[static_cast<size_t>(j)] + u[static_cast<size_t>(k)];
    }
    residual = std::max(residual, std::abs(value - g[static_cast<size_t>(j)]));
  }
  if (lead > 0.0L && residual > 1e-6L * lead) {
    throw IllConditioned("Laurent fit residual " +
                         std::to_string(static_cast<double>(residual)) +
                         " exceeds 1e-6 of the leading coefficient");
  }

  LaurentSeries series;
  series.min_order = min_order;
  series.residual = static_cast<double>(residual);
  series.coefficients.resize(static_cast<size_t>(n_orders));
  for (int k = 0; k < n_orders; ++k) {
    const long double scale =
        std::pow(static_cast<long double>(delta0), static_cast<long double>(min_order + k));
    series.coefficients[static_cast<size_t>(k)] =
        static_cast<double>(u[static_cast<size_t>(k)] / scale);
  }
  return series;
}

void check_laurent_args(int min_order, int max_order, double delta0, double ratio,
                        int n_points) {
  if (min_order > max_order) throw ValidationError("min_order exceeds max_order");
  if (!(delta0 > 0.0)) throw ValidationError("delta0 must be positive");
  if (!(ratio > 1.0)) throw ValidationError("ratio must exceed 1");
  if (n_points < max_order - min_order + 1) {
    throw ValidationError("need at least as many sample points as orders");
  }
}

}  // namespace

LaurentSeries laurent_extract(const std::function<double(double)>& f,
                              int min_order, int max_order, double delta0,
                              double ratio, int n_points) {
  check_laurent_args(min_order, max_order, delta0, ratio, n_points);
  std::vector<double> samples(static_cast<size_t>(n_points));
  for (int j = 0; j < n_points; ++j) {
    samples[static_cast<size_t>(j)] = f(delta0 * std::pow(ratio, j));
  }
  return extract_from_samples(samples, min_order, max_order, delta0, ratio);
}

std::vector<SweepRow> phi_sweep(int n_points, CostForm form, double delta0,
                                double ratio, int laurent_points) {
  if (n_points < 2) throw ValidationError("phi_sweep needs at least 2 points");
  check_laurent_args(-2, 3, delta0, ratio, laurent_points);

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<size_t>(n_points));
  for (int i = 1; i <= n_points; ++i) {
    const double phi = kHalfPi * i / (n_points + 1);
    const double eta = std::tan(phi);

    std::vector<double> kappa(static_cast<size_t>(laurent_points));
    std::vector<double> gamma_a(static_cast<size_t>(laurent_points));
    std::vector<double> mu_a(static_cast<size_t>(laurent_points));
    std::vector<double> gamma_b(static_cast<size_t>(laurent_points));
    std::vector<double> mu_b(static_cast<size_t>(laurent_points));
    for (int j = 0; j < laurent_points; ++j) {
      const size_t js = static_cast<size_t>(j);
      const CostBreakdown cf =
          cost_coefficients(build_n3(eta, delta0 * std::pow(ratio, j)), form);
      kappa[js] = cf.kappa;
      gamma_a[js] = cf.gamma_a;
      mu_a[js] = cf.mu_a;
      gamma_b[js] = cf.gamma_b;
      mu_b[js] = cf.mu_b;
    }

    SweepRow row;
    row.phi = phi;
    const LaurentSeries ks = extract_from_samples(kappa, -2, 3, delta0, ratio);
    row.kappa_m2 = ks.at(-2);
    row.kappa_m1 = ks.at(-1);
    row.gamma_a_m1 = extract_from_samples(gamma_a, -2, 3, delta0, ratio).at(-1);
    row.mu_a_m1 = extract_from_samples(mu_a, -2, 3, delta0, ratio).at(-1);
    row.gamma_b_m1 = extract_from_samples(gamma_b, -2, 3, delta0, ratio).at(-1);
    row.mu_b_m1 = extract_from_samples(mu_b, -2, 3, delta0, ratio).at(-1);
    rows.push_back(row);
  }
  return rows;
}

std::vector<CostDiscrepancy> compare_cost_paths(std::span<const double> etas,
                                                std::span<const double> deltas,
                                                CostForm form, double tol) {
  std::vector<CostDiscrepancy> report;
  const DeviceState vacuum = DeviceState::vacuum();
  const DeviceState squeezed(2.0, 0.125, 0.0);

  for (double eta : etas) {
    for (double delta : deltas) {
      const N3Model model = build_n3(eta, delta);
      const CostBreakdown closed = cost_coefficients(model, form);
      const CostBreakdown oracle = cost_coefficients_oracle(model);

      auto compare = [&](const std::string& name, double closed_value,
                         double oracle_value) {
        const double denom = std::max(std::abs(oracle_value), 1e-300);
        const double rel = std::abs(closed_value - oracle_value) / denom;
        if (rel > tol) {
          report.push_back({name, eta, delta, closed_value, oracle_value, rel});
        }
      };
      compare("alpha_p", closed.alpha_p, oracle.alpha_p);
      compare("beta_p", closed.beta_p, oracle.beta_p);
      compare("alpha_q", closed.alpha_q, oracle.alpha_q);
      compare("beta_q", closed.beta_q, oracle.beta_q);
      compare("gamma_a", closed.gamma_a, oracle.gamma_a);
      compare("mu_a", closed.mu_a, oracle.mu_a);
      compare("gamma_b", closed.gamma_b, oracle.gamma_b);
      compare("mu_b", closed.mu_b, oracle.mu_b);
      compare("kappa", closed.kappa, oracle.kappa);

      const LatticeSpec spec(kSites, eta);
      compare("delta_e_swap(vacuum)", delta_e_swap(model, vacuum, vacuum, form),
              delta_e_swap_oracle(spec, model, vacuum, vacuum));
      compare("delta_e_swap(squeezed)",
              delta_e_swap(model, squeezed, squeezed, form),
              delta_e_swap_oracle(spec, model, squeezed, squeezed));
    }
  }
  return report;
}

}  // namespace sop
