#include "latclock/estimation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "latclock/errors.hpp"
#include "latclock/tolerances.hpp"

namespace latclock {

namespace {

constexpr double PI = 3.141592653589793;

}  // namespace

// ----------------------------------------------------------------- SLD ----

SldResult sld_generic(const DensityOperator& rho, const Operator2& drho) {
  if (!drho.is_hermitian(SLD_PRE_TOL)) {
    throw NotHermitianError("sld_generic: drho is not Hermitian");
  }
  if (std::abs(drho.trace()) > SLD_PRE_TOL) {
    throw TraceNotZeroError("sld_generic: drho must be traceless");
  }

  const SpectralDecomposition es = eig_hermitian(rho.matrix());

  // <v_j| drho |v_k> in the eigenbasis of rho.
  auto me = [&](int j, int k) {
    const Vec2& vj = es.eigenvectors[static_cast<std::size_t>(j)];
    const Vec2& vk = es.eigenvectors[static_cast<std::size_t>(k)];
    const Complex w0 = drho(0, 0) * vk[0] + drho(0, 1) * vk[1];
    const Complex w1 = drho(1, 0) * vk[0] + drho(1, 1) * vk[1];
    return std::conj(vj[0]) * w0 + std::conj(vj[1]) * w1;
  };

  Operator2 sld;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      const double denom = es.eigenvalues[static_cast<std::size_t>(j)] +
                           es.eigenvalues[static_cast<std::size_t>(k)];
      if (denom <= SLD_DENOM_FLOOR) continue;  // kernel sector carries no info
      const Complex l_jk = 2.0 * me(j, k) / denom;
      sld = sld + l_jk * Operator2::outer(
                             es.eigenvectors[static_cast<std::size_t>(j)],
                             es.eigenvectors[static_cast<std::size_t>(k)]);
    }
  }

  const double qfi = (rho.matrix() * sld * sld).trace().real();
  return {sld, qfi};
}

Operator2 state_derivative_theta0(const ClockConfig& cfg) {
  const Visibility vis = dirichlet_visibility(cfg.a_alpha_half(),
                                              cfg.n_layer());
  const double a = cfg.a();
  const double psi = cfg.psi();
  // d/dtheta0 of (D/2) e^{-i a theta0}, phase evaluated in reduced form.
  const Complex m01 = Complex(0.0, -1.0) * (a * vis.value * 0.5) *
                      std::exp(Complex(0.0, -psi));
  return {0.0, m01, std::conj(m01), 0.0};
}

double qfi_single_layer(const ClockConfig& cfg) {
  const double a = cfg.a();
  return a * a;
}

double qfi_multilayer(const ClockConfig& cfg) {
  const Visibility vis = dirichlet_visibility(cfg.a_alpha_half(),
                                              cfg.n_layer());
  const double ad = cfg.a() * vis.value;
  return ad * ad;
}

// ------------------------------------------------------------ CRB report ----

CrbReport crb_report(const ClockConfig& cfg) {
  CrbReport r;
  r.qfi_per_atom = qfi_multilayer(cfg);
  const double n = static_cast<double>(cfg.n_site());
  r.diverged = (r.qfi_per_atom == 0.0);
  // IEEE division yields +inf on the divergence lattice; kept as sentinel.
  r.var_theta0_lower = 1.0 / (n * r.qfi_per_atom);
  r.var_v0_lower_over_c4 = r.var_theta0_lower;
  r.sigma_v0_lower = cfg.constants().c2() * std::sqrt(r.var_theta0_lower);
  return r;
}

double sql_sigma(double tau, double t_cycle, double tau_avg, long long n_site,
                 double omega0, double xi_w_sq) {
  auto positive = [](double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw NonPositiveInputError(std::string("sql_sigma: ") + name +
                                  " must be finite and > 0");
    }
  };
  positive(tau, "tau");
  positive(t_cycle, "t_cycle");
  positive(tau_avg, "tau_avg");
  positive(omega0, "omega0");
  positive(xi_w_sq, "xi_w_sq");
  if (n_site < 1) {
    throw NonPositiveInputError("sql_sigma: n_site must be >= 1");
  }
  return (1.0 / (omega0 * tau)) * std::sqrt(t_cycle / tau_avg) *
         std::sqrt(xi_w_sq / static_cast<double>(n_site));
}

// -------------------------------------------------------- time structure ----

TimeMarks time_marks(const ClockConfig& cfg, int k_max) {
  if (cfg.ell() < 1) {
    throw SingleLayerNoDivergenceError(
        "time_marks: a single layer never loses visibility");
  }
  if (k_max < 1) {
    throw std::invalid_argument("time_marks: k_max must be >= 1");
  }
  const int n = cfg.n_layer();
  const PhysicalConstants& pc = cfg.constants();
  const double tau_div1_times_n =
      2.0 * pc.hbar() * pc.c2() * PI /
      (cfg.delta_e() * cfg.g() * cfg.h_spacing());
  TimeMarks tm;
  for (int k = 1; k <= k_max; ++k) {
    if (k % n == 0) continue;  // removable point, bound stays finite
    tm.tau_div.push_back(static_cast<double>(k) / n * tau_div1_times_n);
  }
  tm.tau_min = 0.5 * tau_div1_times_n / n;
  const double half_rate =
      cfg.g() * n * cfg.h_spacing() / (2.0 * pc.c2());
  tm.bound_at_min_over_c4 =
      half_rate * half_rate / static_cast<double>(cfg.n_site());
  return tm;
}

double exact_bound_over_c4(const ClockConfig& cfg, double tau) {
  const double s = qfi_multilayer(cfg.with_tau(tau));
  return 1.0 / (static_cast<double>(cfg.n_site()) * s);
}

ExactMinimum locate_min_exact(const ClockConfig& cfg) {
  if (cfg.ell() < 1) {
    throw SingleLayerNoDivergenceError(
        "locate_min_exact: the single-layer bound is monotone in tau");
  }
  const double n = static_cast<double>(cfg.n_layer());
  const PhysicalConstants& pc = cfg.constants();
  const double b_rate = cfg.delta_e() * cfg.g() * cfg.h_spacing() /
                        (2.0 * pc.hbar() * pc.c2());
  const double tau_div1 = PI / (n * b_rate);

  auto f = [&](double tau) { return exact_bound_over_c4(cfg, tau); };

  // Log-spaced scan of (0, first divergence), then golden-section refine
  // inside the bracketing pair. Fixed grid, fixed order, bit-reproducible.
  const int scan_n = 1024;
  const double lo = tau_div1 * 1e-3;
  const double hi = tau_div1 * (1.0 - 1e-6);
  const double ratio = std::pow(hi / lo, 1.0 / (scan_n - 1));
  double best_tau = lo;
  double best_val = f(lo);
  double t = lo;
  for (int i = 1; i < scan_n; ++i) {
    t *= ratio;
    const double v = f(t);
    if (v < best_val) {
      best_val = v;
      best_tau = t;
    }
  }
  double a = std::fmax(best_tau / ratio, lo);
  double b = std::fmin(best_tau * ratio, hi);

  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while ((b - a) > 1e-12 * b) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  const double tau_star = 0.5 * (a + b);
  return {tau_star, f(tau_star)};
}

// ------------------------------------------------------------ limit form ----

std::pair<double, double> limit_sigma_forms(double g, double h_spacing,
                                            double n_layer, double n_site,
                                            double c2) {
  if (!(std::isfinite(g) && g > 0.0) ||
      !(std::isfinite(h_spacing) && h_spacing > 0.0)) {
    throw NonPositiveInputError("limit_sigma_forms: g and h must be > 0");
  }
  if (!(std::isfinite(n_layer) && n_layer >= 1.0)) {
    throw NonPositiveInputError("limit_sigma_forms: n_layer must be >= 1");
  }
  if (!(std::isfinite(n_site) && n_site >= 1.0)) {
    throw NonPositiveInputError("limit_sigma_forms: n_site must be >= 1");
  }
  if (!(std::isfinite(c2) && c2 > 0.0)) {
    throw NonPositiveInputError("limit_sigma_forms: c2 must be > 0");
  }
  const double sqrt_n = std::sqrt(n_site);
  // Potential-spread form and aspect-ratio form of the same tau -> inf
  // limit of sigma(V0)/c^2; they differ only by association order.
  const double delta_v = g * n_layer * h_spacing;
  const double spread_form = delta_v / (2.0 * c2 * sqrt_n);
  const double aspect_form = (n_layer / sqrt_n) * g * h_spacing / (2.0 * c2);
  return {spread_form, aspect_form};
}

std::pair<double, double> limit_sigma(const ClockConfig& cfg) {
  return limit_sigma_forms(cfg.g(), cfg.h_spacing(),
                           static_cast<double>(cfg.n_layer()),
                           static_cast<double>(cfg.n_site()),
                           cfg.constants().c2());
}

}  // namespace latclock
