#include "latclock/clock_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "latclock/dd.hpp"
#include "latclock/errors.hpp"
#include "latclock/tolerances.hpp"

namespace latclock {

// --------------------------------------------------------- Visibility ----

Visibility::Visibility(double v) : value(v) {
  if (!std::isfinite(v) || std::fabs(v) > 1.0 + VISIBILITY_SLACK) {
    throw std::invalid_argument("Visibility: value outside [-1, 1]");
  }
}

// -------------------------------------------------------- ClockConfig ----

namespace {

void check_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw NonPositiveInputError(std::string("ClockConfig: ") + name +
                                " must be finite and > 0");
  }
}

}  // namespace

ClockConfig ClockConfig::from_physical(double delta_e, double tau,
                                       double theta0, double g,
                                       double h_spacing, int ell,
                                       long long n_site,
                                       PhysicalConstants constants) {
  check_positive(delta_e, "delta_e");
  if (!std::isfinite(tau) || tau < 0.0) {
    throw NonPositiveInputError("ClockConfig: tau must be finite and >= 0");
  }
  if (!std::isfinite(theta0)) {
    throw std::invalid_argument("ClockConfig: theta0 must be finite");
  }
  check_positive(g, "g");
  check_positive(h_spacing, "h_spacing");
  if (ell < 0) {
    throw std::invalid_argument("ClockConfig: ell must be >= 0");
  }
  if (n_site < 1) {
    throw std::invalid_argument("ClockConfig: n_site must be >= 1");
  }
  ClockConfig cfg;
  cfg.delta_e_ = delta_e;
  cfg.tau_ = tau;
  cfg.theta0_ = theta0;
  cfg.g_ = g;
  cfg.h_spacing_ = h_spacing;
  cfg.ell_ = ell;
  cfg.n_site_ = n_site;
  cfg.constants_ = constants;
  return cfg;
}

ClockConfig ClockConfig::from_reduced_phase(double psi, double delta_e,
                                            double tau, double g,
                                            double h_spacing, int ell,
                                            long long n_site,
                                            PhysicalConstants constants) {
  if (!std::isfinite(psi)) {
    throw std::invalid_argument("ClockConfig: psi must be finite");
  }
  const double two_pi = 6.283185307179586;
  double wrapped = std::fmod(psi, two_pi);
  if (wrapped < 0.0) wrapped += two_pi;
  ClockConfig cfg = from_physical(delta_e, tau, /*theta0=*/0.0, g, h_spacing,
                                  ell, n_site, constants);
  const double a = cfg.a();
  cfg.theta0_ = a > 0.0 ? wrapped / a : 0.0;
  cfg.psi_pinned_ = wrapped;
  return cfg;
}

double ClockConfig::a() const {
  return delta_e_ * tau_ / constants_.hbar();
}

double ClockConfig::alpha() const {
  return g_ * h_spacing_ / constants_.c2();
}

double ClockConfig::a_alpha_half() const {
  // Fused form (ΔE g h τ)/(2 ħ c²); avoids the huge intermediate A whose
  // rounding would leak into the small product A*alpha.
  return (delta_e_ * g_ * h_spacing_ * tau_) / (2.0 * constants_.hbar() *
                                                constants_.c2());
}

double ClockConfig::psi() const {
  if (psi_pinned_) return *psi_pinned_;
  return dd::reduce_phase(delta_e_, tau_, constants_.hbar(), theta0_);
}

ClockConfig ClockConfig::with_tau(double tau) const {
  return from_physical(delta_e_, tau, theta0_, g_, h_spacing_, ell_, n_site_,
                       constants_);
}

// --------------------------------------------------------- operations ----

Operator2 hamiltonian(const ClockConfig& cfg, int layer_j) {
  if (std::abs(layer_j) > cfg.ell()) {
    throw LayerOutOfRangeError("hamiltonian: |layer_j| exceeds ell = " +
                               std::to_string(cfg.ell()));
  }
  const double w = 0.5 * cfg.delta_e() * (cfg.theta0() + layer_j * cfg.alpha());
  return Complex(w) * Operator2::sigma_z();
}

DensityOperator single_layer_state(const ClockConfig& cfg) {
  const double psi = cfg.psi();
  const Complex off = 0.5 * std::exp(Complex(0.0, -psi));
  return validate_density({0.5, off, std::conj(off), 0.5});
}

Visibility dirichlet_visibility(double a_alpha_half, int n_layer) {
  if (n_layer < 1 || n_layer % 2 == 0) {
    throw std::invalid_argument(
        "dirichlet_visibility: n_layer must be odd and >= 1");
  }
  if (!std::isfinite(a_alpha_half)) {
    throw std::invalid_argument("dirichlet_visibility: x must be finite");
  }
  if (n_layer == 1) return Visibility(1.0);

  const double x = a_alpha_half;
  const double pi = 3.141592653589793;

  // Zeros of sin(n x) that are not zeros of sin(x) are true divergence
  // points; snap to exact 0 when x sits on that lattice to float precision.
  const double m = x * n_layer / pi;
  const double k = std::round(m);
  if (k != 0.0 && std::fabs(m - k) <= DIRICHLET_ZERO_SNAP *
                                          std::fmax(1.0, std::fabs(m)) &&
      std::fmod(std::fabs(k), static_cast<double>(n_layer)) != 0.0) {
    return Visibility(0.0);
  }

  const double s = std::sin(x);
  double d;
  if (std::fabs(s) < DIRICHLET_SIN_SWITCH) {
    // Removable singularity at sin(x) = 0: use the cosine-sum identity
    // sin(n x)/(n sin x) = (1 + 2 sum_{j=1..l} cos(2 j x))/n.
    const int l = (n_layer - 1) / 2;
    double acc = 1.0;
    for (int j = 1; j <= l; ++j) acc += 2.0 * std::cos(2.0 * j * x);
    d = acc / n_layer;
  } else {
    d = std::sin(n_layer * x) / (n_layer * s);
  }
  if (d > 1.0) d = 1.0;
  if (d < -1.0) d = -1.0;
  return Visibility(d);
}

std::pair<DensityOperator, Visibility> multilayer_state(
    const ClockConfig& cfg) {
  const Visibility vis = dirichlet_visibility(cfg.a_alpha_half(),
                                              cfg.n_layer());
  const double psi = cfg.psi();
  const Complex off = 0.5 * vis.value * std::exp(Complex(0.0, -psi));
  DensityOperator rho = validate_density({0.5, off, std::conj(off), 0.5});
  return {std::move(rho), vis};
}

}  // namespace latclock
