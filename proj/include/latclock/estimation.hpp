#pragma once

#include <utility>
#include <vector>

#include "latclock/clock_model.hpp"

namespace latclock {

struct SldResult {
  Operator2 sld;  // Hermitian, solves drho = (rho*L + L*rho)/2
  double qfi;     // tr(rho * L^2)
};

// Spectral-formula symmetric logarithmic derivative: in the eigenbasis of
// rho, L_jk = 2 <j|drho|k> / (p_j + p_k); elements whose denominator is at
// or below SLD_DENOM_FLOOR are zeroed (they do not affect the information).
// Pre: drho Hermitian and traceless within SLD_PRE_TOL.
// Throws NotHermitianError, TraceNotZeroError.
SldResult sld_generic(const DensityOperator& rho, const Operator2& drho);

// Analytic d(rho)/d(theta0) of the layer-averaged state.
Operator2 state_derivative_theta0(const ClockConfig& cfg);

double qfi_single_layer(const ClockConfig& cfg);  // A^2
double qfi_multilayer(const ClockConfig& cfg);    // (A*D)^2

// Lower bounds on estimator variance per interrogation. var_theta0_lower
// and var_v0_lower_over_c4 are the same dimensionless number (theta0 and
// V0/c^2 differ by a constant offset). All bound fields are +inf with
// diverged = true when the information vanishes.
struct CrbReport {
  double qfi_per_atom;
  double var_theta0_lower;      // 1/(n_site * qfi)
  double var_v0_lower_over_c4;  // same value
  double sigma_v0_lower;        // c^2 * sqrt(var_theta0_lower), m^2/s^2
  bool diverged;
};

CrbReport crb_report(const ClockConfig& cfg);

// Shot-noise instability sigma = (1/(omega0 tau)) sqrt(t_cycle/tau_avg)
// sqrt(xi_w_sq/n_site). All inputs must be positive.
// Throws NonPositiveInputError.
double sql_sigma(double tau, double t_cycle, double tau_avg,
                 long long n_site, double omega0, double xi_w_sq);

// Divergence times of the multilayer bound and its first analytic minimum.
struct TimeMarks {
  std::vector<double> tau_div;  // ascending; k a multiple of n_layer skipped
  double tau_min;               // equals tau_div front / 2
  double bound_at_min_over_c4;  // (1/n_site)(g*(2l+1)*h/(2c^2))^2
};

// tau_div(k) = (k/n)(2 hbar c^2 pi / (delta_e g h)) for k = 1..k_max with
// k/n integer excluded (the kernel is finite there).
// Throws SingleLayerNoDivergenceError when ell = 0.
TimeMarks time_marks(const ClockConfig& cfg, int k_max);

// Var[theta0] lower bound at time tau, other fields fixed.
double exact_bound_over_c4(const ClockConfig& cfg, double tau);

struct ExactMinimum {
  double tau;
  double bound_over_c4;
};

// Minimizes exact_bound_over_c4 over (0, first divergence time): 1024-point
// log-spaced pre-scan, then golden-section inside the bracketing interval.
// Deterministic. Pre: ell >= 1.
ExactMinimum locate_min_exact(const ClockConfig& cfg);

// Large-stack limiting bound on sigma(V0)/c^2, in two algebraically equal
// forms: delta_v/(2 c^2 sqrt(n_site)) with delta_v = g*n_layer*h, and
// (n_layer/sqrt(n_site)) * g*h/(2 c^2). Formula-level function plus a
// config wrapper; the formula takes any n_layer >= 1.
std::pair<double, double> limit_sigma_forms(double g, double h_spacing,
                                            double n_layer, double n_site,
                                            double c2);
std::pair<double, double> limit_sigma(const ClockConfig& cfg);

}  // namespace latclock
