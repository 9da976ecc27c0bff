#pragma once

#include <optional>
#include <utility>

#include "latclock/constants.hpp"
#include "latclock/operator2.hpp"

namespace latclock {

// Ensemble coherence factor D in [-1, 1]. One layer always has D = 1.
struct Visibility {
  double value;
  explicit Visibility(double v);  // rejects |v| > 1 + VISIBILITY_SLACK
};

// Interrogation setup for a stack of 2*ell+1 lattice layers spaced
// h_spacing apart in a uniform field g, with n_site atoms per layer stack.
// theta0 folds the mean potential into a dimensionless tick-rate factor;
// a qubit at the central layer accumulates phase psi = A*theta0 mod 2*pi
// after time tau, with A = delta_e*tau/hbar.
//
// A and alpha are recomputed from fields on every call (nothing cached that
// could drift). The reduced phase is the exception: at physical scale A is
// ~1e20 and a plain-double product A*theta0 carries no phase information,
// so from_physical reduces it once through compensated double-double
// arithmetic, and from_reduced_phase lets callers pin psi directly.
class ClockConfig {
 public:
  static ClockConfig from_physical(double delta_e, double tau, double theta0,
                                   double g, double h_spacing, int ell,
                                   long long n_site,
                                   PhysicalConstants constants = {});

  // Pins the reduced phase. theta0 is back-filled as psi/a (0 when a = 0)
  // so that the plain product a()*theta0() stays consistent with psi().
  static ClockConfig from_reduced_phase(double psi, double delta_e,
                                        double tau, double g,
                                        double h_spacing, int ell,
                                        long long n_site,
                                        PhysicalConstants constants = {});

  double delta_e() const { return delta_e_; }
  double tau() const { return tau_; }
  double theta0() const { return theta0_; }
  double g() const { return g_; }
  double h_spacing() const { return h_spacing_; }
  int ell() const { return ell_; }
  int n_layer() const { return 2 * ell_ + 1; }
  long long n_site() const { return n_site_; }
  const PhysicalConstants& constants() const { return constants_; }

  double a() const;             // delta_e*tau/hbar
  double alpha() const;         // g*h_spacing/c^2
  double a_alpha_half() const;  // delta_e*g*h_spacing*tau/(2 hbar c^2), fused
  double psi() const;           // reduced phase in [0, 2*pi)

  // Same geometry at a different interrogation time. Drops a pinned phase
  // (psi is recomputed from fields at the new tau).
  ClockConfig with_tau(double tau) const;

 private:
  ClockConfig() = default;

  double delta_e_ = 0.0;
  double tau_ = 0.0;
  double theta0_ = 0.0;
  double g_ = 0.0;
  double h_spacing_ = 0.0;
  int ell_ = 0;
  long long n_site_ = 1;
  PhysicalConstants constants_;
  std::optional<double> psi_pinned_;
};

// H_j = (delta_e/2)(theta0 + j*alpha) sigma_z for layer j in [-ell, ell].
// Throws LayerOutOfRangeError.
Operator2 hamiltonian(const ClockConfig& cfg, int layer_j);

// rho = (1/2)[I + e^{-i psi}|0><1| + e^{+i psi}|1><0|], pure.
DensityOperator single_layer_state(const ClockConfig& cfg);

// D(x, n) = sin(n x)/(n sin x) for odd n, the layer-average phasor sum
// (1/n) sum_{j=-l}^{l} e^{i 2 j x} reduced to a real ratio.
//
// Near sin x = 0 (removable singularity, limit +1 for odd n) the cosine
// sum (1 + 2 sum_j cos 2jx)/n is used instead. Arguments within
// DIRICHLET_ZERO_SNAP relative of a divergence node n x = k pi, k not a
// multiple of n, return exactly 0 so that downstream divergence flags fire
// at the nodes they belong to.
Visibility dirichlet_visibility(double a_alpha_half, int n_layer);

// Layer-averaged state rho = (1/2)[(1+D)P+ + (1-D)P-] with projectors onto
// |psi_pm> = (|0> pm e^{i psi}|1>)/sqrt(2) and D the Dirichlet visibility
// at x = a_alpha_half. Equals the brute-force average of per-layer pure
// states with theta0 + j*alpha.
std::pair<DensityOperator, Visibility> multilayer_state(const ClockConfig& cfg);

}  // namespace latclock
