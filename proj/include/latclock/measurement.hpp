#pragma once

#include <cstdint>
#include <vector>

#include "latclock/clock_model.hpp"

namespace latclock {

// Covariant phase measurement dM(phi) = |psi_phi><psi_phi| dphi/pi with
// |psi_phi> = (|0> + e^{i phi}|1>)/sqrt(2), phi in [0, 2*pi).
struct PhasePovm {
  int resolution = 4096;  // quadrature node count for density integrals

  Operator2 effect_density(double phi) const;      // |psi_phi><psi_phi| / pi
  Operator2 completeness_quadrature() const;       // midpoint integral, = I
};

// Outcome statistics of the phase measurement on a state with reduced
// phase psi and visibility D: f(phi) = (1 + D cos(psi - phi)) / (2*pi).
struct OutcomeModel {
  double psi;         // stored wrapped to [0, 2*pi)
  double visibility;  // D in [0, 1]

  OutcomeModel(double psi_in, double visibility_in);
};

double outcome_density(const OutcomeModel& model, double phi);

// i.i.d. draws from outcome_density by the two-step realization: phi' drawn
// uniform on [0, pi), then the projective pair (phi', phi'+pi) resolved with
// acceptance probability p = (1 + D cos(psi - phi'))/2. Deterministic and
// platform-independent for a given seed (mt19937_64 with an explicit 53-bit
// uniform mapping, no library distributions).
std::vector<double> sample(const OutcomeModel& model, std::size_t n,
                           std::uint64_t seed);

// (1/n) sum 2 e^{i phi_k}; expectation D e^{i psi}. Throws EmptySampleError.
Complex phasor_estimate(const std::vector<double>& samples);

// argmax over psi of sum log(1 + D cos(psi - phi_k)), started at the phasor
// argument and refined by golden-section within +-pi/8; log arguments at or
// below 1e-300 are clamped. Returns a value in [0, 2*pi).
// Throws EmptySampleError.
double mle_estimate(const std::vector<double>& samples, double visibility = 1.0);

// I_psi = integral (d_psi ln f)^2 f dphi by composite midpoint rule on the
// periodic domain (nodes offset half a step, so the D = 1 integrand is
// never evaluated at its removable zero). Equals 1 - sqrt(1 - D^2).
double classical_fisher_quadrature(const OutcomeModel& model,
                                   int resolution = 4096);

// (I_M(theta0), S) = (A^2 (1 - sqrt(1 - D^2)), (A D)^2) for the config's
// visibility. The first never exceeds the second.
std::pair<double, double> povm_vs_qfi_gap(const ClockConfig& cfg);

// Per-trial substream seed: seed XOR splitmix64(trial index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

struct RunSummary {
  double circular_mean;      // in [0, 2*pi)
  double circular_variance;  // 1 - mean resultant length
  double mean_sq_error;      // mean wrapped squared deviation from psi_true
};

RunSummary summarize_estimates(const std::vector<double>& estimates,
                               double psi_true);

// Repeated-trial maximum-likelihood experiment. estimates[t] comes from an
// independent substream, so the list does not depend on evaluation order.
struct EstimationRun {
  std::uint64_t seed;
  std::size_t n_samples;
  std::size_t n_trials;
  double psi_true;
  std::vector<double> estimates;  // one per trial, in [0, 2*pi)
  RunSummary summary;
};

EstimationRun run_estimation(const OutcomeModel& model, std::size_t n_samples,
                             std::size_t n_trials, std::uint64_t seed);

// Signed angular difference wrapped to (-pi, pi].
double wrap_angle_signed(double a);

}  // namespace latclock
