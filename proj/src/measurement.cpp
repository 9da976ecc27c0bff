#include "latclock/measurement.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "latclock/errors.hpp"
#include "latclock/estimation.hpp"

namespace latclock {

namespace {

constexpr double PI = 3.141592653589793;
constexpr double TWO_PI = 6.283185307179586;

double wrap_to_2pi(double a) {
  double r = std::fmod(a, TWO_PI);
  if (r < 0.0) r += TWO_PI;
  return r;
}

// Uniform double in [0, 1) from the high 53 bits; fixed mapping so the
// stream is identical on every platform (library distributions are not).
double uniform53(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

// ------------------------------------------------------------- POVM ----

Operator2 PhasePovm::effect_density(double phi) const {
  const Complex e = std::exp(Complex(0.0, phi));
  // |psi_phi><psi_phi| / pi with |psi_phi> = (|0> + e^{i phi}|1>)/sqrt(2)
  const double w = 0.5 / PI;
  return {w, w * std::conj(e), w * e, w};
}

Operator2 PhasePovm::completeness_quadrature() const {
  const double step = TWO_PI / resolution;
  Operator2 acc;
  for (int k = 0; k < resolution; ++k) {
    const double phi = (k + 0.5) * step;
    acc = acc + Complex(step) * effect_density(phi);
  }
  return acc;
}

// ---------------------------------------------------- outcome model ----

OutcomeModel::OutcomeModel(double psi_in, double visibility_in)
    : psi(wrap_to_2pi(psi_in)), visibility(visibility_in) {
  if (!std::isfinite(psi_in)) {
    throw std::invalid_argument("OutcomeModel: psi must be finite");
  }
  if (!std::isfinite(visibility_in) || visibility_in < 0.0 ||
      visibility_in > 1.0) {
    throw std::invalid_argument("OutcomeModel: visibility outside [0, 1]");
  }
}

double outcome_density(const OutcomeModel& model, double phi) {
  return (1.0 + model.visibility * std::cos(model.psi - phi)) / TWO_PI;
}

std::vector<double> sample(const OutcomeModel& model, std::size_t n,
                           std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Two draws per sample in fixed order, so the stream layout is stable.
    const double phi_prime = PI * uniform53(eng);
    const double p =
        0.5 * (1.0 + model.visibility * std::cos(model.psi - phi_prime));
    const double u = uniform53(eng);
    out.push_back(u < p ? phi_prime : phi_prime + PI);
  }
  return out;
}

Complex phasor_estimate(const std::vector<double>& samples) {
  if (samples.empty()) {
    throw EmptySampleError("phasor_estimate: empty sample list");
  }
  Complex acc;
  for (double phi : samples) acc += std::exp(Complex(0.0, phi));
  return 2.0 * acc / static_cast<double>(samples.size());
}

double mle_estimate(const std::vector<double>& samples, double visibility) {
  if (samples.empty()) {
    throw EmptySampleError("mle_estimate: empty sample list");
  }
  const std::size_t n = samples.size();
  std::vector<double> c(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = std::cos(samples[i]);
    s[i] = std::sin(samples[i]);
  }
  // log L(psi) = sum log(1 + D cos(psi - phi_i)); cos expands over the
  // precomputed component sums term by term (argument clamped at 1e-300).
  auto loglik = [&](double psi) {
    const double cp = std::cos(psi);
    const double sp = std::sin(psi);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double arg = 1.0 + visibility * (cp * c[i] + sp * s[i]);
      acc += std::log(arg > 1e-300 ? arg : 1e-300);
    }
    return acc;
  };

  const double init = std::arg(phasor_estimate(samples));
  double a = init - PI / 8.0;
  double b = init + PI / 8.0;
  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = loglik(x1);
  double f2 = loglik(x2);
  while ((b - a) > 1e-10) {
    if (f1 > f2) {  // maximize
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = loglik(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = loglik(x2);
    }
  }
  return wrap_to_2pi(0.5 * (a + b));
}

double classical_fisher_quadrature(const OutcomeModel& model, int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument(
        "classical_fisher_quadrature: resolution must be >= 2");
  }
  const double d = model.visibility;
  const double step = TWO_PI / resolution;
  double acc = 0.0;
  for (int k = 0; k < resolution; ++k) {
    // Half-step offset keeps the D = 1 node away from the removable zero
    // of (d_psi ln f)^2 f at f = 0.
    const double delta = model.psi - (k + 0.5) * step;
    double term;
    if (1.0 - d < 1e-14) {
      // limit of (sin^2)/(1 + cos) as D -> 1, exact identity
      term = 1.0 - std::cos(delta);
    } else {
      const double ds = d * std::sin(delta);
      term = ds * ds / (1.0 + d * std::cos(delta));
    }
    acc += term;
  }
  return acc / resolution;
}

std::pair<double, double> povm_vs_qfi_gap(const ClockConfig& cfg) {
  const Visibility vis = dirichlet_visibility(cfg.a_alpha_half(),
                                              cfg.n_layer());
  const double d2 = vis.value * vis.value;
  const double s = qfi_multilayer(cfg);
  // i_m = s/(1 + sqrt(1 - D^2)) = A^2 (1 - sqrt(1 - D^2)); the first form
  // cannot exceed s under rounding since the divisor is >= 1.
  const double i_m = s / (1.0 + std::sqrt(std::fmax(0.0, 1.0 - d2)));
  if (i_m > s + 1e-9) {
    throw std::logic_error("povm_vs_qfi_gap: information inequality violated");
  }
  return {i_m, s};
}

// ----------------------------------------------------------- trials ----

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return seed ^ splitmix64(trial);
}

RunSummary summarize_estimates(const std::vector<double>& estimates,
                               double psi_true) {
  if (estimates.empty()) {
    throw EmptySampleError("summarize_estimates: empty estimate list");
  }
  double sc = 0.0;
  double ss = 0.0;
  double mse = 0.0;
  for (double e : estimates) {
    sc += std::cos(e);
    ss += std::sin(e);
    const double dev = wrap_angle_signed(e - psi_true);
    mse += dev * dev;
  }
  const double n = static_cast<double>(estimates.size());
  RunSummary out;
  out.circular_mean = wrap_to_2pi(std::atan2(ss, sc));
  out.circular_variance = 1.0 - std::sqrt(sc * sc + ss * ss) / n;
  out.mean_sq_error = mse / n;
  return out;
}

EstimationRun run_estimation(const OutcomeModel& model, std::size_t n_samples,
                             std::size_t n_trials, std::uint64_t seed) {
  if (n_samples < 1 || n_trials < 1) {
    throw std::invalid_argument(
        "run_estimation: n_samples and n_trials must be >= 1");
  }
  EstimationRun run;
  run.seed = seed;
  run.n_samples = n_samples;
  run.n_trials = n_trials;
  run.psi_true = model.psi;
  run.estimates.resize(n_trials);
  for (std::size_t t = 0; t < n_trials; ++t) {
    const std::vector<double> draws =
        sample(model, n_samples, trial_seed(seed, t));
    run.estimates[t] = mle_estimate(draws, model.visibility);
  }
  run.summary = summarize_estimates(run.estimates, model.psi);
  return run;
}

double wrap_angle_signed(double a) {
  double r = std::fmod(a, TWO_PI);
  if (r > PI) r -= TWO_PI;
  if (r <= -PI) r += TWO_PI;
  return r;
}

}  // namespace latclock
