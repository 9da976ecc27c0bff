#include "latclock/atoms.hpp"

#include <cmath>
#include <string>

#include "latclock/errors.hpp"

namespace latclock {

namespace {

constexpr double PI = 3.141592653589793;

}  // namespace

const std::vector<AtomSpec>& atom_catalog() {
  static const std::vector<AtomSpec> catalog = {
      {"Sr", 698.0, 813.0, 1.3e5},
      {"Yb", 578.0, 759.0, 1.2e5},
      {"Cd", 332.0, 420.0, 1.2e5},
      {"Hg", 266.0, 363.0, 1.1e5},
      {"Mg", 458.0, 468.0, 1.5e5},
  };
  return catalog;
}

const AtomSpec& find_atom(std::string_view name) {
  for (const AtomSpec& a : atom_catalog()) {
    if (a.name == name) return a;
  }
  std::string known;
  for (const AtomSpec& a : atom_catalog()) {
    if (!known.empty()) known += ", ";
    known += a.name;
  }
  throw std::invalid_argument("find_atom: unknown atom '" +
                              std::string(name) + "'; known: " + known);
}

double wavelength_to_energy(double lambda_nm,
                            const PhysicalConstants& constants) {
  if (!std::isfinite(lambda_nm) || lambda_nm <= 0.0) {
    throw NonPositiveWavelengthError(
        "wavelength_to_energy: wavelength must be finite and > 0");
  }
  return constants.planck_h() * constants.c() / (lambda_nm * 1e-9);
}

double tau_min_formula(double delta_e, double h_spacing, double n_layer,
                       double g, const PhysicalConstants& constants) {
  if (!(std::isfinite(delta_e) && delta_e > 0.0) ||
      !(std::isfinite(h_spacing) && h_spacing > 0.0) ||
      !(std::isfinite(g) && g > 0.0)) {
    throw NonPositiveInputError(
        "tau_min_formula: delta_e, h_spacing, g must be > 0");
  }
  if (!(std::isfinite(n_layer) && n_layer >= 1.0)) {
    throw NonPositiveInputError("tau_min_formula: n_layer must be >= 1");
  }
  return constants.hbar() * constants.c2() * PI /
         (n_layer * delta_e * g * h_spacing);
}

double tau_min_for_atom(const AtomSpec& atom, int n_layer, double g,
                        const PhysicalConstants& constants) {
  const double delta_e = wavelength_to_energy(atom.clock_wavelength_nm,
                                              constants);
  const double h_spacing = atom.magic_wavelength_nm * 1e-9;
  return tau_min_formula(delta_e, h_spacing, static_cast<double>(n_layer), g,
                         constants);
}

}  // namespace latclock
