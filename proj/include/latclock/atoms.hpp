#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latclock/constants.hpp"

namespace latclock {

// Catalog entry for a clock species. reference_tau_min is the published
// round-number optimum kept for cross-checks only.
struct AtomSpec {
  std::string name;
  double clock_wavelength_nm;
  double magic_wavelength_nm;
  double reference_tau_min_s;
};

// Sr, Yb, Cd, Hg, Mg.
const std::vector<AtomSpec>& atom_catalog();

// Case-sensitive lookup; the error message lists the known names.
const AtomSpec& find_atom(std::string_view name);

// delta_e = planck_h * c / lambda. Throws NonPositiveWavelengthError.
double wavelength_to_energy(double lambda_nm,
                            const PhysicalConstants& constants = {});

// tau_min = (1/n_layer) * hbar c^2 pi / (delta_e g h). Parity of n_layer is
// irrelevant in this analytic form, so any n_layer >= 1 is accepted (state
// construction elsewhere is what requires odd stacks).
double tau_min_formula(double delta_e, double h_spacing, double n_layer,
                       double g, const PhysicalConstants& constants = {});

// Formula above with delta_e from the clock wavelength and h_spacing from
// the magic wavelength.
double tau_min_for_atom(const AtomSpec& atom, int n_layer, double g,
                        const PhysicalConstants& constants = {});

}  // namespace latclock
