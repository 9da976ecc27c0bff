#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "latclock/clock_model.hpp"
#include "latclock/constants.hpp"

namespace latclock {

// One point of a bound-vs-phase curve. x is the accumulated phase
// delta_e*tau/hbar, y the variance bound scaled by n_site.
struct CurvePoint {
  double x;
  double y;
  bool diverged;
};

// Single-layer curve y = 1/x^2 on the uniform grid x_i = a_max*i/n_points,
// i = 1..n_points (x = 0 excluded).
std::vector<CurvePoint> emit_fig2(double a_max, int n_points);

// Multilayer curve y = (1/x^2) (n sin(x a/2) / sin(x a n/2))^2 on the same
// grid. Rows where the visibility vanishes (or y overflows) carry y = inf
// and the diverged flag. n_layer = 1 reproduces emit_fig2 bit for bit.
std::vector<CurvePoint> emit_fig4(int n_layer, double alpha, double a_max,
                                  int n_points);

// 12 significant digits, '.' separator, "inf"/"-inf" for infinities.
std::string format_number(double v);

// CSV with header "x,y,diverged"; diverged serialized as 0/1; '\n' endings.
void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& points);

// Minimal self-contained line plot (log10 y against x); diverged rows are
// drawn as vertical marker lines. Deterministic output.
void write_curve_svg(std::ostream& os, const std::vector<CurvePoint>& points,
                     const std::string& title);

// Flat "key = value" file; '#' starts a comment, blank lines ignored.
// Duplicate keys are an error.
std::map<std::string, std::string> read_kv_file(const std::string& path);

// Constants overrides: keys hbar, c, g, planck_h (all optional). Unknown
// keys among the constants names are left for the caller to reject.
PhysicalConstants constants_from_kv(
    const std::map<std::string, std::string>& kv,
    const PhysicalConstants& base = {});

// Full interrogation config from a kv file. Required: one of delta_e_joule
// or clock_wavelength_nm, tau_s, one of h_spacing_m or magic_wavelength_nm,
// and ell. Optional: theta0 or psi_reduced (default theta0 = 1), g (default
// from constants), n_site (default 1). Unknown keys are rejected.
ClockConfig clock_config_from_kv_file(const std::string& path,
                                      const PhysicalConstants& constants = {});

}  // namespace latclock
