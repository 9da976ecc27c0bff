#include "latclock/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace latclock {

PhysicalConstants::PhysicalConstants()
    : PhysicalConstants(1.054571817e-34, 2.99792458e8, 9.80665,
                        6.62607015e-34) {}

PhysicalConstants::PhysicalConstants(double hbar, double c, double g_default,
                                     double planck_h)
    : hbar_(hbar), c_(c), c2_(c * c), g_default_(g_default),
      planck_h_(planck_h) {
  if (!(std::isfinite(hbar) && hbar > 0.0) ||
      !(std::isfinite(c) && c > 0.0) ||
      !(std::isfinite(g_default) && g_default > 0.0) ||
      !(std::isfinite(planck_h) && planck_h > 0.0)) {
    throw std::invalid_argument(
        "PhysicalConstants: all constants must be finite and positive");
  }
}

}  // namespace latclock
