#pragma once

namespace latclock {

// CODATA 2018 values by default, all overridable (dimensionless test setups
// use hbar = c = 1). c^2 is computed once at construction so every consumer
// divides by the same number.
class PhysicalConstants {
 public:
  PhysicalConstants();  // CODATA 2018 + standard gravity
  PhysicalConstants(double hbar, double c, double g_default, double planck_h);

  double hbar() const { return hbar_; }
  double c() const { return c_; }
  double c2() const { return c2_; }
  double g_default() const { return g_default_; }
  double planck_h() const { return planck_h_; }

 private:
  double hbar_;
  double c_;
  double c2_;
  double g_default_;
  double planck_h_;
};

}  // namespace latclock
