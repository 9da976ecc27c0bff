#pragma once

#include <cstdint>

// Minimal double-double arithmetic for phase reduction. A value is carried
// as an unevaluated sum hi + lo with |lo| <= ulp(hi)/2, about 31 decimal
// digits. Accumulated phases reach ~1e21 rad, where a plain double has an
// ulp of ~1e5 rad; the extended format keeps the residue mod 2*pi
// meaningful to ~1e-11 rad.

namespace latclock::dd {

struct DD {
  double hi;
  double lo;
};

DD two_sum(double a, double b);   // exact: hi + lo == a + b
DD two_prod(double a, double b);  // exact via fma

DD add(DD a, DD b);
DD mul(DD a, double b);
DD div(DD a, double b);

// Residue of x mod 2*pi, in [0, 2*pi).
double reduce_mod_2pi(DD x);

// ((delta_e * tau / hbar) * theta0) mod 2*pi, all steps compensated.
double reduce_phase(double delta_e, double tau, double hbar, double theta0);

}  // namespace latclock::dd
