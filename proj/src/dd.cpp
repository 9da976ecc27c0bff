#include "latclock/dd.hpp"

#include <cmath>

namespace latclock::dd {

namespace {

// 2*pi to double-double precision.
constexpr DD TWO_PI{6.283185307179586, 2.4492935982947064e-16};

DD quick_two_sum(double a, double b) {
  // requires |a| >= |b|
  const double s = a + b;
  return {s, b - (s - a)};
}

}  // namespace

DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DD add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  DD t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

DD mul(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

DD div(DD a, double b) {
  const double q1 = a.hi / b;
  DD p = two_prod(q1, b);
  const DD r = add(a, {-p.hi, -p.lo});
  const double q2 = r.hi / b;
  return quick_two_sum(q1, q2);
}

double reduce_mod_2pi(DD x) {
  // Subtract the nearest multiple of 2*pi repeatedly. Each pass shrinks the
  // residual by ~2^53, so even |x| ~ 1e21 converges in two passes.
  for (int pass = 0; pass < 4 && std::fabs(x.hi) >= TWO_PI.hi; ++pass) {
    const double n = std::floor(x.hi / TWO_PI.hi);
    x = add(x, mul(TWO_PI, -n));
  }
  double r = x.hi + x.lo;
  if (r < 0.0) r += TWO_PI.hi;
  if (r >= TWO_PI.hi) r -= TWO_PI.hi;
  if (r < 0.0) r = 0.0;
  return r;
}

double reduce_phase(double delta_e, double tau, double hbar, double theta0) {
  // (delta_e * tau / hbar) * theta0 carried in double-double so the reduced
  // residue keeps ~16 digits even when the raw product is ~1e21.
  DD acc = two_prod(delta_e, tau);
  acc = div(acc, hbar);
  acc = mul(acc, theta0);
  return reduce_mod_2pi(acc);
}

}  // namespace latclock::dd
