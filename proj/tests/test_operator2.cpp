#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "latclock/errors.hpp"
#include "latclock/operator2.hpp"
#include "latclock/tolerances.hpp"

using namespace latclock;

namespace {

// Deterministic random Hermitian matrix with entries O(1).
Operator2 random_hermitian(std::mt19937_64& eng) {
  auto u = [&](double lo, double hi) {
    const double t = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * t;
  };
  const double a = u(-2.0, 2.0);
  const double d = u(-2.0, 2.0);
  const Complex b(u(-2.0, 2.0), u(-2.0, 2.0));
  return {a, b, std::conj(b), d};
}

Operator2 random_matrix(std::mt19937_64& eng) {
  auto u = [&](double lo, double hi) {
    const double t = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * t;
  };
  return {Complex(u(-2, 2), u(-2, 2)), Complex(u(-2, 2), u(-2, 2)),
          Complex(u(-2, 2), u(-2, 2)), Complex(u(-2, 2), u(-2, 2))};
}

}  // namespace

// ---------------------------------------------------------------------------
// basic algebra
// ---------------------------------------------------------------------------

TEST_CASE("constructors reject non-finite entries") {
  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Operator2(inf, 0.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Operator2(0.0, Complex(0.0, nan), 0.0, 0.0),
                  std::invalid_argument);
  CHECK_NOTHROW(Operator2(1.0, 2.0, 3.0, 4.0));
}

TEST_CASE("identity, sigma_z, ket_bra, outer agree on matrix entries") {
  const Operator2 id = Operator2::identity();
  CHECK(id(0, 0) == Complex(1.0));
  CHECK(id(0, 1) == Complex(0.0));
  CHECK(id(1, 1) == Complex(1.0));

  const Operator2 sz = Operator2::sigma_z();
  CHECK(sz(0, 0) == Complex(1.0));
  CHECK(sz(1, 1) == Complex(-1.0));

  // sigma_z = |0><0| - |1><1|
  const Operator2 rebuilt =
      Operator2::ket_bra(0, 0) - Operator2::ket_bra(1, 1);
  CHECK(frobenius_distance(sz, rebuilt) == 0.0);

  const Vec2 u{Complex(1.0), Complex(0.0)};
  const Vec2 v{Complex(0.0), Complex(1.0)};
  CHECK(frobenius_distance(Operator2::outer(u, v),
                           Operator2::ket_bra(0, 1)) == 0.0);

  CHECK_THROWS_AS(Operator2::ket_bra(2, 0), std::out_of_range);
  CHECK_THROWS_AS(id(0, 2), std::out_of_range);
}

TEST_CASE("adjoint conjugate-transposes") {
  const Operator2 m(Complex(1.0, 2.0), Complex(3.0, 4.0), Complex(5.0, 6.0),
                    Complex(7.0, 8.0));
  const Operator2 a = m.adjoint();
  CHECK(a(0, 0) == Complex(1.0, -2.0));
  CHECK(a(0, 1) == Complex(5.0, -6.0));
  CHECK(a(1, 0) == Complex(3.0, -4.0));
  CHECK(a(1, 1) == Complex(7.0, -8.0));
}

TEST_CASE("trace is cyclic: tr(AB) = tr(BA) on 100 random pairs") {
  std::mt19937_64 eng(101);
  for (int i = 0; i < 100; ++i) {
    const Operator2 a = random_matrix(eng);
    const Operator2 b = random_matrix(eng);
    const Complex d = (a * b).trace() - (b * a).trace();
    CHECK(std::abs(d) < 1e-12);
  }
}

TEST_CASE("is_hermitian checks the adjoint relation entrywise") {
  CHECK(Operator2::sigma_z().is_hermitian());
  const Operator2 h(1.0, Complex(0.5, -0.25), Complex(0.5, 0.25), -2.0);
  CHECK(h.is_hermitian());
  const Operator2 nh(1.0, Complex(0.5, -0.25), Complex(0.5, -0.25), -2.0);
  CHECK(!nh.is_hermitian());
  const Operator2 imag_diag(Complex(1.0, 1e-6), 0.0, 0.0, 1.0);
  CHECK(!imag_diag.is_hermitian());
  CHECK(imag_diag.is_hermitian(1e-3));
}

// ---------------------------------------------------------------------------
// eigendecomposition
// ---------------------------------------------------------------------------

TEST_CASE("eig of sigma_z gives (1, -1) with the canonical basis") {
  const SpectralDecomposition es = eig_hermitian(Operator2::sigma_z());
  CHECK(es.eigenvalues[0] == 1.0);
  CHECK(es.eigenvalues[1] == -1.0);
  CHECK(es.eigenvectors[0][0] == Complex(1.0));
  CHECK(es.eigenvectors[0][1] == Complex(0.0));
  CHECK(es.eigenvectors[1][0] == Complex(0.0));
  CHECK(es.eigenvectors[1][1] == Complex(1.0));
}

TEST_CASE("eig of the maximally mixed state returns the canonical basis") {
  const Operator2 half = Complex(0.5) * Operator2::identity();
  const SpectralDecomposition es = eig_hermitian(half);
  CHECK(es.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(es.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(es.eigenvectors[0][0] == Complex(1.0));
  CHECK(es.eigenvectors[1][1] == Complex(1.0));
}

TEST_CASE("eig of a visibility-0.6472 state gives (0.8236, 0.1764)") {
  const double d = 0.6472;
  const double psi = 0.9;
  const Complex off = 0.5 * d * std::exp(Complex(0.0, -psi));
  const Operator2 rho(0.5, off, std::conj(off), 0.5);
  const SpectralDecomposition es = eig_hermitian(rho);
  CHECK(es.eigenvalues[0] == doctest::Approx(0.8236).epsilon(1e-12));
  CHECK(es.eigenvalues[1] == doctest::Approx(0.1764).epsilon(1e-12));
}

TEST_CASE("eig round trip: reconstruction and orthonormality, 1000 cases") {
  std::mt19937_64 eng(202);
  for (int i = 0; i < 1000; ++i) {
    const Operator2 m = random_hermitian(eng);
    const SpectralDecomposition es = eig_hermitian(m);
    CHECK(es.eigenvalues[0] >= es.eigenvalues[1]);
    CHECK(frobenius_distance(es.reconstruct(), m) < RECON_TOL);

    const Vec2& v0 = es.eigenvectors[0];
    const Vec2& v1 = es.eigenvectors[1];
    const double n0 = std::norm(v0[0]) + std::norm(v0[1]);
    const double n1 = std::norm(v1[0]) + std::norm(v1[1]);
    const Complex ip = std::conj(v0[0]) * v1[0] + std::conj(v0[1]) * v1[1];
    CHECK(std::fabs(n0 - 1.0) < 1e-12);
    CHECK(std::fabs(n1 - 1.0) < 1e-12);
    CHECK(std::abs(ip) < 1e-12);
  }
}

TEST_CASE("eig rejects a non-Hermitian input") {
  const Operator2 nh(1.0, Complex(0.3, 0.1), Complex(0.3, 0.1), 2.0);
  CHECK_THROWS_AS(eig_hermitian(nh), NotHermitianError);
}

// ---------------------------------------------------------------------------
// density validation
// ---------------------------------------------------------------------------

TEST_CASE("validate_density accepts states and names the broken invariant") {
  CHECK_NOTHROW(validate_density(Complex(0.5) * Operator2::identity()));
  const Complex off = 0.5 * std::exp(Complex(0.0, -1.2));
  CHECK_NOTHROW(validate_density({0.5, off, std::conj(off), 0.5}));

  // trace 1.5
  CHECK_THROWS_WITH_AS(validate_density(Operator2(1.0, 0.0, 0.0, 0.5)),
                       doctest::Contains("trace"), InvalidDensityError);
  // hermiticity broken
  CHECK_THROWS_WITH_AS(
      validate_density(Operator2(0.5, Complex(0.2, 0.1), Complex(0.2, 0.1),
                                 0.5)),
      doctest::Contains("Hermitian"), InvalidDensityError);
  // off-diagonal too large, one eigenvalue negative
  CHECK_THROWS_WITH_AS(validate_density(Operator2(0.5, 0.7, 0.7, 0.5)),
                       doctest::Contains("eigenvalue"), InvalidDensityError);
}

TEST_CASE("purity is 1 for pure states and 1/2 at the mixed center") {
  const Complex off = 0.5 * std::exp(Complex(0.0, 0.4));
  const DensityOperator pure = validate_density({0.5, off, std::conj(off),
                                                 0.5});
  CHECK(pure.purity() == doctest::Approx(1.0).epsilon(1e-14));
  const DensityOperator mixed =
      validate_density(Complex(0.5) * Operator2::identity());
  CHECK(mixed.purity() == doctest::Approx(0.5).epsilon(1e-14));
}
