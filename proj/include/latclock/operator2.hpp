#pragma once

#include <array>
#include <complex>

#include "latclock/tolerances.hpp"

namespace latclock {

using Complex = std::complex<double>;
using Vec2 = std::array<Complex, 2>;

// Dense 2x2 complex matrix, row major, basis {|0>, |1>}. Constructors
// reject non-finite entries so NaN and Inf cannot enter the algebra
// silently. Immutable value type.
class Operator2 {
 public:
  Operator2();  // zero matrix
  Operator2(Complex m00, Complex m01, Complex m10, Complex m11);

  static Operator2 identity();
  static Operator2 sigma_z();  // |0><0| - |1><1|
  static Operator2 ket_bra(int i, int j);  // |i><j|
  static Operator2 outer(const Vec2& u, const Vec2& v);  // |u><v|

  Complex operator()(int row, int col) const;

  Operator2 adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool is_hermitian(double tol = HERMITICITY_TOL) const;

  friend Operator2 operator+(const Operator2& a, const Operator2& b);
  friend Operator2 operator-(const Operator2& a, const Operator2& b);
  friend Operator2 operator*(const Operator2& a, const Operator2& b);
  friend Operator2 operator*(Complex s, const Operator2& a);

 private:
  std::array<Complex, 4> m_;
};

double frobenius_distance(const Operator2& a, const Operator2& b);

// Result of eig_hermitian. Eigenvalues sorted descending; eigenvectors are
// orthonormal by construction and reconstruct the input within RECON_TOL.
struct SpectralDecomposition {
  std::array<double, 2> eigenvalues;
  std::array<Vec2, 2> eigenvectors;

  Operator2 reconstruct() const;  // sum_j p_j |v_j><v_j|
};

// Closed-form 2x2 Hermitian eigendecomposition (trace/determinant form, no
// iteration). Input must be Hermitian within EIG_PRECHECK_TOL. A gap below
// DEGENERACY_TOL deterministically yields the canonical basis {|0>, |1>}.
// Throws NotHermitianError.
SpectralDecomposition eig_hermitian(const Operator2& m);

// A validated state: Hermitian within HERMITICITY_TOL, unit trace within
// TRACE_ONE_TOL, eigenvalues >= -PSD_TOL. Construction is the validation.
class DensityOperator {
 public:
  explicit DensityOperator(const Operator2& op);  // throws InvalidDensityError

  const Operator2& matrix() const { return op_; }
  double purity() const;  // tr(rho^2), real by hermiticity

 private:
  Operator2 op_;
};

// Same check as the DensityOperator constructor, as a named operation.
// The exception message names the violated invariant.
DensityOperator validate_density(const Operator2& op);

}  // namespace latclock
