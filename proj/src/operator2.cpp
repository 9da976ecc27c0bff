#include "latclock/operator2.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "latclock/errors.hpp"

namespace latclock {

namespace {

bool finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

// ---------------------------------------------------------- Operator2 ----

Operator2::Operator2() : m_{Complex{}, Complex{}, Complex{}, Complex{}} {}

Operator2::Operator2(Complex m00, Complex m01, Complex m10, Complex m11)
    : m_{m00, m01, m10, m11} {
  for (const Complex& z : m_) {
    if (!finite(z)) {
      throw std::invalid_argument("Operator2: non-finite entry");
    }
  }
}

Operator2 Operator2::identity() { return {1.0, 0.0, 0.0, 1.0}; }

Operator2 Operator2::sigma_z() { return {1.0, 0.0, 0.0, -1.0}; }

Operator2 Operator2::ket_bra(int i, int j) {
  if (i < 0 || i > 1 || j < 0 || j > 1) {
    throw std::out_of_range("Operator2::ket_bra: index outside {0, 1}");
  }
  Operator2 r;
  r.m_[static_cast<std::size_t>(2 * i + j)] = 1.0;
  return r;
}

Operator2 Operator2::outer(const Vec2& u, const Vec2& v) {
  return {u[0] * std::conj(v[0]), u[0] * std::conj(v[1]),
          u[1] * std::conj(v[0]), u[1] * std::conj(v[1])};
}

Complex Operator2::operator()(int row, int col) const {
  if (row < 0 || row > 1 || col < 0 || col > 1) {
    throw std::out_of_range("Operator2: index outside {0, 1}");
  }
  return m_[static_cast<std::size_t>(2 * row + col)];
}

Operator2 Operator2::adjoint() const {
  return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]),
          std::conj(m_[3])};
}

Complex Operator2::trace() const { return m_[0] + m_[3]; }

double Operator2::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : m_) s += std::norm(z);
  return std::sqrt(s);
}

bool Operator2::is_hermitian(double tol) const {
  return std::abs(m_[0].imag()) <= tol && std::abs(m_[3].imag()) <= tol &&
         std::abs(m_[1] - std::conj(m_[2])) <= tol;
}

Operator2 operator+(const Operator2& a, const Operator2& b) {
  return {a.m_[0] + b.m_[0], a.m_[1] + b.m_[1], a.m_[2] + b.m_[2],
          a.m_[3] + b.m_[3]};
}

Operator2 operator-(const Operator2& a, const Operator2& b) {
  return {a.m_[0] - b.m_[0], a.m_[1] - b.m_[1], a.m_[2] - b.m_[2],
          a.m_[3] - b.m_[3]};
}

Operator2 operator*(const Operator2& a, const Operator2& b) {
  return {a.m_[0] * b.m_[0] + a.m_[1] * b.m_[2],
          a.m_[0] * b.m_[1] + a.m_[1] * b.m_[3],
          a.m_[2] * b.m_[0] + a.m_[3] * b.m_[2],
          a.m_[2] * b.m_[1] + a.m_[3] * b.m_[3]};
}

Operator2 operator*(Complex s, const Operator2& a) {
  return {s * a.m_[0], s * a.m_[1], s * a.m_[2], s * a.m_[3]};
}

double frobenius_distance(const Operator2& a, const Operator2& b) {
  return (a - b).frobenius_norm();
}

// -------------------------------------------------------- eigensystem ----

Operator2 SpectralDecomposition::reconstruct() const {
  const Operator2 p0 = Operator2::outer(eigenvectors[0], eigenvectors[0]);
  const Operator2 p1 = Operator2::outer(eigenvectors[1], eigenvectors[1]);
  return Complex(eigenvalues[0]) * p0 + Complex(eigenvalues[1]) * p1;
}

namespace {

// Fix the overall phase: largest-magnitude component made real and >= 0.
// Keeps eigenvectors reproducible across runs.
Vec2 canonical_phase(Vec2 v) {
  const std::size_t k = std::norm(v[0]) >= std::norm(v[1]) ? 0 : 1;
  const double mag = std::abs(v[k]);
  if (mag > 0.0) {
    const Complex rot = std::conj(v[k]) / mag;
    v[0] *= rot;
    v[1] *= rot;
  }
  return v;
}

}  // namespace

SpectralDecomposition eig_hermitian(const Operator2& m) {
  if (!m.is_hermitian(EIG_PRECHECK_TOL)) {
    throw NotHermitianError("eig_hermitian: matrix is not Hermitian");
  }
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  // Hermitize the off-diagonal so rounding in the input cannot skew the pair.
  const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));

  const double mean = 0.5 * (a + d);
  const double half_gap = std::hypot(0.5 * (a - d), std::abs(b));
  const double p0 = mean + half_gap;
  const double p1 = mean - half_gap;

  SpectralDecomposition out;
  out.eigenvalues = {p0, p1};

  if (2.0 * half_gap < DEGENERACY_TOL) {
    out.eigenvectors = {Vec2{Complex(1.0), Complex(0.0)},
                        Vec2{Complex(0.0), Complex(1.0)}};
    return out;
  }

  // Two algebraic forms for the p0 eigenvector; take the better conditioned.
  Vec2 v0;
  if (std::abs(p0 - d) >= std::abs(p0 - a)) {
    v0 = {Complex(p0 - d), std::conj(b)};
  } else {
    v0 = {b, Complex(p0 - a)};
  }
  const double nrm = std::sqrt(std::norm(v0[0]) + std::norm(v0[1]));
  v0[0] /= nrm;
  v0[1] /= nrm;
  v0 = canonical_phase(v0);
  // Orthogonal complement, exactly unit and orthogonal by construction.
  Vec2 v1 = canonical_phase({-std::conj(v0[1]), std::conj(v0[0])});
  out.eigenvectors = {v0, v1};
  return out;
}

// ---------------------------------------------------- density operator ----

DensityOperator::DensityOperator(const Operator2& op) : op_(op) {
  if (!op.is_hermitian(HERMITICITY_TOL)) {
    throw InvalidDensityError("validate_density: not Hermitian");
  }
  const Complex tr = op.trace();
  if (std::abs(tr - Complex(1.0)) > TRACE_ONE_TOL) {
    throw InvalidDensityError("validate_density: trace is not 1");
  }
  const SpectralDecomposition es = eig_hermitian(op);
  if (es.eigenvalues[1] < -PSD_TOL) {
    throw InvalidDensityError(
        "validate_density: negative eigenvalue " +
        std::to_string(es.eigenvalues[1]));
  }
}

double DensityOperator::purity() const {
  return (op_ * op_).trace().real();
}

DensityOperator validate_density(const Operator2& op) {
  return DensityOperator(op);
}

}  // namespace latclock
