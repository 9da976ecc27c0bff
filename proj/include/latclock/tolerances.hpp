#pragma once

// Every numerical cutoff used by the library, in one place. Tests reference
// these constants instead of restating magic numbers.

namespace latclock {

// Entrywise |M - adjoint(M)| for a matrix to count as Hermitian.
inline constexpr double HERMITICITY_TOL = 1e-12;

// Frobenius error allowed for the eigendecomposition round trip.
inline constexpr double RECON_TOL = 1e-10;

// eig_hermitian accepts slightly rougher input than the strict check above.
inline constexpr double EIG_PRECHECK_TOL = 1e-10;

// Eigenvalue gap below which eig_hermitian returns the canonical basis.
inline constexpr double DEGENERACY_TOL = 1e-12;

// Density operators: |tr - 1| bound and how negative an eigenvalue may be.
inline constexpr double TRACE_ONE_TOL = 1e-12;
inline constexpr double PSD_TOL = 1e-12;

// sld_generic pre-checks (drho hermiticity and trace), defining-equation
// residual, and the eigenvalue-sum floor below which elements are zeroed.
inline constexpr double SLD_PRE_TOL = 1e-10;
inline constexpr double SLD_RESIDUAL_TOL = 1e-9;
inline constexpr double SLD_DENOM_FLOOR = 1e-14;

// Visibility may exceed |1| by at most this much (rounding slack).
inline constexpr double VISIBILITY_SLACK = 1e-12;

// Dirichlet kernel: |sin x| below which the cosine-sum form is used, and
// the relative distance to a divergence node that snaps the value to 0.
inline constexpr double DIRICHLET_SIN_SWITCH = 1e-8;
inline constexpr double DIRICHLET_ZERO_SNAP = 1e-9;

}  // namespace latclock
