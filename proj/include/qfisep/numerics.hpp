#pragma once

// Dense complex/real matrix substrate. Every tolerance used by the library
// lives here; code above this layer only compares against these constants.

#include <complex>

#include <Eigen/Dense>

namespace qfisep {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kHermitian = 1e-10;     // element-wise |M - M^dagger|
inline constexpr double kTrace = 1e-10;         // |Tr rho - 1|
inline constexpr double kNegativeEig = 1e-10;   // eigenvalues in [-kNegativeEig, 0) clamp to 0
inline constexpr double kKernel = 1e-12;        // lambda_k + lambda_l at or below: pair skipped
inline constexpr double kOrthogonal = 1e-9;     // |O^T O - 1|
inline constexpr double kConstruction = 1e-9;   // built-in LOO / SIC certification
inline constexpr double kSicCertify = 1e-8;     // file-loaded fiducials
inline constexpr double kViolation = 1e-9;      // margin above the separability bound
}  // namespace tol

/// Eigen-decomposition of a Hermitian matrix: eigenvalues ascending,
/// eigenvectors stored as the matching orthonormal columns.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  Eigen::Index size() const { return eigenvalues.size(); }
  ComplexMatrix reconstruct() const;
};

struct SvdFactors {
  RealMatrix u;
  RealVector sigma;  // descending
  RealMatrix v;
};

/// Largest element-wise |m - m^dagger|. Throws DimensionMismatch for
/// non-square input.
double hermiticity_defect(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::kHermitian);

/// Throws NonHermitianInput if the check fails, ConvergenceFailure if the
/// solver does not converge.
SpectralDecomposition hermitian_eig(const ComplexMatrix& m);

/// Singular values, non-negative and descending.
RealVector singular_values(const RealMatrix& m);

/// Sum of the singular values.
double trace_norm(const RealMatrix& m);

/// m = U diag(sigma) V^T for square m, with U and V orthogonal.
SvdFactors svd_factors(const RealMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest element-wise deviation of m^T m from the identity.
double orthogonality_defect(const RealMatrix& m);

}  // namespace qfisep
