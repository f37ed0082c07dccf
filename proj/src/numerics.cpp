#include "qfisep/numerics.hpp"

#include <string>

#include "qfisep/errors.hpp"

namespace qfisep {

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
         eigenvectors.adjoint();
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("expected a square matrix, got " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tolerance;
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& m) {
  const double defect = hermiticity_defect(m);
  if (defect > tol::kHermitian) {
    throw NonHermitianInput("max |M - M^dagger| = " + std::to_string(defect));
  }
  // Symmetrize so rounding noise in the lower triangle does not leak into
  // the solver, which only reads one triangle.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("Hermitian eigen-solver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector singular_values(const RealMatrix& m) {
  if (m.size() == 0) return RealVector(0);
  Eigen::JacobiSVD<RealMatrix> svd(m);
  if (svd.info() != Eigen::Success) {
    throw ConvergenceFailure("SVD did not converge");
  }
  return svd.singularValues();
}

double trace_norm(const RealMatrix& m) { return singular_values(m).sum(); }

SvdFactors svd_factors(const RealMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("svd_factors expects a square matrix");
  }
  Eigen::JacobiSVD<RealMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) {
    throw ConvergenceFailure("SVD did not converge");
  }
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double orthogonality_defect(const RealMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("orthogonality check expects a square matrix");
  }
  if (m.size() == 0) return 0.0;
  return (m.transpose() * m - RealMatrix::Identity(m.rows(), m.cols()))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace qfisep
