#include "qfisep/density_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qfisep/errors.hpp"

namespace qfisep {

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0) throw InvalidState("empty density matrix");
  spectrum_ = hermitian_eig(matrix_);

  const double trace = matrix_.trace().real();
  if (std::abs(trace - 1.0) > tol::kTrace) {
    throw InvalidState("trace is " + std::to_string(trace) + ", expected 1");
  }
  for (auto& lambda : spectrum_.eigenvalues) {
    if (lambda < -tol::kNegativeEig) {
      throw InvalidState("negative eigenvalue " + std::to_string(lambda));
    }
    if (lambda < 0.0) lambda = 0.0;
  }
}

Complex DensityMatrix::expectation(const ComplexMatrix& x) const {
  if (x.rows() != matrix_.rows() || x.cols() != matrix_.cols()) {
    throw DimensionMismatch("operator dimension does not match state");
  }
  return (matrix_ * x).trace();
}

double DensityMatrix::purity() const {
  return spectrum_.eigenvalues.squaredNorm();
}

DensityMatrix DensityMatrix::tensor(const DensityMatrix& other) const {
  return DensityMatrix(kron(matrix_, other.matrix_));
}

}  // namespace qfisep
