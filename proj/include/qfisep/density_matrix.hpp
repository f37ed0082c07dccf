#pragma once

#include "qfisep/numerics.hpp"

namespace qfisep {

/// Validated quantum state. The spectral decomposition is computed once at
/// construction; instances are immutable and safe to share across threads.
///
/// Eigenvalues in [-tol::kNegativeEig, 0) are clamped to zero without
/// renormalizing the spectrum.
class DensityMatrix {
 public:
  /// Throws NonHermitianInput, InvalidState (trace or positivity violated).
  explicit DensityMatrix(ComplexMatrix matrix);

  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }
  const RealVector& eigenvalues() const noexcept { return spectrum_.eigenvalues; }

  /// Tr[rho X].
  Complex expectation(const ComplexMatrix& x) const;
  double purity() const;

  /// Tensor product rho (x) other.
  DensityMatrix tensor(const DensityMatrix& other) const;

 private:
  ComplexMatrix matrix_;
  SpectralDecomposition spectrum_;
};

}  // namespace qfisep
