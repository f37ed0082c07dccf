#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfisep/numerics.hpp"

namespace qfisep {

/// Hermitian operator on a d-dimensional space.
class Observable {
 public:
  /// Throws NonHermitianInput.
  explicit Observable(ComplexMatrix matrix);

  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

enum class ObservableKind { Loo, Sic, Generic };

std::string_view to_string(ObservableKind kind);

/// One named check of a certification run.
struct CertificationCheck {
  std::string name;
  bool passed = false;
  double deviation = 0.0;  // largest observed deviation from the target
  double tolerance = 0.0;
};

struct CertificationReport {
  std::vector<CertificationCheck> checks;

  bool passed() const;
};

/// Hilbert-Schmidt orthonormality and completeness (m = d^2).
CertificationReport certify_loo(const std::vector<Observable>& members, int dim,
                                double tolerance = tol::kConstruction);

/// Element count, positivity, trace 1/d, sum to identity and the uniform
/// overlap condition d^2 Tr[E_mu E_nu] = (d delta + 1)/(d + 1).
CertificationReport certify_sic(const std::vector<Observable>& members, int dim,
                                double tolerance = tol::kConstruction);

/// Ordered list of m observables of equal dimension, tagged with its kind and
/// the state-independent bound s = max_rho sum_mu F(rho, A_mu) when known.
class ObservableSet {
 public:
  /// Certifies the members as an LOO; throws NotLOO on failure.
  static ObservableSet loo(int dim, std::vector<Observable> members,
                           double tolerance = tol::kConstruction);
  /// Certifies the members as a SIC-POVM; throws NotSIC on failure.
  static ObservableSet sic(int dim, std::vector<Observable> members,
                           double tolerance = tol::kConstruction);
  static ObservableSet generic(int dim, std::vector<Observable> members,
                               std::optional<double> bound = std::nullopt);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  ObservableKind kind() const noexcept { return kind_; }
  std::optional<double> bound() const noexcept { return bound_; }

  const std::vector<Observable>& members() const noexcept { return members_; }
  const Observable& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  ObservableSet(int dim, std::vector<Observable> members, ObservableKind kind,
                std::optional<double> bound);

  int dim_;
  std::vector<Observable> members_;
  ObservableKind kind_;
  std::optional<double> bound_;
};

/// Real orthogonal m x m matrix acting on observable sets by
/// A'_mu = sum_nu O_{mu nu} A_nu.
class OrthogonalRotation {
 public:
  /// Throws NotOrthogonal if |O^T O - 1| exceeds tol::kOrthogonal.
  explicit OrthogonalRotation(RealMatrix matrix);

  static OrthogonalRotation identity(int size);

  int size() const noexcept { return static_cast<int>(matrix_.rows()); }
  const RealMatrix& matrix() const noexcept { return matrix_; }

 private:
  RealMatrix matrix_;
};

}  // namespace qfisep
