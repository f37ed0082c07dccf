#include "qfisep/observable_set.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qfisep/errors.hpp"

namespace qfisep {

namespace {

CertificationCheck make_check(std::string name, double deviation, double tolerance) {
  return {std::move(name), deviation <= tolerance, deviation, tolerance};
}

// Fails fast on structural problems that make the numeric checks meaningless.
bool add_structure_checks(CertificationReport& report,
                          const std::vector<Observable>& members, int dim) {
  const auto expected = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
  const bool count_ok = members.size() == expected;
  report.checks.push_back({"element count = d^2", count_ok,
                           std::abs(static_cast<double>(members.size()) -
                                    static_cast<double>(expected)),
                           0.0});
  const bool dims_ok = std::all_of(members.begin(), members.end(),
                                   [dim](const Observable& o) { return o.dim() == dim; });
  report.checks.push_back({"member dimension = d", dims_ok, dims_ok ? 0.0 : 1.0, 0.0});
  return count_ok && dims_ok;
}

// Tr[A B] for Hermitian A, B is real.
double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a * b).trace().real();
}

}  // namespace

Observable::Observable(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  const double defect = hermiticity_defect(matrix_);
  if (defect > tol::kHermitian) {
    throw NonHermitianInput("observable deviates from Hermitian by " +
                            std::to_string(defect));
  }
}

std::string_view to_string(ObservableKind kind) {
  switch (kind) {
    case ObservableKind::Loo: return "LOO";
    case ObservableKind::Sic: return "SIC";
    case ObservableKind::Generic: return "GENERIC";
  }
  return "?";
}

bool CertificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CertificationCheck& c) { return c.passed; });
}

CertificationReport certify_loo(const std::vector<Observable>& members, int dim,
                                double tolerance) {
  CertificationReport report;
  if (!add_structure_checks(report, members, dim)) return report;

  const auto m = members.size();
  double ortho = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double target = i == j ? 1.0 : 0.0;
      ortho = std::max(ortho, std::abs(hs_inner(members[i].matrix(), members[j].matrix()) - target));
    }
  }
  report.checks.push_back(make_check("orthonormality Tr[G_mu G_nu] = delta", ortho, tolerance));

  // Frame operator sum_mu |G_mu>><<G_mu| on vectorized matrices; identity
  // exactly when the members span all d x d matrices.
  const auto n = static_cast<Eigen::Index>(dim) * dim;
  ComplexMatrix frame = ComplexMatrix::Zero(n, n);
  for (const auto& g : members) {
    const ComplexVector v = g.matrix().reshaped();
    frame += v * v.adjoint();
  }
  const double completeness = (frame - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  report.checks.push_back(make_check("completeness sum_mu |G_mu>><<G_mu| = 1", completeness, tolerance));
  return report;
}

CertificationReport certify_sic(const std::vector<Observable>& members, int dim,
                                double tolerance) {
  CertificationReport report;
  if (!add_structure_checks(report, members, dim)) return report;

  const double d = dim;
  double min_eig = 0.0;
  double trace_dev = 0.0;
  ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
  for (const auto& e : members) {
    min_eig = std::min(min_eig, hermitian_eig(e.matrix()).eigenvalues.minCoeff());
    trace_dev = std::max(trace_dev, std::abs(e.matrix().trace().real() - 1.0 / d));
    total += e.matrix();
  }
  report.checks.push_back(make_check("positivity E_mu >= 0", std::max(0.0, -min_eig), tolerance));
  report.checks.push_back(make_check("trace Tr[E_mu] = 1/d", trace_dev, tolerance));
  const double identity_dev = (total - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  report.checks.push_back(make_check("resolution of identity sum_mu E_mu = 1", identity_dev, tolerance));

  double overlap = 0.0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      const double target = (d * (i == j ? 1.0 : 0.0) + 1.0) / (d + 1.0);
      const double value = d * d * hs_inner(members[i].matrix(), members[j].matrix());
      overlap = std::max(overlap, std::abs(value - target));
    }
  }
  report.checks.push_back(
      make_check("overlap |<psi_mu|psi_nu>|^2 = (d delta + 1)/(d + 1)", overlap, tolerance));
  return report;
}

ObservableSet::ObservableSet(int dim, std::vector<Observable> members,
                             ObservableKind kind, std::optional<double> bound)
    : dim_(dim), members_(std::move(members)), kind_(kind), bound_(bound) {}

ObservableSet ObservableSet::loo(int dim, std::vector<Observable> members,
                                 double tolerance) {
  const auto report = certify_loo(members, dim, tolerance);
  if (!report.passed()) {
    for (const auto& c : report.checks) {
      if (!c.passed) throw NotLOO(c.name + " failed (deviation " + std::to_string(c.deviation) + ")");
    }
  }
  return ObservableSet(dim, std::move(members), ObservableKind::Loo, dim - 1.0);
}

ObservableSet ObservableSet::sic(int dim, std::vector<Observable> members,
                                 double tolerance) {
  const auto report = certify_sic(members, dim, tolerance);
  if (!report.passed()) {
    for (const auto& c : report.checks) {
      if (!c.passed) throw NotSIC(c.name + " failed (deviation " + std::to_string(c.deviation) + ")");
    }
  }
  const double d = dim;
  return ObservableSet(dim, std::move(members), ObservableKind::Sic,
                       (d - 1.0) / (d * (d + 1.0)));
}

ObservableSet ObservableSet::generic(int dim, std::vector<Observable> members,
                                     std::optional<double> bound) {
  for (const auto& o : members) {
    if (o.dim() != dim) {
      throw DimensionMismatch("member of dimension " + std::to_string(o.dim()) +
                              " in a set of dimension " + std::to_string(dim));
    }
  }
  return ObservableSet(dim, std::move(members), ObservableKind::Generic, bound);
}

OrthogonalRotation::OrthogonalRotation(RealMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw NotOrthogonal("rotation must be square");
  }
  const double defect = orthogonality_defect(matrix_);
  if (defect > tol::kOrthogonal) {
    throw NotOrthogonal("|O^T O - 1| = " + std::to_string(defect));
  }
}

OrthogonalRotation OrthogonalRotation::identity(int size) {
  return OrthogonalRotation(RealMatrix::Identity(size, size));
}

}  // namespace qfisep
