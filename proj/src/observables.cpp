#include "qfisep/observables.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qfisep/errors.hpp"

namespace qfisep {

namespace {

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

std::vector<Observable> scaled_projectors(const std::vector<ComplexVector>& states, double scale) {
  std::vector<Observable> out;
  out.reserve(states.size());
  for (const auto& s : states) out.emplace_back(scale * projector(s));
  return out;
}

}  // namespace

std::vector<ComplexMatrix> gell_mann_matrices(int d) {
  if (d < 2) throw InvalidDimension("Gell-Mann basis needs d >= 2, got " + std::to_string(d));
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(d * d - 1));
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = m(k, j) = 1.0;
      out.push_back(std::move(m));
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = Complex(0.0, -1.0);
      m(k, j) = Complex(0.0, 1.0);
      out.push_back(std::move(m));
    }
  }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int i = 0; i < l; ++i) m(i, i) = norm;
    m(l, l) = -l * norm;
    out.push_back(std::move(m));
  }
  return out;
}

ObservableSet loo_basis(int d) {
  const auto pis = gell_mann_matrices(d);
  std::vector<Observable> members;
  members.reserve(pis.size() + 1);
  members.emplace_back(ComplexMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  for (const auto& p : pis) members.emplace_back(p / std::numbers::sqrt2);
  return ObservableSet::loo(d, std::move(members));
}

std::vector<ComplexVector> weyl_heisenberg_orbit(const ComplexVector& fiducial) {
  const auto d = static_cast<int>(fiducial.size());
  const double phase = 2.0 * std::numbers::pi / d;
  std::vector<ComplexVector> orbit;
  orbit.reserve(static_cast<std::size_t>(d * d));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      // X^a Z^b |psi>: component j of Z^b psi is omega^{b j} psi_j, then
      // X^a moves it to (j + a) mod d.
      ComplexVector v(d);
      for (int j = 0; j < d; ++j) {
        v((j + a) % d) = std::polar(1.0, phase * ((b * j) % d)) * fiducial(j);
      }
      orbit.push_back(std::move(v));
    }
  }
  return orbit;
}

ObservableSet sic_povm(int d) {
  if (d == 2) {
    // Tetrahedron: Bloch vectors (s1, s2, s3)/sqrt(3) with s1 s2 s3 = +1.
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    sz << 1, 0, 0, -1;
    const int signs[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    const double r = 1.0 / std::sqrt(3.0);
    std::vector<Observable> members;
    for (const auto& s : signs) {
      const ComplexMatrix bloch = r * (s[0] * sx + s[1] * sy + s[2] * sz);
      members.emplace_back((id + bloch) / 4.0);
    }
    return ObservableSet::sic(2, std::move(members));
  }
  if (d == 3) {
    ComplexVector fiducial(3);
    fiducial << 0.0, 1.0, -1.0;
    fiducial /= std::numbers::sqrt2;
    return ObservableSet::sic(3, scaled_projectors(weyl_heisenberg_orbit(fiducial), 1.0 / 3.0));
  }
  throw UnsupportedDimension("no built-in SIC-POVM for d = " + std::to_string(d) +
                             "; supply a fiducial vector");
}

ObservableSet sic_from_fiducial(int d, const ComplexVector& fiducial) {
  if (d < 2) throw InvalidDimension("SIC-POVM needs d >= 2, got " + std::to_string(d));
  if (fiducial.size() != d) {
    throw InvalidVector("fiducial has length " + std::to_string(fiducial.size()) +
                        ", expected " + std::to_string(d));
  }
  const double norm = fiducial.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-9) {
    throw InvalidVector("fiducial norm is " + std::to_string(norm) + ", expected 1");
  }
  auto members = scaled_projectors(weyl_heisenberg_orbit(fiducial), 1.0 / d);
  const auto report = certify_sic(members, d, tol::kSicCertify);
  if (!report.passed()) {
    for (const auto& c : report.checks) {
      if (!c.passed) {
        throw NotAFiducial(c.name + " violated by " + std::to_string(c.deviation));
      }
    }
  }
  return ObservableSet::sic(d, std::move(members), tol::kSicCertify);
}

ObservableSet sic_to_loo(const ObservableSet& sic, SicSign sign) {
  if (sic.kind() != ObservableKind::Sic) {
    throw NotSIC("sic_to_loo expects a certified SIC-POVM, got " +
                 std::string(to_string(sic.kind())));
  }
  const int dim = sic.dim();
  const double d = dim;
  const double scale = std::sqrt(d * (d + 1.0));
  const double pm = sign == SicSign::Minus ? 1.0 : -1.0;
  const double shift = (std::sqrt(d + 1.0) - pm) / std::sqrt(d * d * d);
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
  std::vector<Observable> members;
  members.reserve(sic.size());
  for (const auto& e : sic) members.emplace_back(scale * e.matrix() - shift * id);
  return ObservableSet::loo(dim, std::move(members));
}

ObservableSet rotate(const ObservableSet& obs, const OrthogonalRotation& o) {
  if (static_cast<std::size_t>(o.size()) != obs.size()) {
    throw SizeMismatch("rotation of size " + std::to_string(o.size()) +
                       " applied to a set of " + std::to_string(obs.size()));
  }
  const auto& q = o.matrix();
  const int dim = obs.dim();
  std::vector<Observable> members;
  members.reserve(obs.size());
  for (Eigen::Index mu = 0; mu < q.rows(); ++mu) {
    ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index nu = 0; nu < q.cols(); ++nu) {
      acc += q(mu, nu) * obs[static_cast<std::size_t>(nu)].matrix();
    }
    members.emplace_back(std::move(acc));
  }
  if (obs.kind() == ObservableKind::Loo) {
    return ObservableSet::loo(dim, std::move(members));
  }
  return ObservableSet::generic(dim, std::move(members), obs.bound());
}

OrthogonalRotation random_orthogonal(int m, std::uint64_t seed) {
  if (m < 1) throw SizeMismatch("rotation size must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  RealMatrix g(m, m);
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ() * RealMatrix::Identity(m, m);
  const RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < m; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return OrthogonalRotation(std::move(q));
}

}  // namespace qfisep
