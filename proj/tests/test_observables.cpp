#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qfisep/errors.hpp"
#include "qfisep/observables.hpp"
#include "qfisep/qfi.hpp"
#include "qfisep/states.hpp"

using namespace qfisep;
using namespace qfisep::testing;

TEST_CASE("loo_basis d=2 is the scaled Pauli set") {
  const auto g = loo_basis(2);
  REQUIRE(g.size() == 4);
  CHECK(g.kind() == ObservableKind::Loo);
  CHECK(*g.bound() == 1.0);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(max_abs(g[0].matrix() - r * ComplexMatrix::Identity(2, 2)) < 1e-15);
  CHECK(max_abs(g[1].matrix() - r * pauli_x()) < 1e-15);
  CHECK(max_abs(g[2].matrix() - r * pauli_y()) < 1e-15);
  CHECK(max_abs(g[3].matrix() - r * pauli_z()) < 1e-15);
}

TEST_CASE("loo_basis d=3 orthonormality, errors") {
  const auto g = loo_basis(3);
  REQUIRE(g.size() == 9);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      CHECK(std::abs((g[i].matrix() * g[j].matrix()).trace() - (i == j ? 1.0 : 0.0)) <= 1e-12);
  CHECK(*g.bound() == 2.0);
  CHECK_THROWS_AS(loo_basis(1), InvalidDimension);
  CHECK(certify_loo(g.members(), 3).passed());
}

TEST_CASE("Gell-Mann ordering and Casimir identity") {
  const auto pis = gell_mann_matrices(3);
  REQUIRE(pis.size() == 8);
  // Symmetric (0,1), (0,2), (1,2); then antisymmetric; then diagonal.
  CHECK(pis[0](0, 1) == Complex(1, 0));
  CHECK(pis[2](1, 2) == Complex(1, 0));
  CHECK(pis[3](0, 1) == Complex(0, -1));
  CHECK(pis[6](1, 1) == Complex(-1, 0));
  CHECK(std::abs(pis[7](2, 2) - Complex(-2.0 / std::sqrt(3.0), 0)) < 1e-15);
  for (int d : {2, 3, 4}) {
    ComplexMatrix casimir = ComplexMatrix::Zero(d, d);
    for (const auto& p : gell_mann_matrices(d)) casimir += p * p;
    const double expected = 2.0 * (d * d - 1.0) / d;
    CHECK(max_abs(casimir - expected * ComplexMatrix::Identity(d, d)) <= 1e-9);
  }
  ComplexMatrix casimir3 = ComplexMatrix::Zero(3, 3);
  for (const auto& p : pis) casimir3 += p * p;
  CHECK(casimir3(0, 0).real() == doctest::Approx(16.0 / 3.0));
}

TEST_CASE("LOO completeness and purity identity") {
  for (int d : {2, 3}) {
    const auto g = loo_basis(d);
    const auto pis = gell_mann_matrices(d);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const ComplexMatrix m = random_hermitian(d, seed);
      ComplexMatrix rebuilt = ComplexMatrix::Zero(d, d);
      for (const auto& gm : g) rebuilt += (gm.matrix() * m).trace() * gm.matrix();
      CHECK(max_abs(rebuilt - m) <= 1e-9);

      const auto rho = random_density(d, 1 + static_cast<int>(seed % d), 100 + seed);
      double sum = 0.0;
      for (const auto& p : pis) sum += std::pow(rho.expectation(p).real(), 2);
      CHECK(std::abs(sum - 2.0 * (rho.purity() - 1.0 / d)) <= 1e-9);
    }
  }
}

TEST_CASE("sic_povm d=2 tetrahedron") {
  const auto e = sic_povm(2);
  REQUIRE(e.size() == 4);
  CHECK(e.kind() == ObservableKind::Sic);
  ComplexMatrix total = ComplexMatrix::Zero(2, 2);
  for (const auto& x : e) {
    CHECK(x.matrix().trace().real() == doctest::Approx(0.5).epsilon(1e-12));
    total += x.matrix();
  }
  CHECK(max_abs(total - ComplexMatrix::Identity(2, 2)) <= 1e-12);
  CHECK(*e.bound() == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("sic_povm d=3 overlaps and bound") {
  const auto e = sic_povm(3);
  REQUIRE(e.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      const double overlap = 9.0 * (e[i].matrix() * e[j].matrix()).trace().real();
      CHECK(overlap == doctest::Approx(i == j ? 1.0 : 0.25).epsilon(1e-12));
    }
  }
  CHECK(*e.bound() == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK_THROWS_AS(sic_povm(4), UnsupportedDimension);
  CHECK_THROWS_AS(sic_povm(5), UnsupportedDimension);
}

TEST_CASE("sic_from_fiducial") {
  ComplexVector hesse(3);
  hesse << 0.0, 1.0, -1.0;
  hesse /= std::sqrt(2.0);
  const auto from_file = sic_from_fiducial(3, hesse);
  const auto builtin = sic_povm(3);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(max_abs(from_file[i].matrix() - builtin[i].matrix()) <= 1e-14);
  }

  // Bloch vector (1,1,1)/sqrt3: cos(theta) = 1/sqrt3, phi = pi/4.
  const double theta = std::acos(1.0 / std::sqrt(3.0));
  ComplexVector qubit(2);
  qubit << std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), std::numbers::pi / 4.0);
  const auto e2 = sic_from_fiducial(2, qubit);
  CHECK(e2.kind() == ObservableKind::Sic);
  CHECK(certify_sic(e2.members(), 2).passed());

  ComplexVector basis(3);
  basis << 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(sic_from_fiducial(3, basis), NotAFiducial);
  CHECK_THROWS_AS(sic_from_fiducial(3, 2.0 * basis), InvalidVector);
  CHECK_THROWS_AS(sic_from_fiducial(2, basis), InvalidVector);
}

TEST_CASE("sic_to_loo certification and sign independence") {
  for (int d : {2, 3}) {
    const auto e = sic_povm(d);
    const auto minus = sic_to_loo(e, SicSign::Minus);
    const auto plus = sic_to_loo(e, SicSign::Plus);
    CHECK(minus.kind() == ObservableKind::Loo);
    CHECK(*minus.bound() == d - 1.0);
    for (std::size_t i = 0; i < minus.size(); ++i)
      for (std::size_t j = 0; j < minus.size(); ++j)
        CHECK(std::abs((minus[i].matrix() * minus[j].matrix()).trace() - (i == j ? 1.0 : 0.0)) <= 1e-10);
    CHECK(certify_loo(plus.members(), d).passed());
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto rho = random_density(d, 1 + static_cast<int>(seed % d), seed);
      CHECK(total_qfi(rho, minus) == doctest::Approx(total_qfi(rho, plus)).epsilon(1e-10));
      for (std::size_t mu = 0; mu < e.size(); ++mu) {
        const double scaled = d * (d + 1.0) * qfi(rho, e[mu]);
        CHECK(std::abs(qfi(rho, minus[mu]) - scaled) <= 1e-9);
        CHECK(std::abs(qfi(rho, plus[mu]) - scaled) <= 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(sic_to_loo(loo_basis(2)), NotSIC);
}

TEST_CASE("rotate") {
  const auto g = loo_basis(3);
  const auto same = rotate(g, OrthogonalRotation::identity(9));
  for (std::size_t i = 0; i < 9; ++i) CHECK(max_abs(same[i].matrix() - g[i].matrix()) == 0.0);

  const auto rotated = rotate(g, random_orthogonal(9, 17));
  CHECK(rotated.kind() == ObservableKind::Loo);
  CHECK(certify_loo(rotated.members(), 3).passed());

  const auto e = rotate(sic_povm(3), random_orthogonal(9, 18));
  CHECK(e.kind() == ObservableKind::Generic);
  CHECK(*e.bound() == doctest::Approx(1.0 / 6.0));

  CHECK_THROWS_AS(rotate(g, random_orthogonal(4, 1)), SizeMismatch);
}

TEST_CASE("orbit invariance of the total QFI") {
  std::uint64_t seed = 0;
  for (int d : {2, 3}) {
    for (const auto& set : {loo_basis(d), sic_povm(d)}) {
      for (int trial = 0; trial < 50; ++trial, ++seed) {
        const auto rho = random_density(d, 1 + static_cast<int>(seed % d), seed);
        const auto o = random_orthogonal(d * d, 40000 + seed);
        CHECK(std::abs(total_qfi(rho, rotate(set, o)) - total_qfi(rho, set)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("random_orthogonal") {
  const auto one = random_orthogonal(1, 3);
  CHECK(std::abs(std::abs(one.matrix()(0, 0)) - 1.0) < 1e-15);
  for (int m = 1; m <= 18; ++m) CHECK(orthogonality_defect(random_orthogonal(m, m).matrix()) <= 1e-10);
  CHECK(random_orthogonal(9, 123).matrix() == random_orthogonal(9, 123).matrix());
  CHECK(random_orthogonal(9, 123).matrix() != random_orthogonal(9, 124).matrix());
  CHECK_THROWS_AS(OrthogonalRotation(RealMatrix::Ones(2, 2)), NotOrthogonal);
}

TEST_CASE("ObservableSet factories reject bad members") {
  const auto pis = gell_mann_matrices(2);
  std::vector<Observable> three{Observable(pis[0]), Observable(pis[1]), Observable(pis[2])};
  CHECK_THROWS_AS(ObservableSet::loo(2, three), NotLOO);
  CHECK_THROWS_AS(ObservableSet::sic(2, loo_basis(2).members()), NotSIC);
  CHECK_THROWS_AS(ObservableSet::generic(3, three), DimensionMismatch);
  CHECK_THROWS_AS(Observable(ComplexMatrix::Ones(2, 2) * Complex(0, 1)), NonHermitianInput);
  CHECK_FALSE(ObservableSet::generic(2, three).bound().has_value());
}
