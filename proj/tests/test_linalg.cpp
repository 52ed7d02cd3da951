#include <doctest.h>

#include <numbers>

#include "mbraid/linalg.hpp"
#include "oracle.hpp"

using namespace mbraid;

TEST_CASE("tensor and embed") {
  const CMatrix X = pauli::X(), Z = pauli::Z();
  CHECK(frobenius_distance(tensor(X, Z), oracle::kron(oracle::X(), oracle::Z())) == 0.0);
  CHECK(frobenius_distance(tensor({X, Z, X}), oracle::kron(oracle::kron(oracle::X(), oracle::Z()), oracle::X())) == 0.0);
  const CMatrix e = embed(tensor(X, Z), 1, 4);
  const CMatrix ref = oracle::kron(oracle::kron(oracle::kron(oracle::I2(), oracle::X()), oracle::Z()), oracle::I2());
  CHECK(frobenius_distance(e, ref) == 0.0);
  CHECK_THROWS_AS(embed(CMatrix::Identity(3, 3), 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(embed(X, 3, 3), std::out_of_range);
  CHECK_THROWS_AS(embed(X, 0, 13), DimensionError);
  CHECK_THROWS_AS(multiply(CMatrix::Identity(2, 2), CMatrix::Identity(4, 4)), std::invalid_argument);
}

TEST_CASE("matrix powers") {
  const CMatrix Y = pauli::Y();
  CHECK(frobenius_distance(matrix_power(Y, 0), identity(2)) == 0.0);
  CHECK(frobenius_distance(matrix_power(Y, 2), identity(2)) == 0.0);
  CHECK(frobenius_distance(matrix_power(Y, 5), Y) == 0.0);
  const CMatrix S = (CMatrix(2, 2) << 1, 0, 0, Complex(0, 1)).finished();
  CHECK(frobenius_distance(matrix_power(S, -1) * S, identity(2)) < 1e-15);
}

TEST_CASE("Jordan-Wigner matrices match literal Pauli strings") {
  for (int n = 1; n <= 9; ++n) {
    const auto basis = jordan_wigner(n);
    CHECK(basis.qubits == (n + 1) / 2);
    CHECK(basis.matrices.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      CHECK(frobenius_distance(basis[k], oracle::majorana(k, basis.qubits)) == 0.0);
    }
  }
}

TEST_CASE("Jordan-Wigner Majoranas obey the Clifford relations") {
  const auto basis = jordan_wigner(8);
  for (int i = 0; i < 8; ++i) {
    CHECK(is_hermitian(basis[i]));
    CHECK(is_unitary(basis[i]));
    CHECK(frobenius_distance(basis[i] * basis[i], identity(basis.dim())) == 0.0);
    for (int j = i + 1; j < 8; ++j) CHECK(anticommutator_norm(basis[i], basis[j]) == 0.0);
  }
  CHECK_THROWS_AS(jordan_wigner(25), DimensionError);
  CHECK_THROWS_AS(jordan_wigner(0), std::invalid_argument);
}

TEST_CASE("realize is an algebra homomorphism") {
  const int n = 6;
  const auto basis = jordan_wigner(n);
  for (int trial = 0; trial < 20; ++trial) {
    CliffordElement a(n), b(n);
    for (int t = 0; t < 4; ++t) {
      const auto ma = std::uniform_int_distribution<std::uint64_t>(0, 63)(oracle::rng());
      const auto mb = std::uniform_int_distribution<std::uint64_t>(0, 63)(oracle::rng());
      a += CliffordElement::blade(n, Blade::from_mask(ma), {oracle::uniform(-1, 1), oracle::uniform(-1, 1)});
      b += CliffordElement::blade(n, Blade::from_mask(mb), {oracle::uniform(-1, 1), oracle::uniform(-1, 1)});
    }
    CHECK(frobenius_distance(realize(a * b, basis), realize(a, basis) * realize(b, basis)) < 1e-12);
    CHECK(frobenius_distance(realize(dagger(a), basis), adjoint(realize(a, basis))) < 1e-12);
  }
}

TEST_CASE("exp_blade") {
  const auto basis = jordan_wigner(4);
  const CMatrix B = basis[1] * basis[0];
  for (double t : {0.0, 0.3, std::numbers::pi / 4, 2.0}) {
    const CMatrix closed = exp_blade(t, B);
    const CMatrix series = (t * B).exp();
    CHECK(frobenius_distance(closed, series) < 1e-12);
  }
  CHECK_THROWS_AS(exp_blade(0.1, basis[0]), DomainError);
}

TEST_CASE("Hermitian spectra and evolution") {
  const CMatrix H = pauli::X() + 0.5 * pauli::Z();
  const auto ev = hermitian_eigenvalues(H);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == doctest::Approx(-std::sqrt(1.25)));
  CHECK(ev[1] == doctest::Approx(std::sqrt(1.25)));
  const CMatrix U = evolve_hermitian(H, 0.7);
  CHECK(frobenius_distance(U, (Complex(0, -0.7) * H).exp()) < 1e-12);
  CHECK(is_unitary(U));
  CHECK_THROWS_AS(hermitian_eigenvalues(pauli::X() * Complex(0, 1) + pauli::Z()), DomainError);
}

TEST_CASE("residual helpers") {
  CHECK(unitarity_residual(pauli::Y()) == 0.0);
  CHECK(hermiticity_residual(pauli::Y()) == 0.0);
  CHECK(commutator_norm(pauli::X(), pauli::X()) == 0.0);
  CHECK(commutator_norm(pauli::X(), pauli::Z()) == doctest::Approx(std::sqrt(8.0)));
  CHECK_FALSE(is_unitary(2.0 * pauli::X()));
}
