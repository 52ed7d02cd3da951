#include <doctest.h>

#include <numbers>

#include "mbraid/quaternion.hpp"
#include "oracle.hpp"

using namespace mbraid;

namespace {

Quaternion random_quaternion() {
  return {oracle::uniform(-1, 1), oracle::uniform(-1, 1), oracle::uniform(-1, 1), oracle::uniform(-1, 1)};
}

Quaternion random_unit() {
  const Quaternion q = random_quaternion();
  return q * (1.0 / q.length());
}

PureUnit random_axis() {
  return PureUnit::normalized({oracle::uniform(-1, 1), oracle::uniform(-1, 1), oracle::uniform(-1, 1)});
}

// Conjugation by 2x2 matrices, read back through the Pauli-like basis.
Quaternion conjugate_via_matrices(const Quaternion& g, const Quaternion& P) {
  const CMatrix m = to_su2(g) * to_su2(P) * to_su2(g).adjoint();
  // to_su2(0,b,c,d) = [[ib, c + id], [-c + id, -ib]]
  return {0.0, m(0, 0).imag(), m(0, 1).real(), m(0, 1).imag()};
}

}  // namespace

TEST_CASE("Hamilton units") {
  const auto I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();
  const Quaternion minus_one{-1, 0, 0, 0};
  CHECK(I * I == minus_one);
  CHECK(J * J == minus_one);
  CHECK(K * K == minus_one);
  CHECK(I * J * K == minus_one);
  CHECK(I * J == K);
  CHECK(J * K == I);
  CHECK(K * I == J);
  CHECK(J * I == K * -1.0);
}

TEST_CASE("inverse, dagger and powers") {
  for (int t = 0; t < 50; ++t) {
    const Quaternion q = random_quaternion();
    CHECK(distance(q * q_inverse(q), Quaternion::one()) < 1e-12);
    CHECK(distance(q * q_dagger(q), Quaternion{q.length_squared(), 0, 0, 0}) < 1e-12);
    CHECK(distance(q_pow(q, 3), q * q * q) < 1e-12);
    CHECK(distance(q_pow(q, -2) * q * q, Quaternion::one()) < 1e-12);
  }
  CHECK_THROWS_AS(q_inverse(Quaternion{}), DomainError);
}

TEST_CASE("pure units") {
  CHECK_THROWS_AS(PureUnit(1, 1, 0), DomainError);
  CHECK_THROWS_AS(PureUnit::normalized({0, 0, 0}), DomainError);
  const PureUnit u = random_axis();
  CHECK(distance(u.quaternion() * u.quaternion(), Quaternion{-1, 0, 0, 0}) < 1e-12);
}

TEST_CASE("to_su2 is a multiplicative homomorphism into SU(2)") {
  for (int t = 0; t < 200; ++t) {
    const Quaternion p = random_quaternion(), q = random_quaternion();
    CHECK(frobenius_distance(to_su2(p * q), to_su2(p) * to_su2(q)) < 1e-12);
    const Quaternion u = random_unit();
    CHECK(is_unitary(to_su2(u), 1e-12));
    CHECK(std::abs(to_su2(u).determinant() - 1.0) < 1e-12);
  }
}

TEST_CASE("rotation: formula, direct product and matrix conjugation agree") {
  for (int t = 0; t < 200; ++t) {
    const Quaternion g = random_unit();
    const Quaternion P = Quaternion::pure({oracle::uniform(-1, 1), oracle::uniform(-1, 1), oracle::uniform(-1, 1)});
    const Quaternion direct = rotate(g, P);
    CHECK(distance(direct, rotate_formula(g, P)) < 1e-12);
    CHECK(distance(direct, conjugate_via_matrices(g, P)) < 1e-12);
    CHECK(direct.length() == doctest::Approx(P.length()).epsilon(1e-12));
  }
  // A quarter turn about I sends J to K.
  const Quaternion g{std::cos(std::numbers::pi / 4), std::sin(std::numbers::pi / 4), 0, 0};
  CHECK(distance(rotate(g, Quaternion::j()), Quaternion::k()) < 1e-15);
  CHECK_THROWS_AS(rotate(Quaternion{2, 0, 0, 0}, Quaternion::i()), DomainError);
  CHECK_THROWS_AS(rotate(Quaternion::one(), Quaternion::one()), DomainError);
}

TEST_CASE("rotation matrix is orthogonal with determinant one") {
  const Quaternion g = random_unit();
  const auto R = rotation_matrix(g);
  double det = R[0][0] * (R[1][1] * R[2][2] - R[1][2] * R[2][1]) -
               R[0][1] * (R[1][0] * R[2][2] - R[1][2] * R[2][0]) +
               R[0][2] * (R[1][0] * R[2][1] - R[1][1] * R[2][0]);
  CHECK(det == doctest::Approx(1.0));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += R[k][i] * R[k][j];
      CHECK(s == doctest::Approx(i == j ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("braid criterion against direct evaluation") {
  int positives = 0, negatives = 0;
  for (int t = 0; t < 200; ++t) {
    const double theta = oracle::uniform(0.2, 1.3);
    const double a = std::cos(theta), b = std::sin(theta);
    const PureUnit u = random_axis();
    PureUnit v = random_axis();
    if (t % 2 == 0) {
      // Rotate u to an axis at the required angle.
      const double want = (a * a - b * b) / (2 * b * b);
      if (std::abs(want) > 1) continue;
      auto w = cross(u.vec(), random_axis().vec());
      const double wl = std::sqrt(dot(w, w));
      for (auto& x : w) x /= wl;
      const double s = std::sqrt(1 - want * want);
      const auto uv = u.vec();
      v = PureUnit(want * uv[0] + s * w[0], want * uv[1] + s * w[1], want * uv[2] + s * w[2], 1e-9);
    }
    const auto r = braid_condition(a, b, u, v);
    const Quaternion g{a, b * u.vec()[0], b * u.vec()[1], b * u.vec()[2]};
    const Quaternion h{a, b * v.vec()[0], b * v.vec()[1], b * v.vec()[2]};
    CHECK(r.braids == (distance(g * h * g, h * g * h) < 1e-9));
    CHECK(r.verdicts_agree);
    (r.braids ? positives : negatives)++;
  }
  CHECK(positives > 20);
  CHECK(negatives > 20);
  CHECK_THROWS_AS(braid_condition(1, 1, random_axis(), random_axis()), DomainError);
}

TEST_CASE("same-axis elements always braid") {
  const PureUnit u = random_axis();
  const auto r = braid_condition(std::cos(0.4), std::sin(0.4), u, u);
  CHECK(r.same_axis);
  CHECK(r.braids);
  CHECK(r.verdicts_agree);
}

TEST_CASE("Fibonacci generators") {
  const auto fib = fibonacci_generators();
  CHECK(fib.tau * fib.tau + fib.tau == doctest::Approx(1.0));
  CHECK(fib.f.is_unit());
  CHECK(fib.g.is_unit());
  CHECK(distance(fib.g * fib.h * fib.g, fib.h * fib.g * fib.h) < 1e-12);
  CHECK(distance(q_pow(fib.g, 10), Quaternion{-1, 0, 0, 0}) < 1e-12);
  const auto traces = separated_traces(fib.g, fib.h, 12);
  CHECK(traces.size() >= 100);
  for (std::size_t i = 1; i < traces.size(); ++i) CHECK(traces[i] - traces[i - 1] > 1e-6);
}

TEST_CASE("conjugate pairs braid exactly when the angle condition holds") {
  for (double theta : {0.8, 1.0, 1.2, 7 * std::numbers::pi / 10}) {
    const auto pair = conjugate_pair_for_angle(theta);
    REQUIRE(pair.has_value());
    CHECK(distance(pair->g * pair->h * pair->g, pair->h * pair->g * pair->h) < 1e-12);
    CHECK(frobenius_distance(pair->G * pair->H * pair->G, pair->H * pair->G * pair->H) < 1e-12);
  }
  // cos^2 - sin^2 = (a^2 - b^2) / (2 b^2) has no solution near theta = 0.
  CHECK_FALSE(conjugate_pair_for_angle(0.2).has_value());
  CHECK_THROWS_AS(conjugate_pair(0.5, 1.0, 1.0), DomainError);
}
