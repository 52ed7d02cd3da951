#include <doctest.h>

#include <numbers>

#include "mbraid/clifford.hpp"
#include "oracle.hpp"

using namespace mbraid;

namespace {

oracle::Poly to_poly(const CliffordElement& x) {
  oracle::Poly p;
  for (const auto& [b, c] : x.terms()) p[b.indices()] = c;
  return p;
}

CliffordElement random_element(int n, int terms) {
  CliffordElement x(n);
  for (int t = 0; t < terms; ++t) {
    const auto mask = std::uniform_int_distribution<std::uint64_t>(0, (1ull << n) - 1)(oracle::rng());
    x += CliffordElement::blade(n, Blade::from_mask(mask),
                                {oracle::uniform(-1, 1), oracle::uniform(-1, 1)});
  }
  return x;
}

}  // namespace

TEST_CASE("blade bookkeeping") {
  const Blade b = Blade::from_indices({0, 2, 5});
  CHECK(b.mask() == 0b100101);
  CHECK(b.grade() == 3);
  CHECK(b.span() == 6);
  CHECK(b.indices() == std::vector<int>{0, 2, 5});
  CHECK(Blade{}.is_scalar());
  CHECK(Blade{}.span() == 0);
  CHECK_THROWS_AS(Blade::from_indices({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Blade::from_indices({1, 1}), std::invalid_argument);
  CHECK(to_string(Blade::from_indices({1, 3})) == "c1*c3");
}

TEST_CASE("blade squares and reversal follow grade") {
  for (int g = 0; g < 8; ++g) {
    std::vector<int> idx(g);
    for (int i = 0; i < g; ++i) idx[i] = 2 * i;
    const Blade b = Blade::from_indices(idx);
    const int expected = (g * (g - 1) / 2) % 2 == 0 ? 1 : -1;
    CHECK(b.square_sign() == expected);
    CHECK(b.reverse_sign() == expected);
    auto [sign, prod] = blade_product(b, b);
    CHECK(prod.is_scalar());
    CHECK(sign == expected);
  }
}

TEST_CASE("blade product matches the bubble-sort oracle") {
  for (int trial = 0; trial < 500; ++trial) {
    const auto ma = std::uniform_int_distribution<std::uint64_t>(0, 255)(oracle::rng());
    const auto mb = std::uniform_int_distribution<std::uint64_t>(0, 255)(oracle::rng());
    const Blade a = Blade::from_mask(ma), b = Blade::from_mask(mb);
    auto w = a.indices();
    const auto wb = b.indices();
    w.insert(w.end(), wb.begin(), wb.end());
    const auto [osign, oword] = oracle::normal_form(w);
    const auto [sign, prod] = blade_product(a, b);
    CHECK(sign == osign);
    CHECK(prod.indices() == oword);
  }
}

TEST_CASE("generators satisfy the Clifford relations") {
  const int n = 6;
  for (int i = 0; i < n; ++i) {
    const auto ci = generator(n, i);
    CHECK(distance(ci * ci, CliffordElement::scalar(n, 1.0)) == 0.0);
    for (int j = i + 1; j < n; ++j) {
      const auto cj = generator(n, j);
      CHECK((ci * cj + cj * ci).is_zero());
    }
  }
  CHECK_THROWS_AS(generator(3, 3), std::out_of_range);
  CHECK_THROWS_AS(generator(65, 0), std::invalid_argument);
}

TEST_CASE("product is associative and matches the oracle on random elements") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_element(6, 5), b = random_element(6, 5), c = random_element(6, 5);
    CHECK(distance((a * b) * c, a * (b * c)) < 1e-13);
    CHECK(oracle::poly_distance(to_poly(a * b), oracle::mul(to_poly(a), to_poly(b))) < 1e-13);
  }
}

TEST_CASE("pruning and arithmetic") {
  const int n = 3;
  auto x = generator(n, 0) + generator(n, 1);
  x -= generator(n, 1);
  CHECK(x.terms().size() == 1);
  auto tiny = generator(n, 2) * Complex(1e-15);
  CHECK(tiny.is_zero());
  CHECK(x.coefficient(Blade::from_indices({0})) == Complex(1.0));
  CHECK((x / 2.0).coefficient(Blade::from_indices({0})) == Complex(0.5));
  CHECK_THROWS_AS(generator(2, 0) + generator(3, 0), std::invalid_argument);
}

TEST_CASE("dagger reverses products") {
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_element(5, 4), b = random_element(5, 4);
    CHECK(distance(dagger(a * b), dagger(b) * dagger(a)) < 1e-13);
  }
  const int n = 4;
  CHECK(distance(dagger(generator(n, 1) * generator(n, 0)), generator(n, 0) * generator(n, 1)) == 0.0);
}

TEST_CASE("binomial inverse") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto mask = std::uniform_int_distribution<std::uint64_t>(1, 31)(oracle::rng());
    const Complex a{oracle::uniform(-2, 2), oracle::uniform(-2, 2)};
    const Complex b{oracle::uniform(-2, 2), oracle::uniform(-2, 2)};
    const Blade B = Blade::from_mask(mask);
    const auto s = CliffordElement::scalar(5, a) + CliffordElement::blade(5, B, b);
    const auto inv = invert_binomial(s);
    CHECK(distance(s * inv, CliffordElement::scalar(5, 1.0)) < 1e-12);
    CHECK(distance(inv * s, CliffordElement::scalar(5, 1.0)) < 1e-12);
  }
  // 1 + c0 squares-to-plus blade: a^2 - b^2 = 0, no inverse.
  CHECK_THROWS_AS(invert_binomial(1.0, 1.0, Blade::from_indices({0}), 2), DomainError);
  CHECK_THROWS_AS(invert_binomial(generator(3, 0) + generator(3, 1)), DomainError);
}

TEST_CASE("braid elements conjugate generators into neighbours") {
  const int n = 5;
  for (int k = 0; k + 1 < n; ++k) {
    const auto tau = braid_element(n, k);
    const auto inv = invert_binomial(tau);
    CHECK(distance(conjugate_action(tau, inv, generator(n, k)), generator(n, k + 1)) < 1e-12);
    CHECK(distance(conjugate_action(tau, inv, generator(n, k + 1)), -generator(n, k)) < 1e-12);
  }
  const auto wrap = braid_element(n, n - 1);
  const auto expected = (CliffordElement::scalar(n, 1.0) + generator(n, 0) * generator(n, n - 1)) *
                        Complex(1.0 / std::numbers::sqrt2);
  CHECK(distance(wrap, expected) < 1e-15);
  CHECK_THROWS_AS(conjugate_action(wrap, wrap, generator(n, 0)), DomainError);
}

TEST_CASE("fermions from Majorana pairs") {
  const int n = 2;
  const auto f = fermion_from_majoranas(generator(n, 0), generator(n, 1));
  CHECK((f.psi * f.psi).is_zero());
  CHECK((f.psi_dagger * f.psi_dagger).is_zero());
  CHECK(distance(f.psi * f.psi_dagger + f.psi_dagger * f.psi, CliffordElement::scalar(n, 1.0)) == 0.0);
  CHECK(distance(dagger(f.psi), f.psi_dagger) == 0.0);
  const auto [c1, c2] = majoranas_from_fermion(f);
  CHECK(distance(c1, generator(n, 0)) == 0.0);
  CHECK(distance(c2, generator(n, 1)) == 0.0);
}

TEST_CASE("generator index detection") {
  CHECK(as_generator_index(generator(4, 2)) == 2);
  CHECK(as_generator_index(generator(4, 2) * Complex(2.0)) == -1);
  CHECK(as_generator_index(generator(4, 2) + generator(4, 1)) == -1);
}
