#include <doctest.h>

#include <numbers>

#include "mbraid/kitaev.hpp"
#include "oracle.hpp"

using namespace mbraid;

TEST_CASE("schedules") {
  const auto s = ThetaSchedule::sample([](double t) { return 2 * t; }, 1.0, 0.5, 5);
  CHECK(s.size() == 5);
  CHECK(s.dt() == 0.5);
  CHECK(s.times().back() == doctest::Approx(3.0));
  CHECK(s.thetas().back() == doctest::Approx(6.0));
  CHECK_THROWS_AS(ThetaSchedule({0, 1, 3}, {0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ThetaSchedule({0, 1}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(ThetaSchedule({1, 0}, {0, 0}), std::invalid_argument);
}

TEST_CASE("boundary names") {
  CHECK(parse_boundary("open") == Boundary::Open);
  CHECK(parse_boundary("periodic") == Boundary::Periodic);
  CHECK(to_string(Boundary::Open) == "open");
  CHECK_THROWS_AS(parse_boundary("ring"), std::invalid_argument);
}

TEST_CASE("r_breve is the unitary exponential of the blade") {
  for (double t : {0.0, 0.2, 1.0}) {
    const CMatrix R = r_breve(t, 1, 5);
    const auto basis = jordan_wigner(5);
    CHECK(frobenius_distance(R, (t * basis[2] * basis[1]).exp()) < 1e-12);
    CHECK(is_unitary(R));
  }
  CHECK_THROWS_AS(r_breve(0.1, 4, 5), std::out_of_range);
}

TEST_CASE("two-site Hamiltonian generates r_breve") {
  const CMatrix H = two_site_hamiltonian(0.7, 0, 4);
  CHECK(hermiticity_residual(H) < 1e-15);
  for (double t : {0.1, 0.5, 2.0}) {
    CHECK(frobenius_distance(evolve_hermitian(H, t), r_breve(0.7 * t, 0, 4)) < 1e-12);
  }
}

TEST_CASE("Schroedinger residual") {
  const auto lin = ThetaSchedule::sample([](double t) { return std::numbers::pi / 4 * t; }, 0, 1e-4, 101);
  CHECK(schrodinger_residual(lin, 0, 4) < 1e-6);
  const auto sine = ThetaSchedule::sample([](double t) { return std::sin(t); }, 0.3, 1e-4, 101);
  CHECK(schrodinger_residual(sine, 1, 4) < 1e-6);
  const auto few = ThetaSchedule::sample([](double t) { return t; }, 0, 1e-4, 2);
  CHECK_THROWS_AS(schrodinger_residual(few, 0, 4), std::invalid_argument);
}

TEST_CASE("time-dependent evolution tracks r_breve") {
  // H(t) = i theta'(t) c1 c0 commutes with itself at all times, so the
  // ordered product converges to R(theta(T) - theta(0)).
  const auto theta = [](double t) { return std::sin(t); };
  const auto H = [](double t) { return two_site_hamiltonian(std::cos(t), 0, 4); };
  const CMatrix U = trotter_evolution(H, 1.2, 400);
  CHECK(frobenius_distance(U, r_breve(theta(1.2) - theta(0.0), 0, 4)) < 1e-5);
}

TEST_CASE("chain Hamiltonian") {
  for (auto b : {Boundary::Open, Boundary::Periodic}) {
    const CMatrix H = chain_hamiltonian({3, 0.4, 1.1, b});
    CHECK(H.rows() == 8);
    CHECK(is_hermitian(H, 1e-12));
    CHECK(commutator_norm(H, parity_operator(3)) < 1e-10);
  }
  CHECK_THROWS_AS(chain_hamiltonian({11, 1, 1, Boundary::Open}), DimensionError);
  CHECK_THROWS_AS(chain_hamiltonian({1, 1, 1, Boundary::Open}), std::invalid_argument);
}

TEST_CASE("parity operator") {
  for (int N = 2; N <= 4; ++N) {
    const CMatrix P = parity_operator(N);
    CHECK(is_hermitian(P, 1e-12));
    CHECK(frobenius_distance(P * P, identity(P.rows())) < 1e-12);
    // Under this Jordan-Wigner layout i c_{2j} c_{2j+1} = -Z_j, so P = (-Z)^{(x) N}.
    oracle::Mat ref = oracle::Mat::Identity(1, 1);
    for (int j = 0; j < N; ++j) ref = oracle::kron(ref, -oracle::Z());
    CHECK(frobenius_distance(P, ref) < 1e-12);
  }
}

TEST_CASE("gaps match the free-fermion oracle") {
  for (int N = 2; N <= 5; ++N) {
    for (auto b : {Boundary::Open, Boundary::Periodic}) {
      for (int trial = 0; trial < 4; ++trial) {
        const double t1 = oracle::uniform(-2, 2), t2 = oracle::uniform(-2, 2);
        const double gap = excitation_gap(chain_hamiltonian({N, t1, t2, b}));
        CHECK(gap == doctest::Approx(oracle::free_fermion_gap(N, t1, t2, b == Boundary::Periodic)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("gap closes at equal couplings on the periodic chain") {
  std::vector<std::pair<double, double>> grid;
  for (int i = 0; i <= 20; ++i) grid.emplace_back(0.1 * i, 1.0);
  const auto recs = gap_scan(4, Boundary::Periodic, grid, 4);
  REQUIRE(recs.size() == 21);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].theta_dot_1 == grid[i].first);
    CHECK(recs[i].gap == doctest::Approx(2 * std::abs(grid[i].first - 1.0)).epsilon(1e-9).scale(1));
  }
  CHECK(recs[10].closed());
  CHECK_FALSE(recs[9].closed());
}

TEST_CASE("gap scan is deterministic across thread counts") {
  std::vector<std::pair<double, double>> grid;
  for (int i = 0; i < 9; ++i) grid.emplace_back(0.25 * i, 0.5 + 0.1 * i);
  const auto a = gap_scan(3, Boundary::Open, grid, 1);
  const auto b = gap_scan(3, Boundary::Open, grid, 5);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(a[i].gap == b[i].gap);
  CHECK_THROWS_AS(gap_scan(3, Boundary::Open, {}, 1), std::invalid_argument);
  CHECK_THROWS_AS(gap_scan(20, Boundary::Open, grid, 1), DimensionError);
}

TEST_CASE("braiding periodicity") {
  for (int k = 0; k < 5; ++k) {
    const auto r = braiding_periodicity(k, 6);
    CHECK(r.pass);
    CHECK(r.metrics.at("order") == 8);
  }
}
