#include "mbraid/kitaev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace mbraid {

ThetaSchedule::ThetaSchedule(std::vector<double> times, std::vector<double> thetas)
    : times_(std::move(times)), thetas_(std::move(thetas)) {
  if (times_.size() != thetas_.size()) {
    throw std::invalid_argument("schedule: times and thetas differ in length");
  }
  if (times_.size() < 2) return;
  const double step = times_[1] - times_[0];
  if (!(step > 0.0)) throw std::invalid_argument("schedule: times must be strictly increasing");
  for (std::size_t i = 1; i < times_.size(); ++i) {
    const double d = times_[i] - times_[i - 1];
    if (!(d > 0.0)) throw std::invalid_argument("schedule: times must be strictly increasing");
    if (std::abs(d - step) > 1e-6 * step) {
      throw std::invalid_argument("schedule: times must be uniformly spaced");
    }
  }
}

ThetaSchedule ThetaSchedule::sample(const std::function<double(double)>& theta, double t0,
                                    double dt, int count) {
  std::vector<double> t(count), th(count);
  for (int i = 0; i < count; ++i) {
    t[i] = t0 + i * dt;
    th[i] = theta(t[i]);
  }
  return {std::move(t), std::move(th)};
}

Boundary parse_boundary(const std::string& s) {
  if (s == "open") return Boundary::Open;
  if (s == "periodic") return Boundary::Periodic;
  throw std::invalid_argument("boundary must be 'open' or 'periodic', got '" + s + "'");
}

std::string to_string(Boundary b) { return b == Boundary::Open ? "open" : "periodic"; }

namespace {

void require_pair_index(int k, int n) {
  if (n < 2 || k < 0 || k + 1 >= n) {
    throw std::out_of_range("pair index k = " + std::to_string(k) + " needs 0 <= k < n - 1 (n = " +
                            std::to_string(n) + ")");
  }
}

}  // namespace

CMatrix r_breve(double theta, int k, int n) {
  require_pair_index(k, n);
  const auto basis = jordan_wigner(n);
  return exp_blade(theta, basis[k + 1] * basis[k]);
}

CMatrix two_site_hamiltonian(double theta_dot, int k, int n) {
  require_pair_index(k, n);
  const auto basis = jordan_wigner(n);
  return Complex(0.0, theta_dot) * (basis[k + 1] * basis[k]);
}

double schrodinger_residual(const ThetaSchedule& schedule, int k, int n) {
  if (schedule.size() < 3) throw std::invalid_argument("schrodinger_residual needs >= 3 samples");
  require_pair_index(k, n);
  const auto basis = jordan_wigner(n);
  const CMatrix blade = basis[k + 1] * basis[k];
  const Complex i{0.0, 1.0};
  const auto& th = schedule.thetas();
  const double dt = schedule.dt();
  double worst = 0.0;
  for (int s = 1; s + 1 < schedule.size(); ++s) {
    const CMatrix dR = (exp_blade(th[s + 1], blade) - exp_blade(th[s - 1], blade)) / (2 * dt);
    // R is unitary, so R^{-1} = R^dagger.
    const CMatrix H_numeric = i * dR * exp_blade(th[s], blade).adjoint();
    const double theta_dot = (th[s + 1] - th[s - 1]) / (2 * dt);
    worst = std::max(worst, (H_numeric - i * theta_dot * blade).norm());
  }
  return worst;
}

CMatrix chain_hamiltonian(const ChainSpec& spec) {
  if (spec.N < 2) throw std::invalid_argument("chain needs N >= 2 pairs");
  if (spec.N > kMaxChainPairs) {
    throw DimensionError("chain with N = " + std::to_string(spec.N) + " pairs exceeds 2^" +
                         std::to_string(kMaxChainPairs) + " dimensions");
  }
  const int n = 2 * spec.N;
  const auto basis = jordan_wigner(n);
  const Complex i{0.0, 1.0};
  CMatrix h = CMatrix::Zero(basis.dim(), basis.dim());
  for (int k = 0; k < spec.N; ++k) {
    h += i * spec.theta_dot_1 * (basis[2 * k + 1] * basis[2 * k]);
    const bool last = (k == spec.N - 1);
    if (!last || spec.boundary == Boundary::Periodic) {
      h += i * spec.theta_dot_2 * (basis[(2 * k + 2) % n] * basis[2 * k + 1]);
    }
  }
  return h;
}

CMatrix parity_operator(int N) {
  const auto basis = jordan_wigner(2 * N);
  CMatrix p = identity(basis.dim());
  for (const auto& c : basis.matrices) p = p * c;
  return std::pow(Complex(0.0, 1.0), N) * p;
}

double excitation_gap(const CMatrix& h) {
  const auto ev = hermitian_eigenvalues(h);
  if (ev.size() < 2) return 0.0;
  return ev[1] - ev[0];
}

std::vector<GapRecord> gap_scan(int N, Boundary boundary,
                                const std::vector<std::pair<double, double>>& grid,
                                unsigned threads) {
  if (grid.empty()) throw std::invalid_argument("gap_scan: empty grid");
  if (N < 2) throw std::invalid_argument("chain needs N >= 2 pairs");
  if (N > kMaxChainPairs) {
    throw DimensionError("chain with N = " + std::to_string(N) + " pairs exceeds 2^" +
                         std::to_string(kMaxChainPairs) + " dimensions");
  }
  std::vector<GapRecord> out(grid.size());
  const auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t p = begin; p < grid.size(); p += stride) {
      const auto [t1, t2] = grid[p];
      out[p] = {t1, t2, excitation_gap(chain_hamiltonian({N, t1, t2, boundary})), N, boundary};
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, grid.size()));
  if (threads <= 1) {
    work(0, 1);
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
  return out;
}

VerificationReport braiding_periodicity(int k, int n, double tol) {
  const CMatrix tau = r_breve(std::numbers::pi / 4, k, n);
  const auto basis = jordan_wigner(n);
  const CMatrix id = identity(basis.dim());
  VerificationReport r;
  r.check = "braiding-periodicity";
  r.family = "r-breve";
  r.tolerance = tol;
  r.params = {{"k", k}, {"n", n}, {"theta", std::numbers::pi / 4}};
  r.record("R(pi/4)^8 = I", (matrix_power(tau, 8) - id).norm());
  r.record("R(pi/4)^4 = -I", (matrix_power(tau, 4) + id).norm());
  r.record("R(pi/4)^2 = c_k+1 c_k", (matrix_power(tau, 2) - basis[k + 1] * basis[k]).norm());
  if (const auto order = generator_order(tau, 16, tol)) r.metrics["order"] = *order;
  return r.finish();
}

CMatrix trotter_evolution(const std::function<CMatrix(double)>& hamiltonian, double T, int steps) {
  if (steps < 1) throw std::invalid_argument("trotter_evolution needs at least one step");
  const double dt = T / steps;
  CMatrix u;
  for (int s = 0; s < steps; ++s) {
    const CMatrix h = hamiltonian((s + 0.5) * dt);
    const CMatrix step = evolve_hermitian(h, dt);
    u = (s == 0) ? step : CMatrix(step * u);
  }
  return u;
}

}  // namespace mbraid
