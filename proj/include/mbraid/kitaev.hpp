#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mbraid/linalg.hpp"
#include "mbraid/verifiers.hpp"

namespace mbraid {

/// theta(t) sampled on a uniform time grid.
class ThetaSchedule {
 public:
  /// Throws std::invalid_argument unless times are strictly increasing and
  /// uniformly spaced (relative tolerance 1e-6 of the first step).
  ThetaSchedule(std::vector<double> times, std::vector<double> thetas);

  static ThetaSchedule sample(const std::function<double(double)>& theta, double t0, double dt,
                              int count);

  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& thetas() const { return thetas_; }
  int size() const { return static_cast<int>(times_.size()); }
  double dt() const { return times_.size() > 1 ? times_[1] - times_[0] : 0.0; }

 private:
  std::vector<double> times_;
  std::vector<double> thetas_;
};

enum class Boundary { Open, Periodic };

Boundary parse_boundary(const std::string& s);
std::string to_string(Boundary b);

/// 2N Majorana sites, odd-even coupling theta_dot_1, even-odd theta_dot_2.
struct ChainSpec {
  int N = 2;
  double theta_dot_1 = 1.0;
  double theta_dot_2 = 1.0;
  Boundary boundary = Boundary::Periodic;
};

inline constexpr int kMaxChainPairs = 10;

/// R_k(theta) = exp(theta c_{k+1} c_k) over jordan_wigner(n), 0 <= k < n-1.
CMatrix r_breve(double theta, int k, int n);

/// i * theta_dot * c_{k+1} c_k (hbar = 1). Schroedinger evolution under this
/// Hamiltonian from R_k(theta(0)) stays on R_k(theta(t)).
CMatrix two_site_hamiltonian(double theta_dot, int k, int n);

/// max over interior samples of
///   || i (R(t+dt) - R(t-dt)) / (2 dt) R(t)^{-1} - i theta_dot(t) c_{k+1} c_k ||_F
/// with theta_dot from the same central difference.
double schrodinger_residual(const ThetaSchedule& schedule, int k, int n);

/// i sum_k (theta_dot_1 c_{2k+1} c_{2k} + theta_dot_2 c_{2k+2} c_{2k+1});
/// periodic identifies c_{2N} with c_0, open drops the last even-odd bond.
CMatrix chain_hamiltonian(const ChainSpec& spec);

/// i^N c_0 c_1 ... c_{2N-1}: the fermion parity, Hermitian with square I.
CMatrix parity_operator(int N);

/// E_1 - E_0 of the many-body spectrum.
double excitation_gap(const CMatrix& h);

struct GapRecord {
  double theta_dot_1;
  double theta_dot_2;
  double gap;
  int N;
  Boundary boundary;
  bool closed() const { return gap < 1e-8; }
};

/// One record per grid point, in grid order. Points are evaluated on up to
/// `threads` workers (0 = hardware concurrency).
std::vector<GapRecord> gap_scan(int N, Boundary boundary,
                                const std::vector<std::pair<double, double>>& grid,
                                unsigned threads = 0);

/// Checks R(pi/4)^8 = I, R(pi/4)^4 = -I and R(pi/4)^2 = c_{k+1} c_k.
VerificationReport braiding_periodicity(int k, int n, double tol = 1e-12);

/// Product of `steps` factors exp(-i H dt), dt = T / steps.
CMatrix trotter_evolution(const std::function<CMatrix(double)>& hamiltonian, double T, int steps);

}  // namespace mbraid
