#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mbraid/representations.hpp"

namespace mbraid {

/// One relation instance that was evaluated, e.g. "s1 s2 s1 = s2 s1 s2".
struct Witness {
  std::string relation;
  double residual = 0.0;
  std::vector<Complex> state;  // optional counterexample / witness vector
};

/// Result of a relation check. `pass` is always max_residual <= tolerance.
struct VerificationReport {
  std::string check;
  std::string family;
  std::map<std::string, double> params;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<Witness> witnesses;
  std::map<std::string, double> metrics;
  std::vector<std::string> notes;

  void record(std::string relation, double residual, std::vector<Complex> state = {});
  /// Sets pass from max_residual and tolerance.
  VerificationReport& finish();
};

/// Braid relations over all adjacent pairs and commutation over all pairs
/// with disjoint support (cyclic when circular).
VerificationReport check_braid_relations(const UnitaryRep& rep, double tol = kMatrixTolerance);
VerificationReport check_braid_relations(const std::vector<CMatrix>& generators, bool circular,
                                         double tol = kMatrixTolerance,
                                         const std::string& family = "custom");

VerificationReport check_unitarity(const UnitaryRep& rep, double tol = kMatrixTolerance);

/// (R (x) I)(I (x) R)(R (x) I) = (I (x) R)(R (x) I)(I (x) R) on V^{(x)3}.
VerificationReport check_ybe(const CMatrix& R, double tol = kMatrixTolerance);

/// theta2 making the rapidity Yang-Baxter relation hold:
///   tan(theta2) = sin(theta1 + theta3) / cos(theta1 - theta3).
struct Theta2Solution {
  double theta2 = 0.0;
  bool singular = false;    // cos(theta1 - theta3) == 0: theta2 = +-pi/2
  bool degenerate = false;  // numerator also zero: every theta2 works
};
Theta2Solution solve_theta2(double theta1, double theta3);

/// R_k(t1) R_{k+1}(t2) R_k(t3) versus R_{k+1}(t3) R_k(t2) R_{k+1}(t1) with
/// R_k(t) = exp(t c_{k+1} c_k) over jordan_wigner(n).
VerificationReport check_parameterized_ybe(double theta1, double theta2, double theta3, int n,
                                           int k, double tol = 1e-10);

VerificationReport check_tl_relations(const std::vector<CMatrix>& U, double delta,
                                      double tol = kMatrixTolerance);

/// Seven identity families, each recorded as its own witness:
///   A_i^2 = B_i^2 = 1;  A_i B_i = -B_i A_i;  A_i B_{i+1} = -B_{i+1} A_i;
///   A_{i+1} B_i = B_i A_{i+1};  A_i B_j = B_j A_i (|i-j| > 1);
///   A_i A_j = A_j A_i;  B_i B_j = B_j B_i.
VerificationReport check_majorana_string(const MajoranaString& ms, double tol = kMatrixTolerance);

/// M_i^2 = -I, adjacent anticommute, distant (|i-j| >= 2) commute.
VerificationReport check_extraspecial(const std::vector<CMatrix>& M, double tol = kMatrixTolerance);

/// Searches product states (cos a |0> + e^{ip} sin a |1>) (x) (...) on an
/// 8x8x8x8 grid for an output with large |ad - bc|.
///
/// Residual convention: max_residual = 1 - 2 max|ad - bc| (0 for a
/// maximally entangled witness), tolerance = 1 - 2 threshold, so the report
/// passes exactly when some grid output has |ad - bc| >= threshold.
/// metrics["max_determinant"] holds the best value; the best input and
/// output states are in the witness. Throws DomainError for non-unitary G.
VerificationReport check_entangling(const CMatrix& G, double threshold = 1e-6);

/// ad - bc of G (a|0> + b|1>) (x) (a|0> + b|1>).
Complex product_state_determinant(const CMatrix& G, Complex a, Complex b);

/// Smallest m in [1, cap] with g^m = I within tol.
std::optional<int> generator_order(const CMatrix& g, int cap = 16, double tol = kMatrixTolerance);
std::optional<int> generator_order(const UnitaryRep& rep, int k, int cap = 16,
                                   double tol = kMatrixTolerance);

/// Order of every generator up to `cap`. The residual per generator is the
/// closest approach ||g^m - I|| over 1 <= m <= cap, so the report fails when
/// some generator has no finite order within the cap. metrics["order"] is
/// the common order, or -1 when generators differ.
VerificationReport check_generator_order(const UnitaryRep& rep, int cap = 16,
                                         double tol = kMatrixTolerance);

/// The conjugation maps T_k(x) = tau_k x tau_k^{-1} on span{c_0..c_{n-1}}:
/// their action on basis vectors, the signed square (T_k^2 negates c_k and
/// c_{k+1}), T_k^4 = id, and the braid relations among the T_k.
VerificationReport check_conjugation_rep(int n, double tol = 1e-12);

/// T = r + s y x with r = cos theta, s = sin theta on a Majorana triple:
///   T x T^{-1} = (r^2 - s^2) x + 2 r s y,  T y T^{-1} = (r^2 - s^2) y - 2 r s x.
VerificationReport check_triple_conjugation(double theta, double tol = 1e-12);

}  // namespace mbraid
