#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mbraid/clifford.hpp"
#include "mbraid/linalg.hpp"
#include "mbraid/quaternion.hpp"

namespace mbraid {

/// A unitary braid-group representation given by its generator matrices.
///
/// Non-circular families have strands - 1 generators, generator k braiding
/// strands k and k+1. Circular families have `strands` generators and
/// adjacency wraps around (generator strands-1 is adjacent to generator 0).
struct UnitaryRep {
  std::string family;
  int strands = 0;
  int dim = 0;
  std::vector<CMatrix> generators;
  std::optional<std::vector<CliffordElement>> clifford_forms;
  bool circular = false;

  int size() const { return static_cast<int>(generators.size()); }
};

/// Checks the UnitaryRep invariants; throws DomainError on violation.
void validate(const UnitaryRep& rep, double tol = kMatrixTolerance);

/// tau_k = (1 + c_{k+1} c_k) / sqrt(2) over jordan_wigner(n), k = 0..n-2,
/// plus tau_{n-1} = (1 + c_0 c_{n-1}) / sqrt(2) when circular.
UnitaryRep ivanov(int n, bool circular = false);

/// Paired operators (A_i, B_i) forming a Majorana string.
struct MajoranaString {
  std::vector<CMatrix> A;
  std::vector<CMatrix> B;

  int size() const { return static_cast<int>(A.size()); }
};

namespace bell {
/// diag(1, -1, 1, -1).
CMatrix A();
/// The 4x4 anti-diagonal permutation.
CMatrix B();
/// M = A B, squares to -I.
CMatrix M();
/// B_II = (I + M) / sqrt(2).
CMatrix B_II();
}  // namespace bell

/// A_i, B_i = the 4x4 A, B placed on qubit factors i, i+1 of n+1 qubits,
/// i = 0..n-1. Dimension 2^(n+1); requires 2 <= n <= 6.
MajoranaString bell_basis_string(int n);

/// sigma_i = (I + A_i B_i) / sqrt(2) for every pair of the string.
/// Throws DomainError if the string fails its identities.
UnitaryRep extraspecial_rep(const MajoranaString& ms, double tol = kMatrixTolerance);

/// Temperley-Lieb generators U_k = (1 + i c_{k+1} c_k) / sqrt(2).
struct TemperleyLieb {
  int n_majoranas = 0;
  double loop_value = 0.0;
  std::vector<CMatrix> generators;
  std::vector<CliffordElement> clifford_forms;
};

TemperleyLieb temperley_lieb(int n);

/// The Jones lift sigma_k = A U_k + A^{-1} 1. Throws DomainError when
/// -A^2 - A^{-2} differs from the loop value by more than `tol`.
UnitaryRep jones_from_tl(const TemperleyLieb& tl, Complex A, double tol = 1e-10);

/// A = e^{3 pi i / 8}, which satisfies -A^2 - A^{-2} = sqrt(2).
Complex jones_default_A();

/// x 1 + y c_{k+1} c_k for k = 0..n-2 (not unitary in general).
std::vector<CMatrix> binomial_braid_generators(Complex x, Complex y, int n);

/// I = y x, J = z y, K = x z for a Majorana triple x, y, z.
struct QuaternionUnits {
  CliffordElement I;
  CliffordElement J;
  CliffordElement K;
};
QuaternionUnits quaternion_units(const CliffordElement& x, const CliffordElement& y,
                                 const CliffordElement& z);

/// X = (1 + I)/sqrt(2), Y = (1 + J)/sqrt(2), Z = (1 + K)/sqrt(2) in SU(2).
UnitaryRep quaternion_triple();

/// The Fibonacci representation of B_3 in SU(2).
UnitaryRep fibonacci();

struct BraidLetter {
  int index;
  int exponent;  // +1 or -1
};
using BraidWord = std::vector<BraidLetter>;

/// Ordered product of generators (inverse = adjoint).
CMatrix evaluate_word(const UnitaryRep& rep, const BraidWord& word);

}  // namespace mbraid
