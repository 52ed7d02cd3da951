#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "mbraid/clifford.hpp"

namespace mbraid {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Default comparison tolerance for matrix identities (Frobenius norm).
inline constexpr double kMatrixTolerance = 1e-10;

/// Jordan-Wigner realization caps at this many qubits (4096 x 4096).
inline constexpr int kMaxQubits = 12;

CMatrix identity(int dim);
CMatrix tensor(const CMatrix& a, const CMatrix& b);
CMatrix tensor(const std::vector<CMatrix>& factors);
CMatrix multiply(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
CMatrix matrix_power(const CMatrix& a, int exponent);

/// I^{(x) position} (x) op (x) I^{(x) rest}. `op` must be 2^k square and
/// occupies qubit factors position .. position+k-1 out of `total_qubits`.
CMatrix embed(const CMatrix& op, int position, int total_qubits);

double frobenius_distance(const CMatrix& a, const CMatrix& b);
bool is_unitary(const CMatrix& u, double tol = kMatrixTolerance);
bool is_hermitian(const CMatrix& h, double tol = kMatrixTolerance);
double unitarity_residual(const CMatrix& u);
double hermiticity_residual(const CMatrix& h);
/// ||AB - BA||_F.
double commutator_norm(const CMatrix& a, const CMatrix& b);
/// ||AB + BA||_F.
double anticommutator_norm(const CMatrix& a, const CMatrix& b);

namespace pauli {
CMatrix I();
CMatrix X();
CMatrix Y();
CMatrix Z();
}  // namespace pauli

/// Concrete Majorana operators on ceil(n/2) qubits:
///   c_{2j}   = Z^{(x) j} (x) X (x) I^{(x) (m-j-1)}
///   c_{2j+1} = Z^{(x) j} (x) Y (x) I^{(x) (m-j-1)}
/// Each matrix is Hermitian, unitary, squares to I, and distinct ones
/// anticommute. Odd n exposes the first n operators of ceil(n/2) qubits.
struct JordanWignerBasis {
  int n_majoranas = 0;
  int qubits = 0;
  std::vector<CMatrix> matrices;

  int dim() const { return 1 << qubits; }
  const CMatrix& operator[](int k) const { return matrices.at(k); }
};

JordanWignerBasis jordan_wigner(int n);

/// Matrix of a sparse Clifford element under the basis: each blade maps to
/// the ordered product of its generator matrices.
CMatrix realize(const CliffordElement& x, const JordanWignerBasis& basis);

/// exp(theta * B) = cos(theta) I + sin(theta) B, valid when B^2 = -I.
/// Throws DomainError otherwise.
CMatrix exp_blade(double theta, const CMatrix& B, double tol = kMatrixTolerance);

/// Ascending real eigenvalues of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const CMatrix& h, double tol = kMatrixTolerance);

/// exp(-i H t) through the eigendecomposition of a Hermitian H.
CMatrix evolve_hermitian(const CMatrix& h, double t);

}  // namespace mbraid
