#include "mbraid/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <string>

namespace mbraid {

namespace {

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix is not square (" +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
  }
}

}  // namespace

CMatrix identity(int dim) {
  if (dim < 1) throw std::invalid_argument("identity dimension must be positive");
  return CMatrix::Identity(dim, dim);
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix tensor(const std::vector<CMatrix>& factors) {
  if (factors.empty()) return identity(1);
  CMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
  return out;
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("multiply: inner dimensions differ (" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + ")");
  }
  return a * b;
}

CMatrix adjoint(const CMatrix& a) { return a.adjoint(); }

CMatrix matrix_power(const CMatrix& a, int exponent) {
  require_square(a, "matrix_power");
  if (exponent < 0) return matrix_power(a.adjoint(), -exponent);
  CMatrix result = identity(static_cast<int>(a.rows()));
  CMatrix base = a;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

CMatrix embed(const CMatrix& op, int position, int total_qubits) {
  require_square(op, "embed");
  const auto d = static_cast<unsigned long>(op.rows());
  if (!std::has_single_bit(d)) throw std::invalid_argument("embed: operator dimension is not 2^k");
  const int k = std::countr_zero(d);
  if (position < 0 || position + k > total_qubits) {
    throw std::out_of_range("embed: operator on qubits [" + std::to_string(position) + ", " +
                            std::to_string(position + k) + ") outside " +
                            std::to_string(total_qubits) + " factors");
  }
  if (total_qubits > kMaxQubits) {
    throw DimensionError(std::to_string(total_qubits) + " qubits exceeds " +
                         std::to_string(kMaxQubits));
  }
  CMatrix out = tensor(identity(1 << position), op);
  return tensor(out, identity(1 << (total_qubits - position - k)));
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("frobenius_distance: shape mismatch");
  }
  return (a - b).norm();
}

double unitarity_residual(const CMatrix& u) {
  require_square(u, "unitarity_residual");
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).norm();
}

double hermiticity_residual(const CMatrix& h) {
  require_square(h, "hermiticity_residual");
  return (h - h.adjoint()).norm();
}

bool is_unitary(const CMatrix& u, double tol) {
  return u.rows() == u.cols() && unitarity_residual(u) <= tol;
}

bool is_hermitian(const CMatrix& h, double tol) {
  return h.rows() == h.cols() && hermiticity_residual(h) <= tol;
}

double commutator_norm(const CMatrix& a, const CMatrix& b) { return (a * b - b * a).norm(); }

double anticommutator_norm(const CMatrix& a, const CMatrix& b) { return (a * b + b * a).norm(); }

namespace pauli {
CMatrix I() { return CMatrix::Identity(2, 2); }
CMatrix X() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
CMatrix Y() {
  const Complex i{0.0, 1.0};
  CMatrix m(2, 2);
  m << 0, -i, i, 0;
  return m;
}
CMatrix Z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

JordanWignerBasis jordan_wigner(int n) {
  if (n < 1) throw std::invalid_argument("jordan_wigner needs at least one Majorana");
  const int m = (n + 1) / 2;
  if (m > kMaxQubits) {
    throw DimensionError(std::to_string(n) + " Majoranas need " + std::to_string(m) +
                         " qubits (max " + std::to_string(kMaxQubits) + ")");
  }
  JordanWignerBasis basis;
  basis.n_majoranas = n;
  basis.qubits = m;
  basis.matrices.reserve(n);
  for (int j = 0; j < m; ++j) {
    for (const CMatrix& p : {pauli::X(), pauli::Y()}) {
      if (static_cast<int>(basis.matrices.size()) == n) break;
      std::vector<CMatrix> factors(j, pauli::Z());
      factors.push_back(p);
      factors.insert(factors.end(), m - j - 1, pauli::I());
      basis.matrices.push_back(tensor(factors));
    }
  }
  return basis;
}

CMatrix realize(const CliffordElement& x, const JordanWignerBasis& basis) {
  if (x.num_generators() > basis.n_majoranas) {
    throw std::invalid_argument("realize: element uses " + std::to_string(x.num_generators()) +
                                " generators, basis has " + std::to_string(basis.n_majoranas));
  }
  CMatrix out = CMatrix::Zero(basis.dim(), basis.dim());
  for (const auto& [blade, c] : x.terms()) {
    CMatrix term = identity(basis.dim());
    for (int k : blade.indices()) term = term * basis[k];
    out += c * term;
  }
  return out;
}

CMatrix exp_blade(double theta, const CMatrix& B, double tol) {
  require_square(B, "exp_blade");
  const CMatrix id = identity(static_cast<int>(B.rows()));
  const double err = (B * B + id).norm();
  if (err > tol) {
    throw DomainError("exp_blade: argument does not square to -I (residual " +
                      std::to_string(err) + ")");
  }
  return std::cos(theta) * id + std::sin(theta) * B;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& h, double tol) {
  require_square(h, "hermitian_eigenvalues");
  const double err = hermiticity_residual(h);
  if (err > tol) {
    throw DomainError("hermitian_eigenvalues: matrix is not Hermitian (residual " +
                      std::to_string(err) + ")");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

CMatrix evolve_hermitian(const CMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  const Complex i{0.0, 1.0};
  const Eigen::VectorXcd phases =
      (-i * t * solver.eigenvalues().cast<Complex>()).array().exp().matrix();
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace mbraid
