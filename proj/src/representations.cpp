#include "mbraid/representations.hpp"

#include <cmath>
#include <numbers>

#include "mbraid/verifiers.hpp"

namespace mbraid {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

CMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  CMatrix m(static_cast<Eigen::Index>(rows.size()),
            static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

void validate(const UnitaryRep& rep, double tol) {
  const int expected = rep.circular ? rep.strands : rep.strands - 1;
  if (rep.size() != expected) {
    throw DomainError(rep.family + ": expected " + std::to_string(expected) +
                      " generators, found " + std::to_string(rep.size()));
  }
  for (int k = 0; k < rep.size(); ++k) {
    const CMatrix& g = rep.generators[k];
    if (g.rows() != rep.dim || g.cols() != rep.dim) {
      throw DomainError(rep.family + ": generator " + std::to_string(k) + " has wrong shape");
    }
    if (!is_unitary(g, tol)) {
      throw DomainError(rep.family + ": generator " + std::to_string(k) + " is not unitary");
    }
  }
}

UnitaryRep ivanov(int n, bool circular) {
  if (n < 3) throw std::invalid_argument("ivanov needs at least 3 Majoranas, got " + std::to_string(n));
  const auto basis = jordan_wigner(n);
  UnitaryRep rep;
  rep.family = circular ? "ivanov-circular" : "ivanov";
  rep.strands = n;
  rep.dim = basis.dim();
  rep.circular = circular;
  std::vector<CliffordElement> forms;
  const int count = circular ? n : n - 1;
  for (int k = 0; k < count; ++k) {
    forms.push_back(braid_element(n, k));
    rep.generators.push_back(realize(forms.back(), basis));
  }
  rep.clifford_forms = std::move(forms);
  validate(rep);
  return rep;
}

namespace bell {
CMatrix A() { return from_rows({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}); }
CMatrix B() { return from_rows({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}); }
CMatrix M() { return A() * B(); }
CMatrix B_II() { return (identity(4) + M()) * kInvSqrt2; }
}  // namespace bell

MajoranaString bell_basis_string(int n) {
  if (n < 2) throw std::invalid_argument("bell_basis_string needs n >= 2");
  if (n > 6) throw DimensionError("bell_basis_string(" + std::to_string(n) + ") needs 2^" +
                                  std::to_string(n + 1) + " dimensions (max n = 6)");
  MajoranaString ms;
  for (int i = 0; i < n; ++i) {
    ms.A.push_back(embed(bell::A(), i, n + 1));
    ms.B.push_back(embed(bell::B(), i, n + 1));
  }
  return ms;
}

UnitaryRep extraspecial_rep(const MajoranaString& ms, double tol) {
  if (ms.A.size() != ms.B.size() || ms.A.empty()) {
    throw DomainError("Majorana string needs equally many A and B operators");
  }
  const auto report = check_majorana_string(ms, tol);
  if (!report.pass) {
    throw DomainError("input is not a Majorana string (residual " +
                      std::to_string(report.max_residual) + ")");
  }
  UnitaryRep rep;
  rep.family = "extraspecial-bell";
  rep.strands = ms.size() + 1;
  rep.dim = static_cast<int>(ms.A.front().rows());
  const CMatrix id = identity(rep.dim);
  for (int i = 0; i < ms.size(); ++i) {
    rep.generators.push_back((id + ms.A[i] * ms.B[i]) * kInvSqrt2);
  }
  validate(rep);
  return rep;
}

TemperleyLieb temperley_lieb(int n) {
  if (n < 3) throw std::invalid_argument("temperley_lieb needs at least 3 Majoranas");
  const auto basis = jordan_wigner(n);
  const Complex i{0.0, 1.0};
  TemperleyLieb tl;
  tl.n_majoranas = n;
  tl.loop_value = std::numbers::sqrt2;
  for (int k = 0; k + 1 < n; ++k) {
    const auto pair = generator(n, k + 1) * generator(n, k);
    tl.clifford_forms.push_back((CliffordElement::scalar(n, 1.0) + i * pair) * kInvSqrt2);
    tl.generators.push_back(realize(tl.clifford_forms.back(), basis));
  }
  return tl;
}

Complex jones_default_A() { return std::polar(1.0, 3.0 * std::numbers::pi / 8.0); }

UnitaryRep jones_from_tl(const TemperleyLieb& tl, Complex A, double tol) {
  const Complex constraint = -A * A - 1.0 / (A * A);
  if (std::abs(constraint - tl.loop_value) > tol) {
    throw DomainError("Jones lift needs -A^2 - A^-2 = loop value; got residual " +
                      std::to_string(std::abs(constraint - tl.loop_value)));
  }
  UnitaryRep rep;
  rep.family = "jones";
  rep.strands = tl.n_majoranas;
  rep.dim = tl.generators.empty() ? 0 : static_cast<int>(tl.generators.front().rows());
  const CMatrix id = identity(rep.dim);
  std::vector<CliffordElement> forms;
  for (std::size_t k = 0; k < tl.generators.size(); ++k) {
    rep.generators.push_back(A * tl.generators[k] + (1.0 / A) * id);
    forms.push_back(A * tl.clifford_forms[k] +
                    CliffordElement::scalar(tl.n_majoranas, 1.0 / A));
  }
  rep.clifford_forms = std::move(forms);
  validate(rep);
  return rep;
}

std::vector<CMatrix> binomial_braid_generators(Complex x, Complex y, int n) {
  const auto basis = jordan_wigner(n);
  const CMatrix id = identity(basis.dim());
  std::vector<CMatrix> out;
  for (int k = 0; k + 1 < n; ++k) out.push_back(x * id + y * (basis[k + 1] * basis[k]));
  return out;
}

QuaternionUnits quaternion_units(const CliffordElement& x, const CliffordElement& y,
                                 const CliffordElement& z) {
  return {y * x, z * y, x * z};
}

UnitaryRep quaternion_triple() {
  UnitaryRep rep;
  rep.family = "quaternion-triple";
  rep.strands = 3;
  rep.dim = 2;
  rep.circular = true;
  for (const auto& u : {Quaternion::i(), Quaternion::j(), Quaternion::k()}) {
    rep.generators.push_back(to_su2((Quaternion::one() + u) * kInvSqrt2));
  }
  validate(rep);
  return rep;
}

UnitaryRep fibonacci() {
  const auto fib = fibonacci_generators();
  UnitaryRep rep;
  rep.family = "fibonacci";
  rep.strands = 3;
  rep.dim = 2;
  rep.generators = {to_su2(fib.g), to_su2(fib.h)};
  validate(rep);
  return rep;
}

CMatrix evaluate_word(const UnitaryRep& rep, const BraidWord& word) {
  CMatrix out = identity(rep.dim);
  for (const auto& [index, exponent] : word) {
    if (index < 0 || index >= rep.size()) {
      throw std::out_of_range("braid letter " + std::to_string(index) + " outside " +
                              std::to_string(rep.size()) + " generators");
    }
    if (exponent == 1) {
      out = out * rep.generators[index];
    } else if (exponent == -1) {
      out = out * rep.generators[index].adjoint();
    } else {
      throw std::invalid_argument("braid letter exponent must be +1 or -1");
    }
  }
  return out;
}

}  // namespace mbraid
