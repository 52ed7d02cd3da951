#include "mbraid/verifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace mbraid {

namespace {

std::string gen(int i) { return "s" + std::to_string(i); }

int generator_distance(int i, int j, int count, bool circular) {
  const int d = std::abs(i - j);
  return circular ? std::min(d, count - d) : d;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

void VerificationReport::record(std::string relation, double residual, std::vector<Complex> state) {
  max_residual = std::max(max_residual, residual);
  witnesses.push_back({std::move(relation), residual, std::move(state)});
}

VerificationReport& VerificationReport::finish() {
  pass = max_residual <= tolerance;
  return *this;
}

VerificationReport check_braid_relations(const std::vector<CMatrix>& g, bool circular, double tol,
                                         const std::string& family) {
  VerificationReport r;
  r.check = "braid";
  r.family = family;
  r.tolerance = tol;
  r.params["generators"] = static_cast<double>(g.size());
  r.params["circular"] = circular ? 1.0 : 0.0;
  const int m = static_cast<int>(g.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (generator_distance(i, j, m, circular) == 1) {
        r.record(gen(i) + " " + gen(j) + " " + gen(i) + " = " + gen(j) + " " + gen(i) + " " + gen(j),
                 (g[i] * g[j] * g[i] - g[j] * g[i] * g[j]).norm());
      } else {
        r.record(gen(i) + " " + gen(j) + " = " + gen(j) + " " + gen(i), commutator_norm(g[i], g[j]));
      }
    }
  }
  if (m < 2) r.notes.push_back("fewer than two generators: no relations to check");
  return r.finish();
}

VerificationReport check_braid_relations(const UnitaryRep& rep, double tol) {
  auto r = check_braid_relations(rep.generators, rep.circular, tol, rep.family);
  r.params["strands"] = rep.strands;
  r.params["dim"] = rep.dim;
  return r;
}

VerificationReport check_unitarity(const UnitaryRep& rep, double tol) {
  VerificationReport r;
  r.check = "unitary";
  r.family = rep.family;
  r.tolerance = tol;
  for (int k = 0; k < rep.size(); ++k) {
    r.record(gen(k) + "^dagger " + gen(k) + " = I", unitarity_residual(rep.generators[k]));
  }
  return r.finish();
}

VerificationReport check_ybe(const CMatrix& R, double tol) {
  if (R.rows() != R.cols()) throw std::invalid_argument("check_ybe: R must be square");
  const auto d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(R.rows()))));
  if (d * d != R.rows() || d < 1) {
    throw std::invalid_argument("check_ybe: dimension " + std::to_string(R.rows()) +
                                " is not a perfect square");
  }
  const CMatrix id = identity(d);
  const CMatrix r1 = tensor(R, id);
  const CMatrix r2 = tensor(id, R);
  VerificationReport r;
  r.check = "ybe";
  r.family = "matrix";
  r.tolerance = tol;
  r.params["local_dim"] = d;
  r.record("(R x I)(I x R)(R x I) = (I x R)(R x I)(I x R)", (r1 * r2 * r1 - r2 * r1 * r2).norm());
  return r.finish();
}

Theta2Solution solve_theta2(double theta1, double theta3) {
  const double num = std::sin(theta1 + theta3);
  const double den = std::cos(theta1 - theta3);
  Theta2Solution s;
  s.singular = std::abs(den) < 1e-12;
  s.degenerate = s.singular && std::abs(num) < 1e-12;
  s.theta2 = s.degenerate ? 0.0 : std::atan2(num, den);
  return s;
}

VerificationReport check_parameterized_ybe(double theta1, double theta2, double theta3, int n,
                                           int k, double tol) {
  if (k < 0 || k + 2 >= n) {
    throw std::out_of_range("check_parameterized_ybe: need Majoranas k, k+1, k+2 below n");
  }
  const auto basis = jordan_wigner(n);
  const CMatrix a = basis[k + 1] * basis[k];
  const CMatrix b = basis[k + 2] * basis[k + 1];
  const auto Ra = [&](double t) { return exp_blade(t, a); };
  const auto Rb = [&](double t) { return exp_blade(t, b); };
  VerificationReport r;
  r.check = "parameterized-ybe";
  r.family = "r-breve";
  r.tolerance = tol;
  r.params = {{"theta1", theta1}, {"theta2", theta2}, {"theta3", theta3}, {"n", n}, {"k", k}};
  r.record("R_k(t1) R_k+1(t2) R_k(t3) = R_k+1(t3) R_k(t2) R_k+1(t1)",
           (Ra(theta1) * Rb(theta2) * Ra(theta3) - Rb(theta3) * Ra(theta2) * Rb(theta1)).norm());
  return r.finish();
}

VerificationReport check_tl_relations(const std::vector<CMatrix>& U, double delta, double tol) {
  VerificationReport r;
  r.check = "temperley-lieb";
  r.family = "temperley-lieb";
  r.tolerance = tol;
  r.params["delta"] = delta;
  const int m = static_cast<int>(U.size());
  for (int i = 0; i < m; ++i) {
    r.record("U" + std::to_string(i) + "^2 = delta U" + std::to_string(i),
             (U[i] * U[i] - delta * U[i]).norm());
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const std::string ui = "U" + std::to_string(i), uj = "U" + std::to_string(j);
      if (std::abs(i - j) == 1) {
        r.record(ui + " " + uj + " " + ui + " = " + ui, (U[i] * U[j] * U[i] - U[i]).norm());
      } else if (i < j) {
        r.record(ui + " " + uj + " = " + uj + " " + ui, commutator_norm(U[i], U[j]));
      }
    }
  }
  return r.finish();
}

VerificationReport check_majorana_string(const MajoranaString& ms, double tol) {
  if (ms.A.size() != ms.B.size()) throw std::invalid_argument("Majorana string: |A| != |B|");
  const int n = ms.size();
  const auto& A = ms.A;
  const auto& B = ms.B;
  double fam[7] = {0, 0, 0, 0, 0, 0, 0};
  for (int i = 0; i < n; ++i) {
    const CMatrix id = identity(static_cast<int>(A[i].rows()));
    fam[0] = std::max({fam[0], (A[i] * A[i] - id).norm(), (B[i] * B[i] - id).norm()});
    fam[1] = std::max(fam[1], anticommutator_norm(A[i], B[i]));
    if (i + 1 < n) {
      fam[2] = std::max(fam[2], anticommutator_norm(A[i], B[i + 1]));
      fam[3] = std::max(fam[3], commutator_norm(A[i + 1], B[i]));
    }
    for (int j = 0; j < n; ++j) {
      if (std::abs(i - j) > 1) fam[4] = std::max(fam[4], commutator_norm(A[i], B[j]));
      fam[5] = std::max(fam[5], commutator_norm(A[i], A[j]));
      fam[6] = std::max(fam[6], commutator_norm(B[i], B[j]));
    }
  }
  static const char* names[7] = {
      "A_i^2 = B_i^2 = 1",         "A_i B_i = -B_i A_i",         "A_i B_i+1 = -B_i+1 A_i",
      "A_i+1 B_i = B_i A_i+1",     "A_i B_j = B_j A_i (|i-j|>1)", "A_i A_j = A_j A_i",
      "B_i B_j = B_j B_i"};
  VerificationReport r;
  r.check = "majorana-string";
  r.family = "majorana-string";
  r.tolerance = tol;
  r.params["pairs"] = n;
  for (int f = 0; f < 7; ++f) {
    r.record(names[f], fam[f]);
    r.metrics["family_" + std::to_string(f + 1)] = fam[f];
  }
  return r.finish();
}

VerificationReport check_extraspecial(const std::vector<CMatrix>& M, double tol) {
  VerificationReport r;
  r.check = "extraspecial";
  r.family = "extraspecial";
  r.tolerance = tol;
  r.params["generators"] = static_cast<double>(M.size());
  const int m = static_cast<int>(M.size());
  for (int i = 0; i < m; ++i) {
    const std::string mi = "M" + std::to_string(i);
    r.record(mi + "^2 = -I", (M[i] * M[i] + identity(static_cast<int>(M[i].rows()))).norm());
    for (int j = i + 1; j < m; ++j) {
      const std::string mj = "M" + std::to_string(j);
      if (j == i + 1) {
        r.record(mi + " " + mj + " = -" + mj + " " + mi, anticommutator_norm(M[i], M[j]));
      } else {
        r.record(mi + " " + mj + " = " + mj + " " + mi, commutator_norm(M[i], M[j]));
      }
    }
  }
  return r.finish();
}

Complex product_state_determinant(const CMatrix& G, Complex a, Complex b) {
  if (G.rows() != 4 || G.cols() != 4) throw std::invalid_argument("two-qubit gate must be 4x4");
  CVector phi(2);
  phi << a, b;
  const CVector out = G * tensor(phi, phi);
  return out(0) * out(3) - out(1) * out(2);
}

VerificationReport check_entangling(const CMatrix& G, double threshold) {
  if (G.rows() != 4 || G.cols() != 4) throw std::invalid_argument("two-qubit gate must be 4x4");
  if (!is_unitary(G)) throw DomainError("check_entangling: gate is not unitary");

  constexpr int kGrid = 8;
  const auto qubit = [](double theta, double phase) {
    CVector v(2);
    v << std::cos(theta), std::polar(std::sin(theta), phase);
    return v;
  };
  double best = -1.0;
  double best_params[4] = {0, 0, 0, 0};
  CVector best_out;
  for (int t1 = 0; t1 < kGrid; ++t1) {
    for (int p1 = 0; p1 < kGrid; ++p1) {
      for (int t2 = 0; t2 < kGrid; ++t2) {
        for (int p2 = 0; p2 < kGrid; ++p2) {
          const double th1 = t1 * std::numbers::pi / 16, ph1 = p1 * std::numbers::pi / 4;
          const double th2 = t2 * std::numbers::pi / 16, ph2 = p2 * std::numbers::pi / 4;
          const CVector out = G * tensor(qubit(th1, ph1), qubit(th2, ph2));
          const double det = std::abs(out(0) * out(3) - out(1) * out(2));
          if (det > best + 1e-15) {
            best = det;
            best_out = out;
            best_params[0] = th1;
            best_params[1] = ph1;
            best_params[2] = th2;
            best_params[3] = ph2;
          }
        }
      }
    }
  }
  VerificationReport r;
  r.check = "entangling";
  r.family = "matrix";
  r.params["threshold"] = threshold;
  r.tolerance = 1.0 - 2.0 * threshold;
  r.metrics["max_determinant"] = best;
  r.metrics["witness_theta1"] = best_params[0];
  r.metrics["witness_phi1"] = best_params[1];
  r.metrics["witness_theta2"] = best_params[2];
  r.metrics["witness_phi2"] = best_params[3];
  r.record("|ad - bc| of G(cos " + fmt(best_params[0]) + "|0> + e^{i " + fmt(best_params[1]) +
               "} sin " + fmt(best_params[0]) + "|1>) (x) (cos " + fmt(best_params[2]) +
               "|0> + e^{i " + fmt(best_params[3]) + "} sin " + fmt(best_params[2]) +
               "|1>) = " + fmt(best),
           1.0 - 2.0 * best, {best_out.data(), best_out.data() + best_out.size()});
  r.finish();
  if (!r.pass) r.notes.push_back("no product state on the grid is mapped to an entangled state");
  return r;
}

std::optional<int> generator_order(const CMatrix& g, int cap, double tol) {
  const CMatrix id = identity(static_cast<int>(g.rows()));
  CMatrix p = g;
  for (int m = 1; m <= cap; ++m) {
    if ((p - id).norm() <= tol) return m;
    p = p * g;
  }
  return std::nullopt;
}

std::optional<int> generator_order(const UnitaryRep& rep, int k, int cap, double tol) {
  if (k < 0 || k >= rep.size()) throw std::out_of_range("generator index out of range");
  return generator_order(rep.generators[k], cap, tol);
}

VerificationReport check_generator_order(const UnitaryRep& rep, int cap, double tol) {
  VerificationReport r;
  r.check = "order";
  r.family = rep.family;
  r.tolerance = tol;
  r.params["cap"] = cap;
  std::optional<int> common;
  bool uniform = true;
  for (int k = 0; k < rep.size(); ++k) {
    const CMatrix& g = rep.generators[k];
    const CMatrix id = identity(rep.dim);
    // Closest approach to the identity among powers 1..cap.
    double best = std::numeric_limits<double>::infinity();
    int best_m = 0;
    CMatrix p = g;
    for (int m = 1; m <= cap; ++m) {
      const double res = (p - id).norm();
      if (res <= tol) {
        best = res;
        best_m = m;
        break;
      }
      if (res < best) {
        best = res;
        best_m = m;
      }
      p = p * g;
    }
    const bool found = best <= tol;
    r.record(gen(k) + "^" + std::to_string(best_m) + " = I", best);
    r.metrics["order_" + std::to_string(k)] = found ? best_m : -1;
    if (!found) {
      uniform = false;
    } else if (!common) {
      common = best_m;
    } else if (*common != best_m) {
      uniform = false;
    }
  }
  r.metrics["order"] = (uniform && common) ? *common : -1;
  r.finish();
  if (!r.pass) r.notes.push_back("some generator has order exceeding " + std::to_string(cap));
  return r;
}

VerificationReport check_conjugation_rep(int n, double tol) {
  if (n < 3) throw std::invalid_argument("check_conjugation_rep needs n >= 3");
  VerificationReport r;
  r.check = "conjugation";
  r.family = "ivanov";
  r.tolerance = tol;
  r.params["n"] = n;

  std::vector<Eigen::MatrixXd> T;
  for (int k = 0; k + 1 < n; ++k) {
    const auto tau = braid_element(n, k);
    const auto tau_inv = invert_binomial(tau);
    const std::string tk = "T" + std::to_string(k);
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
      const auto image = conjugate_action(tau, tau_inv, generator(n, j));
      CliffordElement expected = generator(n, j);
      if (j == k) expected = generator(n, k + 1);
      if (j == k + 1) expected = -generator(n, k);
      r.record(tk + "(c" + std::to_string(j) + ") = " + expected.to_string(),
               distance(image, expected));
      // Column j: coordinates of the image on the span; anything outside it
      // is already counted in the residual above.
      for (int i = 0; i < n; ++i) mat(i, j) = image.coefficient(Blade::from_mask(std::uint64_t{1} << i)).real();
    }
    Eigen::MatrixXd signed_square = Eigen::MatrixXd::Identity(n, n);
    signed_square(k, k) = -1;
    signed_square(k + 1, k + 1) = -1;
    r.record(tk + "^2 = diag(.., -1 at c" + std::to_string(k) + ", c" + std::to_string(k + 1) + ", ..)",
             (mat * mat - signed_square).norm());
    r.record(tk + "^4 = id", (mat * mat * mat * mat - Eigen::MatrixXd::Identity(n, n)).norm());
    T.push_back(std::move(mat));
  }
  const int m = static_cast<int>(T.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const std::string ti = "T" + std::to_string(i), tj = "T" + std::to_string(j);
      if (j == i + 1) {
        r.record(ti + " " + tj + " " + ti + " = " + tj + " " + ti + " " + tj,
                 (T[i] * T[j] * T[i] - T[j] * T[i] * T[j]).norm());
      } else {
        r.record(ti + " " + tj + " = " + tj + " " + ti, (T[i] * T[j] - T[j] * T[i]).norm());
      }
    }
  }
  r.metrics["order_on_span"] = 4;
  r.notes.push_back(
      "T_k has order 4 on span{c_j}: T_k^2 negates c_k and c_k+1, so it is of order two "
      "only up to sign");
  return r.finish();
}

VerificationReport check_triple_conjugation(double theta, double tol) {
  constexpr int n = 3;
  const double rr = std::cos(theta), s = std::sin(theta);
  const auto x = generator(n, 0);
  const auto y = generator(n, 1);
  const auto one = CliffordElement::scalar(n, 1.0);
  const auto T = one * rr + y * x * s;
  const auto T_inv = invert_binomial(T);
  VerificationReport r;
  r.check = "triple-conjugation";
  r.family = "quaternion-triple";
  r.tolerance = tol;
  r.params = {{"theta", theta}, {"r", rr}, {"s", s}};
  r.record("T^-1 = r - s y x", distance(T_inv, one * rr - y * x * s));
  r.record("T x T^-1 = (r^2 - s^2) x + 2 r s y",
           distance(conjugate_action(T, T_inv, x), x * (rr * rr - s * s) + y * (2 * rr * s)));
  r.record("T y T^-1 = (r^2 - s^2) y - 2 r s x",
           distance(conjugate_action(T, T_inv, y), y * (rr * rr - s * s) - x * (2 * rr * s)));
  return r.finish();
}

}  // namespace mbraid
