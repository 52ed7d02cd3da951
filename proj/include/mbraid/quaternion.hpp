#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mbraid/linalg.hpp"

namespace mbraid {

/// q = a + b I + c J + d K with IJ = K, JK = I, KI = J.
struct Quaternion {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }
  static Quaternion pure(const std::array<double, 3>& v) { return {0, v[0], v[1], v[2]}; }

  double length_squared() const { return a * a + b * b + c * c + d * d; }
  double length() const;
  std::array<double, 3> vector() const { return {b, c, d}; }
  bool is_pure(double tol = 1e-12) const;
  bool is_unit(double tol = 1e-12) const;

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(double s);

  friend Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
  friend Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
  friend Quaternion operator*(Quaternion p, double s) { return p *= s; }
  friend Quaternion operator*(double s, Quaternion p) { return p *= s; }
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Componentwise max |p_i - q_i|.
double distance(const Quaternion& p, const Quaternion& q);
std::string to_string(const Quaternion& q);

Quaternion q_mul(const Quaternion& p, const Quaternion& q);
/// Conjugate: negates the imaginary part, so q q^dagger = |q|^2.
Quaternion q_dagger(const Quaternion& q);
/// q^{-1} = q^dagger / |q|^2.
Quaternion q_inverse(const Quaternion& q);
Quaternion q_pow(const Quaternion& q, int exponent);

/// A point on the unit sphere of pure quaternions; squares to -1.
class PureUnit {
 public:
  /// Throws DomainError if (r, s, t) is off the unit sphere by more than tol.
  PureUnit(double r, double s, double t, double tol = 1e-12);
  static PureUnit normalized(const std::array<double, 3>& v);

  std::array<double, 3> vec() const { return {r_, s_, t_}; }
  Quaternion quaternion() const { return {0, r_, s_, t_}; }

 private:
  double r_, s_, t_;
};

double dot(const std::array<double, 3>& u, const std::array<double, 3>& v);
std::array<double, 3> cross(const std::array<double, 3>& u, const std::array<double, 3>& v);

/// a*1 + b*diag(i,-i) + c*[[0,1],[-1,0]] + d*[[0,i],[i,0]].
CMatrix to_su2(const Quaternion& q);

/// g P g^dagger by direct quaternion products. Throws for non-unit g or
/// non-pure P.
Quaternion rotate(const Quaternion& g, const Quaternion& P);

/// Closed Rodrigues form for g = a + b u:
///   (a^2 - b^2) P + 2ab (u x P) + 2 (P.u) b^2 u.
Quaternion rotate_formula(const Quaternion& g, const Quaternion& P);

/// 3x3 real matrix of P -> g P g^dagger, columns are images of I, J, K.
std::array<std::array<double, 3>, 3> rotation_matrix(const Quaternion& g);

/// Outcome of testing g = a + b u, h = a + b v against the braid relation
/// g h g = h g h both numerically and through u.v = (a^2 - b^2) / (2 b^2).
struct BraidConditionReport {
  double braid_residual = 0.0;  // max component of ghg - hgh
  bool braids = false;
  double dot_uv = 0.0;
  std::optional<double> required_dot;  // empty when b == 0
  bool criterion_holds = false;
  bool same_axis = false;              // u == v
  bool defined = true;                 // false for b == 0 with u != v
  bool verdicts_agree = false;
};

BraidConditionReport braid_condition(double a, double b, const PureUnit& u, const PureUnit& v,
                                     double tol = 1e-9);

struct FibonacciGenerators {
  double tau;      // positive root of tau^2 + tau = 1
  Quaternion g;    // e^{7 pi I / 10}
  Quaternion h;    // f g f^{-1}
  Quaternion f;    // I tau + K sqrt(tau)
};

FibonacciGenerators fibonacci_generators();

/// g = e^{I theta} and h = f g f^dagger with f = c I + s K (c^2 + s^2 = 1).
struct ConjugatePair {
  Quaternion g;
  Quaternion h;
  Quaternion f;
  CMatrix G;
  CMatrix H;
  CMatrix F;
};

ConjugatePair conjugate_pair(double theta, double c, double s);
/// Solves c^2 - s^2 = (a^2 - b^2) / (2 b^2) for a = cos theta, b = sin theta
/// so that g, h braid. Empty when the right-hand side lies outside [-1, 1].
std::optional<ConjugatePair> conjugate_pair_for_angle(double theta);

/// Traces of every group element reachable by words of length <= max_length
/// in {g, h, g^-1, h^-1}, thinned so that neighbours differ by more than
/// `separation`. Sorted ascending.
std::vector<double> separated_traces(const Quaternion& g, const Quaternion& h, int max_length,
                                     double separation = 1e-6);

}  // namespace mbraid
