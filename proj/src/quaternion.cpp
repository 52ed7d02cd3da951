#include "mbraid/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace mbraid {

double Quaternion::length() const { return std::sqrt(length_squared()); }

bool Quaternion::is_pure(double tol) const { return std::abs(a) <= tol; }

bool Quaternion::is_unit(double tol) const { return std::abs(length_squared() - 1.0) <= tol; }

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  a += o.a;
  b += o.b;
  c += o.c;
  d += o.d;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  a -= o.a;
  b -= o.b;
  c -= o.c;
  d -= o.d;
  return *this;
}

Quaternion& Quaternion::operator*=(double s) {
  a *= s;
  b *= s;
  c *= s;
  d *= s;
  return *this;
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

double distance(const Quaternion& p, const Quaternion& q) {
  return std::max({std::abs(p.a - q.a), std::abs(p.b - q.b), std::abs(p.c - q.c),
                   std::abs(p.d - q.d)});
}

std::string to_string(const Quaternion& q) {
  std::ostringstream os;
  os << q.a << (q.b < 0 ? " - " : " + ") << std::abs(q.b) << "I" << (q.c < 0 ? " - " : " + ")
     << std::abs(q.c) << "J" << (q.d < 0 ? " - " : " + ") << std::abs(q.d) << "K";
  return os.str();
}

Quaternion q_mul(const Quaternion& p, const Quaternion& q) { return p * q; }

Quaternion q_dagger(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

Quaternion q_inverse(const Quaternion& q) {
  const double n2 = q.length_squared();
  if (n2 == 0.0) throw DomainError("zero quaternion has no inverse");
  return q_dagger(q) * (1.0 / n2);
}

Quaternion q_pow(const Quaternion& q, int exponent) {
  if (exponent < 0) return q_pow(q_inverse(q), -exponent);
  Quaternion out = Quaternion::one();
  for (int i = 0; i < exponent; ++i) out = out * q;
  return out;
}

PureUnit::PureUnit(double r, double s, double t, double tol) : r_(r), s_(s), t_(t) {
  if (std::abs(r * r + s * s + t * t - 1.0) > tol) {
    throw DomainError("pure unit quaternion must satisfy r^2 + s^2 + t^2 = 1");
  }
}

PureUnit PureUnit::normalized(const std::array<double, 3>& v) {
  const double n = std::sqrt(dot(v, v));
  if (n == 0.0) throw DomainError("cannot normalize the zero vector");
  return PureUnit(v[0] / n, v[1] / n, v[2] / n);
}

double dot(const std::array<double, 3>& u, const std::array<double, 3>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

std::array<double, 3> cross(const std::array<double, 3>& u, const std::array<double, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

CMatrix to_su2(const Quaternion& q) {
  CMatrix m(2, 2);
  m << Complex(q.a, q.b), Complex(q.c, q.d), Complex(-q.c, q.d), Complex(q.a, -q.b);
  return m;
}

Quaternion rotate(const Quaternion& g, const Quaternion& P) {
  if (!g.is_unit()) throw DomainError("rotate: g must be a unit quaternion");
  if (!P.is_pure()) throw DomainError("rotate: P must be a pure quaternion");
  Quaternion out = g * P * q_dagger(g);
  out.a = 0.0;
  return out;
}

Quaternion rotate_formula(const Quaternion& g, const Quaternion& P) {
  if (!g.is_unit()) throw DomainError("rotate_formula: g must be a unit quaternion");
  const auto w = g.vector();
  const double b = std::sqrt(dot(w, w));
  const auto p = P.vector();
  if (b == 0.0) return Quaternion::pure(p);
  const std::array<double, 3> u{w[0] / b, w[1] / b, w[2] / b};
  const double a = g.a;
  const auto uxp = cross(u, p);
  const double pu = dot(p, u);
  Quaternion out;
  for (int i = 0; i < 3; ++i) {
    const double v = (a * a - b * b) * p[i] + 2 * a * b * uxp[i] + 2 * pu * b * b * u[i];
    if (i == 0) out.b = v;
    if (i == 1) out.c = v;
    if (i == 2) out.d = v;
  }
  return out;
}

std::array<std::array<double, 3>, 3> rotation_matrix(const Quaternion& g) {
  std::array<std::array<double, 3>, 3> m{};
  const Quaternion basis[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
  for (int col = 0; col < 3; ++col) {
    const auto image = rotate(g, basis[col]).vector();
    for (int row = 0; row < 3; ++row) m[row][col] = image[row];
  }
  return m;
}

BraidConditionReport braid_condition(double a, double b, const PureUnit& u, const PureUnit& v,
                                     double tol) {
  if (std::abs(a * a + b * b - 1.0) > 1e-9) {
    throw DomainError("braid_condition: a^2 + b^2 must equal 1");
  }
  const Quaternion g = Quaternion::one() * a + u.quaternion() * b;
  const Quaternion h = Quaternion::one() * a + v.quaternion() * b;

  BraidConditionReport r;
  r.braid_residual = distance(g * h * g, h * g * h);
  r.braids = r.braid_residual <= tol;
  r.dot_uv = dot(u.vec(), v.vec());
  const auto uv = u.vec();
  const auto vv = v.vec();
  r.same_axis = std::max({std::abs(uv[0] - vv[0]), std::abs(uv[1] - vv[1]),
                          std::abs(uv[2] - vv[2])}) <= 1e-12;
  if (r.same_axis) {
    r.criterion_holds = true;
    r.verdicts_agree = r.braids;
    return r;
  }
  if (std::abs(b) < 1e-15) {
    r.defined = false;
    return r;
  }
  r.required_dot = (a * a - b * b) / (2 * b * b);
  r.criterion_holds = std::abs(r.dot_uv - *r.required_dot) <= tol;
  r.verdicts_agree = r.criterion_holds == r.braids;
  return r;
}

FibonacciGenerators fibonacci_generators() {
  const double tau = (std::sqrt(5.0) - 1.0) / 2.0;
  const double angle = 7.0 * std::numbers::pi / 10.0;
  FibonacciGenerators out;
  out.tau = tau;
  out.g = {std::cos(angle), std::sin(angle), 0.0, 0.0};
  out.f = {0.0, tau, 0.0, std::sqrt(tau)};
  out.h = out.f * out.g * q_inverse(out.f);
  return out;
}

ConjugatePair conjugate_pair(double theta, double c, double s) {
  if (std::abs(c * c + s * s - 1.0) > 1e-12) {
    throw DomainError("conjugate_pair: c^2 + s^2 must equal 1");
  }
  ConjugatePair p;
  p.g = {std::cos(theta), std::sin(theta), 0.0, 0.0};
  p.f = {0.0, c, 0.0, s};
  p.h = p.f * p.g * q_dagger(p.f);
  p.G = to_su2(p.g);
  p.F = to_su2(p.f);
  p.H = p.F * p.G * p.F.adjoint();
  return p;
}

std::optional<ConjugatePair> conjugate_pair_for_angle(double theta) {
  const double a = std::cos(theta);
  const double b = std::sin(theta);
  if (std::abs(b) < 1e-12) return std::nullopt;
  const double target = (a * a - b * b) / (2 * b * b);
  if (target < -1.0 || target > 1.0) return std::nullopt;
  // c^2 - s^2 = target with c^2 + s^2 = 1.
  const double c = std::sqrt((1.0 + target) / 2.0);
  const double s = std::sqrt((1.0 - target) / 2.0);
  return conjugate_pair(theta, c, s);
}

std::vector<double> separated_traces(const Quaternion& g, const Quaternion& h, int max_length,
                                     double separation) {
  using Key = std::array<long long, 4>;
  const auto key = [](const Quaternion& q) {
    const auto r = [](double x) { return std::llround(x * 1e9); };
    return Key{r(q.a), r(q.b), r(q.c), r(q.d)};
  };
  const Quaternion letters[4] = {g, h, q_inverse(g), q_inverse(h)};

  std::set<Key> seen{key(Quaternion::one())};
  std::vector<Quaternion> frontier{Quaternion::one()};
  std::vector<double> traces{to_su2(Quaternion::one()).trace().real()};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Quaternion> next;
    for (const auto& w : frontier) {
      for (const auto& x : letters) {
        const Quaternion p = w * x;
        if (seen.insert(key(p)).second) {
          next.push_back(p);
          traces.push_back(to_su2(p).trace().real());
        }
      }
    }
    frontier = std::move(next);
  }

  std::sort(traces.begin(), traces.end());
  std::vector<double> kept;
  for (double t : traces) {
    if (kept.empty() || t - kept.back() > separation) kept.push_back(t);
  }
  return kept;
}

}  // namespace mbraid
