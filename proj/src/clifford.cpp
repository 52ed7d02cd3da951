#include "mbraid/clifford.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace mbraid {

namespace {

void require_same_algebra(const CliffordElement& a, const CliffordElement& b) {
  if (a.num_generators() != b.num_generators()) {
    throw std::invalid_argument("Clifford elements over different generator counts (" +
                                std::to_string(a.num_generators()) + " vs " +
                                std::to_string(b.num_generators()) + ")");
  }
}

}  // namespace

Blade Blade::from_indices(const std::vector<int>& ascending) {
  std::uint64_t mask = 0;
  int prev = -1;
  for (int i : ascending) {
    if (i <= prev) throw std::invalid_argument("blade indices must be strictly ascending");
    if (i >= kMaxGenerators) throw std::out_of_range("blade index exceeds 63");
    mask |= std::uint64_t{1} << i;
    prev = i;
  }
  return Blade(mask);
}

int Blade::grade() const { return std::popcount(mask_); }

int Blade::span() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

int Blade::square_sign() const {
  // B B = reverse-sort of g(g-1)/2 transpositions, squares collapse to 1.
  const int g = grade();
  return ((g * (g - 1) / 2) % 2 == 0) ? 1 : -1;
}

int Blade::reverse_sign() const { return square_sign(); }

std::pair<int, Blade> blade_product(Blade a, Blade b) {
  // Each index j of b moves left past every index of a that exceeds it.
  int swaps = 0;
  for (std::uint64_t m = b.mask(); m != 0; m &= m - 1) {
    const int j = std::countr_zero(m);
    const std::uint64_t above = (j >= 63) ? 0 : (a.mask() >> (j + 1));
    swaps += std::popcount(above);
  }
  return {(swaps % 2 == 0) ? 1 : -1, Blade::from_mask(a.mask() ^ b.mask())};
}

std::string to_string(Blade b) {
  if (b.is_scalar()) return "1";
  std::string s;
  for (int i : b.indices()) {
    if (!s.empty()) s += "*";
    s += "c" + std::to_string(i);
  }
  return s;
}

CliffordElement::CliffordElement(int num_generators) : n_(num_generators) {
  if (n_ < 1 || n_ > kMaxGenerators) {
    throw std::invalid_argument("generator count must be in [1, 64], got " +
                                std::to_string(n_));
  }
}

CliffordElement::CliffordElement(int num_generators, Terms terms)
    : CliffordElement(num_generators) {
  for (const auto& [b, c] : terms) {
    if (b.span() > n_) throw std::out_of_range("blade " + mbraid::to_string(b) +
                                               " outside algebra of " +
                                               std::to_string(n_) + " generators");
  }
  terms_ = std::move(terms);
  prune();
}

CliffordElement CliffordElement::scalar(int num_generators, Complex value) {
  return CliffordElement(num_generators, {{Blade{}, value}});
}

CliffordElement CliffordElement::blade(int num_generators, Blade b, Complex coeff) {
  return CliffordElement(num_generators, {{b, coeff}});
}

Complex CliffordElement::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Complex{} : it->second;
}

void CliffordElement::prune() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kPruneTolerance; });
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& other) {
  require_same_algebra(*this, other);
  for (const auto& [b, c] : other.terms_) terms_[b] += c;
  prune();
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& other) {
  require_same_algebra(*this, other);
  for (const auto& [b, c] : other.terms_) terms_[b] -= c;
  prune();
  return *this;
}

CliffordElement& CliffordElement::operator*=(Complex s) {
  for (auto& [b, c] : terms_) c *= s;
  prune();
  return *this;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  require_same_algebra(a, b);
  CliffordElement::Terms out;
  for (const auto& [ba, ca] : a.terms_) {
    for (const auto& [bb, cb] : b.terms_) {
      const auto [sign, blade] = blade_product(ba, bb);
      out[blade] += static_cast<double>(sign) * ca * cb;
    }
  }
  CliffordElement result(a.n_);
  result.terms_ = std::move(out);
  result.prune();
  return result;
}

double distance(const CliffordElement& a, const CliffordElement& b) {
  require_same_algebra(a, b);
  double worst = 0.0;
  for (const auto& [blade, c] : a.terms_) worst = std::max(worst, std::abs(c - b.coefficient(blade)));
  for (const auto& [blade, c] : b.terms_) {
    if (!a.terms_.contains(blade)) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real();
    if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
    os << ")";
    if (!b.is_scalar()) os << "*" << mbraid::to_string(b);
  }
  return os.str();
}

CliffordElement generator(int n, int k) {
  if (k < 0 || k >= n) {
    throw std::out_of_range("generator index " + std::to_string(k) + " outside [0, " +
                            std::to_string(n) + ")");
  }
  return CliffordElement::blade(n, Blade::from_mask(std::uint64_t{1} << k));
}

CliffordElement multiply(const CliffordElement& a, const CliffordElement& b) { return a * b; }
CliffordElement add(const CliffordElement& a, const CliffordElement& b) { return a + b; }
CliffordElement scale(const CliffordElement& a, Complex s) { return a * s; }

CliffordElement dagger(const CliffordElement& a) {
  CliffordElement::Terms out;
  for (const auto& [b, c] : a.terms()) out[b] = static_cast<double>(b.reverse_sign()) * std::conj(c);
  return CliffordElement(a.num_generators(), std::move(out));
}

CliffordElement invert_binomial(Complex a, Complex b, Blade B, int n) {
  if (B.is_scalar()) {
    const Complex total = a + b;
    if (std::abs(total) < 1e-14) throw DomainError("binomial is zero; not invertible");
    return CliffordElement::scalar(n, 1.0 / total);
  }
  // (a + bB)(a - bB) = a^2 - b^2 B^2.
  const Complex denom = a * a - b * b * static_cast<double>(B.square_sign());
  if (std::abs(denom) < 1e-14) {
    throw DomainError("binomial a + b*" + to_string(B) + " is not invertible (a^2 " +
                      (B.square_sign() < 0 ? "+" : "-") + " b^2 = 0)");
  }
  CliffordElement out(n, {{Blade{}, a / denom}, {B, -b / denom}});
  return out;
}

CliffordElement invert_binomial(const CliffordElement& s) {
  Complex a{};
  Complex b{};
  Blade B;
  int blades = 0;
  for (const auto& [blade, c] : s.terms()) {
    if (blade.is_scalar()) {
      a = c;
    } else {
      B = blade;
      b = c;
      ++blades;
    }
  }
  if (blades > 1) throw DomainError("element is not scalar plus a single blade: " + s.to_string());
  return invert_binomial(a, b, B, s.num_generators());
}

CliffordElement conjugate_action(const CliffordElement& s, const CliffordElement& s_inv,
                                 const CliffordElement& x, double tol) {
  const auto one = CliffordElement::scalar(s.num_generators(), 1.0);
  const double err = distance(s * s_inv, one);
  if (err > tol) {
    throw DomainError("s_inv is not an inverse of s (residual " + std::to_string(err) + ")");
  }
  return s * x * s_inv;
}

int as_generator_index(const CliffordElement& x, double tol) {
  if (x.terms().size() != 1) return -1;
  const auto& [b, c] = *x.terms().begin();
  if (b.grade() != 1 || std::abs(c - 1.0) > tol) return -1;
  return b.indices().front();
}

FermionPair fermion_from_majoranas(const CliffordElement& c1, const CliffordElement& c2) {
  const int i = as_generator_index(c1);
  const int j = as_generator_index(c2);
  if (i < 0 || j < 0 || i == j) {
    throw DomainError("fermion_from_majoranas needs two distinct unit generators");
  }
  const Complex I{0.0, 1.0};
  return {(c1 + I * c2) * 0.5, (c1 - I * c2) * 0.5};
}

std::pair<CliffordElement, CliffordElement> majoranas_from_fermion(const FermionPair& f) {
  const Complex I{0.0, 1.0};
  return {f.psi + f.psi_dagger, (f.psi - f.psi_dagger) / I};
}

CliffordElement braid_element(int n, int k) {
  if (k < 0 || k >= n) throw std::out_of_range("braid element index out of range");
  const int next = (k + 1) % n;
  if (next == k) throw std::invalid_argument("braid element needs at least two generators");
  const auto pair = generator(n, next) * generator(n, k);
  return (CliffordElement::scalar(n, 1.0) + pair) * (1.0 / std::sqrt(2.0));
}

}  // namespace mbraid
