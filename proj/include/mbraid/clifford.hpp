#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mbraid/errors.hpp"

namespace mbraid {

using Complex = std::complex<double>;

/// Coefficients with magnitude below this are dropped after every operation.
inline constexpr double kPruneTolerance = 1e-14;

/// Largest generator count a Blade can address.
inline constexpr int kMaxGenerators = 64;

/// A product of distinct Majorana generators c_{i1} c_{i2} ... with
/// i1 < i2 < ... (the canonical ordering). The empty blade is the unit.
///
/// Stored as a bit set; bit k set means c_k participates.
class Blade {
 public:
  constexpr Blade() = default;
  static Blade from_mask(std::uint64_t mask) { return Blade(mask); }
  /// Indices must be strictly ascending.
  static Blade from_indices(const std::vector<int>& ascending);

  std::uint64_t mask() const { return mask_; }
  int grade() const;
  bool is_scalar() const { return mask_ == 0; }
  /// Highest index + 1, or 0 for the unit blade.
  int span() const;
  std::vector<int> indices() const;

  /// +1 or -1: the square of this blade under c_k^2 = 1.
  int square_sign() const;
  /// +1 or -1: sign picked up when reversing the generator order.
  int reverse_sign() const;

  friend bool operator==(Blade, Blade) = default;
  friend auto operator<=>(Blade a, Blade b) { return a.mask_ <=> b.mask_; }

 private:
  explicit constexpr Blade(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

/// Product of two canonical blades: sign and resulting blade.
/// The sign is the parity of adjacent transpositions needed to sort the
/// concatenated index list; equal indices then cancel in pairs.
std::pair<int, Blade> blade_product(Blade a, Blade b);

std::string to_string(Blade b);

/// Sparse element of the complex Clifford algebra on n generators.
class CliffordElement {
 public:
  using Terms = std::map<Blade, Complex>;

  explicit CliffordElement(int num_generators);
  CliffordElement(int num_generators, Terms terms);

  static CliffordElement scalar(int num_generators, Complex value);
  static CliffordElement blade(int num_generators, Blade b, Complex coeff = 1.0);

  int num_generators() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Complex coefficient(Blade b) const;
  Complex scalar_part() const { return coefficient(Blade{}); }

  CliffordElement& operator+=(const CliffordElement& other);
  CliffordElement& operator-=(const CliffordElement& other);
  CliffordElement& operator*=(Complex s);

  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator-(CliffordElement a) { return a *= -1.0; }
  friend CliffordElement operator*(CliffordElement a, Complex s) { return a *= s; }
  friend CliffordElement operator*(Complex s, CliffordElement a) { return a *= s; }
  friend CliffordElement operator/(CliffordElement a, Complex s) { return a *= 1.0 / s; }
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);

  /// Largest coefficient magnitude of (a - b); 0 means identical terms.
  friend double distance(const CliffordElement& a, const CliffordElement& b);

  std::string to_string() const;

 private:
  void prune();
  int n_;
  Terms terms_;
};

CliffordElement generator(int n, int k);
CliffordElement multiply(const CliffordElement& a, const CliffordElement& b);
CliffordElement add(const CliffordElement& a, const CliffordElement& b);
CliffordElement scale(const CliffordElement& a, Complex s);
/// Reverses blade order and conjugates coefficients; c_k^dagger = c_k.
CliffordElement dagger(const CliffordElement& a);

/// Inverse of a + b*B for a single blade B (B^2 = +1 or -1).
CliffordElement invert_binomial(Complex a, Complex b, Blade B, int n);
/// Same, after splitting `s` into scalar part plus one blade term.
CliffordElement invert_binomial(const CliffordElement& s);

/// s * x * s_inv. Throws DomainError when s * s_inv differs from 1 by more
/// than `tol`.
CliffordElement conjugate_action(const CliffordElement& s, const CliffordElement& s_inv,
                                 const CliffordElement& x, double tol = 1e-12);

struct FermionPair {
  CliffordElement psi;
  CliffordElement psi_dagger;
};

/// psi = (c1 + i c2) / 2, psi^dagger = (c1 - i c2) / 2.
///
/// The inverse map is c1 = psi + psi^dagger, c2 = (psi - psi^dagger) / i,
/// which is the only normalization under which both the Majorana relations
/// and psi psi^dagger + psi^dagger psi = 1 hold simultaneously.
FermionPair fermion_from_majoranas(const CliffordElement& c1, const CliffordElement& c2);
std::pair<CliffordElement, CliffordElement> majoranas_from_fermion(const FermionPair& f);

/// The braiding element tau_k = (1 + c_{k+1} c_k) / sqrt(2), and its
/// circular variant when k = n - 1 (c_n wraps to c_0).
CliffordElement braid_element(int n, int k);

/// The single-generator index of x, or -1 when x is not exactly c_j.
int as_generator_index(const CliffordElement& x, double tol = 1e-12);

}  // namespace mbraid
