#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "chromsym/partition.hpp"
#include "chromsym/polynomial.hpp"
#include "chromsym/rational.hpp"

namespace chromsym {

/// Linear bases of the ring of symmetric functions used here.
///   m   monomial
///   mt  augmented monomial, m~_λ = (prod r_i!) m_λ
///   p   power sum
///   e   elementary
enum class Basis { m, m_tilde, p, e };

std::string_view basis_name(Basis b);  // "m", "mt", "p", "e"
Basis parse_basis(std::string_view name);

/// A symmetric function as a sparse combination of one basis.
///
/// Coefficients are exact rationals and zero coefficients are never stored.
/// Terms iterate in Partition order (weight, then lexicographic).
/// Equality converts both sides to the monomial basis, so the same function
/// written in two bases compares equal.
class SymFunc {
 public:
  using Terms = std::map<Partition, Rational>;

  explicit SymFunc(Basis basis = Basis::m) : basis_(basis) {}
  SymFunc(Basis basis, Terms terms);

  /// c * b_λ.
  static SymFunc basis_element(Basis basis, Partition lambda, Rational c = 1);
  /// The unit b_∅ (equal to 1 in every basis).
  static SymFunc one(Basis basis) { return basis_element(basis, Partition()); }

  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coeff(const Partition& lambda) const;
  void add(const Partition& lambda, const Rational& c);

  /// True iff every term has weight d (the zero function is homogeneous of any degree).
  bool is_homogeneous(int d) const;

  /// Terms of weight d only.
  SymFunc homogeneous_part(int d) const;

  SymFunc& operator+=(const SymFunc& other);  // requires equal bases
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Rational& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
  friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }

  /// Same basis and identical term maps.
  bool identical(const SymFunc& other) const {
    return basis_ == other.basis_ && terms_ == other.terms_;
  }

  friend bool operator==(const SymFunc& a, const SymFunc& b);

 private:
  Basis basis_;
  Terms terms_;
};

// Basis changes. Each accepts input in any basis.
SymFunc to_m(const SymFunc& f);
SymFunc to_m_tilde(const SymFunc& f);
SymFunc to_e(const SymFunc& f);
SymFunc to_p(const SymFunc& f);
SymFunc to_basis(const SymFunc& f, Basis target);

/// e_λ in the monomial basis.
SymFunc expand_e(const Partition& lambda);
/// p_λ in the monomial basis.
SymFunc expand_p(const Partition& lambda);

/// Ordinary product; result in the monomial basis.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// m~_λ ⊙ m~_μ = m~_{λ⊎μ}; result in the m~ basis.
SymFunc odot(const SymFunc& f, const SymFunc& g);

/// g with g ⊙ m~_1 = f. Throws DivisionError if some term has no part 1.
SymFunc odot_divide_m1(const SymFunc& f);

struct EPositivity {
  bool positive = true;
  /// A negative e-coefficient when not positive.
  std::optional<std::pair<Partition, Rational>> witness;
};

EPositivity is_e_positive(const SymFunc& f);

/// Linear map m~_λ ↦ (t)_{ℓ(λ)}.
FallingPoly epsilon_m_tilde(const SymFunc& f);

/// Ring homomorphism p_k ↦ t.
Polynomial epsilon_p(const SymFunc& f);

/// f(1, ..., 1, 0, ...) with n ones.
Rational evaluate_ones(const SymFunc& f, int n);

}  // namespace chromsym
