#pragma once

#include <map>
#include <string>
#include <vector>

#include "chromsym/rational.hpp"

namespace chromsym {

/// Dense univariate polynomial in t over Q, coefficient i multiplies t^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(int degree, Rational coeff = 1);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coeff(int i) const;

  Rational evaluate(const Rational& t) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Interpolates the unique polynomial of degree < points.size() through
/// (x_i, y_i). Throws InvalidArgument on repeated abscissae.
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// "t^3 - 3*t^2 + 2*t"; "0" for the zero polynomial.
std::string to_string(const Polynomial& p);

/// Polynomial in t written as sum c_l (t)_l over falling factorials
/// (t)_l = t (t-1) ... (t-l+1), (t)_0 = 1. Zero coefficients are not stored.
class FallingPoly {
 public:
  FallingPoly() = default;
  explicit FallingPoly(std::map<int, Rational> coeffs);

  /// (t)_l itself.
  static FallingPoly falling(int l, Rational coeff = 1);
  static FallingPoly one() { return falling(0); }

  const std::map<int, Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(int l) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  void add(int l, const Rational& c);

  Rational evaluate(const Rational& t) const;

  Polynomial to_standard() const;
  static FallingPoly from_standard(const Polynomial& p);

  FallingPoly& operator+=(const FallingPoly& other);
  friend FallingPoly operator+(FallingPoly a, const FallingPoly& b) { return a += b; }
  friend bool operator==(const FallingPoly&, const FallingPoly&) = default;

 private:
  std::map<int, Rational> coeffs_;
};

/// (t)_l ⊙ (t)_m = (t)_{l+m}, extended bilinearly.
FallingPoly falling_odot(const FallingPoly& a, const FallingPoly& b);

/// "(t)_3 + (t)_2"; "0" for zero.
std::string to_string(const FallingPoly& p);

}  // namespace chromsym
