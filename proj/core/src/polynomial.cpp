#include "chromsym/polynomial.hpp"

#include <algorithm>

#include "chromsym/errors.hpp"

namespace chromsym {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::monomial(int degree, Rational coeff) {
  if (degree < 0) throw InvalidArgument("negative degree");
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(coeff);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Rational Polynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(Polynomial a, const Rational& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw InvalidArgument("interpolate: size mismatch");
  // Newton divided differences, then expand the nested form.
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational span = xs[i] - xs[i - level];
      if (span == 0) throw InvalidArgument("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / span;
    }
  }
  Polynomial result;
  for (std::size_t k = n; k-- > 0;) {
    result = result * Polynomial({-xs[k], Rational(1)}) + Polynomial({dd[k]});
  }
  return result;
}

namespace {

std::string term_coeff(const Rational& c, bool first, bool unit_term) {
  std::string out;
  Rational mag = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (unit_term || mag != 1) {
    out += mag.get_str();
    if (!unit_term) out += "*";
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[i];
    if (c == 0) continue;
    out += term_coeff(c, first, i == 0);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
    first = false;
  }
  return out;
}

FallingPoly::FallingPoly(std::map<int, Rational> coeffs) {
  for (auto& [l, c] : coeffs) add(l, c);
}

FallingPoly FallingPoly::falling(int l, Rational coeff) {
  FallingPoly p;
  p.add(l, coeff);
  return p;
}

Rational FallingPoly::coeff(int l) const {
  auto it = coeffs_.find(l);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void FallingPoly::add(int l, const Rational& c) {
  if (l < 0) throw InvalidArgument("negative falling-factorial index");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(l, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Rational FallingPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  Rational falling = 1;
  int reached = 0;
  for (const auto& [l, c] : coeffs_) {
    while (reached < l) {
      falling *= t - reached;
      ++reached;
    }
    acc += c * falling;
  }
  return acc;
}

Polynomial FallingPoly::to_standard() const {
  Polynomial acc;
  Polynomial falling({Rational(1)});
  int reached = 0;
  for (const auto& [l, c] : coeffs_) {
    while (reached < l) {
      falling = falling * Polynomial({Rational(-reached), Rational(1)});
      ++reached;
    }
    acc += falling * c;
  }
  return acc;
}

FallingPoly FallingPoly::from_standard(const Polynomial& p) {
  // Peel the top degree each round: (t)_d has leading coefficient 1.
  FallingPoly out;
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const int d = rest.degree();
    const Rational lead = rest.coeffs().back();
    out.add(d, lead);
    rest -= falling(d, lead).to_standard();
  }
  return out;
}

FallingPoly& FallingPoly::operator+=(const FallingPoly& other) {
  for (const auto& [l, c] : other.coeffs_) add(l, c);
  return *this;
}

FallingPoly falling_odot(const FallingPoly& a, const FallingPoly& b) {
  FallingPoly out;
  for (const auto& [l, c] : a.coeffs()) {
    for (const auto& [m, d] : b.coeffs()) out.add(l + m, c * d);
  }
  return out;
}

std::string to_string(const FallingPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    const auto& [l, c] = *it;
    out += term_coeff(c, first, false);
    out += "(t)_" + std::to_string(l);
    first = false;
  }
  return out;
}

}  // namespace chromsym
