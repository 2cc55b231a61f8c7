#include "chromsym/symfunc.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <vector>

#include "chromsym/errors.hpp"

namespace chromsym {

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::m:
      return "m";
    case Basis::m_tilde:
      return "mt";
    case Basis::p:
      return "p";
    case Basis::e:
      return "e";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  if (name == "m") return Basis::m;
  if (name == "mt") return Basis::m_tilde;
  if (name == "p") return Basis::p;
  if (name == "e") return Basis::e;
  throw InvalidArgument("unknown basis '" + std::string(name) + "' (expected m, mt, p, e)");
}

SymFunc::SymFunc(Basis basis, Terms terms) : basis_(basis) {
  for (auto& [lambda, c] : terms) add(lambda, c);
}

SymFunc SymFunc::basis_element(Basis basis, Partition lambda, Rational c) {
  SymFunc f(basis);
  f.add(lambda, c);
  return f;
}

Rational SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add(const Partition& lambda, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SymFunc::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& term) { return term.first.weight() == d; });
}

SymFunc SymFunc::homogeneous_part(int d) const {
  SymFunc out(basis_);
  for (const auto& [lambda, c] : terms_) {
    if (lambda.weight() == d) out.terms_.emplace_hint(out.terms_.end(), lambda, c);
  }
  return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  if (other.basis_ != basis_) {
    *this += to_basis(other, basis_);
    return *this;
  }
  for (const auto& [lambda, c] : other.terms_) add(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
  if (other.basis_ != basis_) {
    *this -= to_basis(other, basis_);
    return *this;
  }
  for (const auto& [lambda, c] : other.terms_) add(lambda, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, coeff] : terms_) coeff *= c;
  return *this;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return to_m(a).terms_ == to_m(b).terms_;
}

namespace {

std::set<int> degrees(const SymFunc& f) {
  std::set<int> out;
  for (const auto& [lambda, c] : f.terms()) out.insert(lambda.weight());
  return out;
}

using CoeffTable = std::unordered_map<Partition, Rational, PartitionHash>;

CoeffTable table_of(const SymFunc& f) {
  CoeffTable t;
  for (const auto& [lambda, c] : f.terms()) t.emplace(lambda, c);
  return t;
}

Partition sorted_nonzero(const std::vector<int>& exponents) {
  std::vector<int> parts;
  parts.reserve(exponents.size());
  for (int x : exponents) {
    if (x > 0) parts.push_back(x);
  }
  return Partition(std::move(parts));
}

// Coefficient of x_1^{nu_1} ... x_k^{nu_k} in f * g, where f and g are
// homogeneous monomial-basis functions of degrees a and b. A monomial x^alpha
// of f carries the coefficient of m_{sort(alpha)}, so the product coefficient
// is the sum over splits nu = alpha + beta with |alpha| = a.
Rational product_coefficient(const Partition& nu, int a, const CoeffTable& f,
                             const CoeffTable& g) {
  const auto& parts = nu.parts();
  const std::size_t k = parts.size();
  std::vector<int> alpha(k, 0);
  std::vector<int> beta(k, 0);
  // suffix[i] = nu_i + ... + nu_{k-1}, to prune splits that cannot reach a.
  std::vector<int> suffix(k + 1, 0);
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] + parts[i];

  Rational total = 0;
  auto recurse = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == k) {
      if (remaining != 0) return;
      auto fi = f.find(sorted_nonzero(alpha));
      if (fi == f.end()) return;
      auto gi = g.find(sorted_nonzero(beta));
      if (gi == g.end()) return;
      total += fi->second * gi->second;
      return;
    }
    const int hi = std::min(parts[i], remaining);
    const int lo = std::max(0, remaining - (suffix[i + 1]));
    for (int x = lo; x <= hi; ++x) {
      alpha[i] = x;
      beta[i] = parts[i] - x;
      self(self, i + 1, remaining - x);
    }
  };
  recurse(recurse, 0, a);
  return total;
}

}  // namespace

SymFunc multiply(const SymFunc& f_in, const SymFunc& g_in) {
  const SymFunc f = to_m(f_in);
  const SymFunc g = to_m(g_in);
  SymFunc out(Basis::m);
  if (f.is_zero() || g.is_zero()) return out;
  for (int a : degrees(f)) {
    const CoeffTable fa = table_of(f.homogeneous_part(a));
    for (int b : degrees(g)) {
      const CoeffTable gb = table_of(g.homogeneous_part(b));
      for (const auto& nu : partitions_of(a + b)) {
        out.add(nu, product_coefficient(nu, a, fa, gb));
      }
    }
  }
  return out;
}

SymFunc odot(const SymFunc& f_in, const SymFunc& g_in) {
  const SymFunc f = to_m_tilde(f_in);
  const SymFunc g = to_m_tilde(g_in);
  SymFunc out(Basis::m_tilde);
  for (const auto& [lambda, c] : f.terms()) {
    for (const auto& [mu, d] : g.terms()) out.add(multiset_union(lambda, mu), c * d);
  }
  return out;
}

SymFunc odot_divide_m1(const SymFunc& f_in) {
  const SymFunc f = to_m_tilde(f_in);
  SymFunc out(Basis::m_tilde);
  for (const auto& [lambda, c] : f.terms()) {
    if (lambda.multiplicity(1) == 0) {
      throw DivisionError("term m~" + to_string(lambda) +
                          " has no part 1, so the input is not a multiple of m~[1]");
    }
    out.add(lambda.without_part(1), c);
  }
  return out;
}

EPositivity is_e_positive(const SymFunc& f) {
  EPositivity result;
  const SymFunc converted = to_e(f);
  for (const auto& [lambda, c] : converted.terms()) {
    if (c < 0) {
      result.positive = false;
      result.witness = std::make_pair(lambda, c);
      break;
    }
  }
  return result;
}

FallingPoly epsilon_m_tilde(const SymFunc& f) {
  FallingPoly out;
  const SymFunc converted = to_m_tilde(f);
  for (const auto& [lambda, c] : converted.terms()) out.add(lambda.length(), c);
  return out;
}

Polynomial epsilon_p(const SymFunc& f) {
  Polynomial out;
  const SymFunc converted = to_p(f);
  for (const auto& [lambda, c] : converted.terms()) out += Polynomial::monomial(lambda.length(), c);
  return out;
}

Rational evaluate_ones(const SymFunc& f, int n) {
  if (n < 0) throw InvalidArgument("evaluate_ones needs n >= 0");
  Rational total = 0;
  const SymFunc converted = to_m(f);
  for (const auto& [lambda, c] : converted.terms()) {
    const int len = lambda.length();
    if (len > n) continue;
    // Distinct arrangements of λ padded with n - ℓ zeros.
    Integer count = factorial(static_cast<unsigned>(n));
    count /= lambda.multiplicity_factorial();
    count /= factorial(static_cast<unsigned>(n - len));
    total += c * Rational(count);
  }
  return total;
}

}  // namespace chromsym
