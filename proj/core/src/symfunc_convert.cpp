#include <map>
#include <set>

#include "chromsym/errors.hpp"
#include "chromsym/symfunc.hpp"

namespace chromsym {

namespace {

// Memo tables for the product expansions; each entry is a pure function of
// its key.
const SymFunc& cached_expansion(std::map<Partition, SymFunc>& memo, const Partition& lambda,
                                SymFunc (*factor)(int)) {
  auto it = memo.find(lambda);
  if (it != memo.end()) return it->second;
  SymFunc acc = SymFunc::one(Basis::m);
  for (int part : lambda.parts()) acc = multiply(acc, factor(part));
  return memo.emplace(lambda, std::move(acc)).first->second;
}

SymFunc elementary_factor(int k) {
  return SymFunc::basis_element(Basis::m, Partition::repeated(1, k));
}

SymFunc power_sum_factor(int k) { return SymFunc::basis_element(Basis::m, Partition{k}); }

std::set<int> weights(const SymFunc& f) {
  std::set<int> out;
  for (const auto& [lambda, c] : f.terms()) out.insert(lambda.weight());
  return out;
}

}  // namespace

SymFunc expand_e(const Partition& lambda) {
  thread_local std::map<Partition, SymFunc> memo;
  return cached_expansion(memo, lambda, elementary_factor);
}

SymFunc expand_p(const Partition& lambda) {
  thread_local std::map<Partition, SymFunc> memo;
  return cached_expansion(memo, lambda, power_sum_factor);
}

SymFunc to_m(const SymFunc& f) {
  SymFunc out(Basis::m);
  switch (f.basis()) {
    case Basis::m:
      return f;
    case Basis::m_tilde:
      for (const auto& [lambda, c] : f.terms()) {
        out.add(lambda, c * Rational(lambda.multiplicity_factorial()));
      }
      return out;
    case Basis::e:
      for (const auto& [lambda, c] : f.terms()) out += expand_e(lambda) * c;
      return out;
    case Basis::p:
      for (const auto& [lambda, c] : f.terms()) out += expand_p(lambda) * c;
      return out;
  }
  return out;
}

SymFunc to_m_tilde(const SymFunc& f) {
  if (f.basis() == Basis::m_tilde) return f;
  SymFunc out(Basis::m_tilde);
  const SymFunc converted = to_m(f);
  for (const auto& [lambda, c] : converted.terms()) {
    out.add(lambda, c / Rational(lambda.multiplicity_factorial()));
  }
  return out;
}

// e_{μ'} = m_μ + (terms strictly dominance-below μ). Eliminating the
// lexicographically largest term of each degree is therefore a triangular
// solve: the largest term is dominance-maximal in the support and every
// subtraction only introduces smaller terms.
SymFunc to_e(const SymFunc& f) {
  if (f.basis() == Basis::e) return f;
  const SymFunc m = to_m(f);
  SymFunc out(Basis::e);
  for (int d : weights(m)) {
    SymFunc rest = m.homogeneous_part(d);
    while (!rest.is_zero()) {
      const auto& [mu, c] = *rest.terms().rbegin();
      const Partition lead = mu;
      const Rational coeff = c;
      const Partition target = conjugate(lead);
      out.add(target, coeff);
      rest -= expand_e(target) * coeff;
    }
  }
  return out;
}

// p_μ = (prod r_i!) m_μ + (terms obtained by merging parts of μ, which all
// dominate μ). Eliminate from the lexicographically smallest term upward.
SymFunc to_p(const SymFunc& f) {
  if (f.basis() == Basis::p) return f;
  const SymFunc m = to_m(f);
  SymFunc out(Basis::p);
  for (int d : weights(m)) {
    SymFunc rest = m.homogeneous_part(d);
    while (!rest.is_zero()) {
      const auto& [mu, c] = *rest.terms().begin();
      const Partition lead = mu;
      const Rational coeff = c / Rational(lead.multiplicity_factorial());
      out.add(lead, coeff);
      rest -= expand_p(lead) * coeff;
    }
  }
  return out;
}

SymFunc to_basis(const SymFunc& f, Basis target) {
  switch (target) {
    case Basis::m:
      return to_m(f);
    case Basis::m_tilde:
      return to_m_tilde(f);
    case Basis::e:
      return to_e(f);
    case Basis::p:
      return to_p(f);
  }
  throw InvalidArgument("unknown basis");
}

}  // namespace chromsym
