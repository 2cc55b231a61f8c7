// Brute-force reference implementations used only by the test suites.
// None of these call into the code paths they are used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chromsym/graph.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/rational.hpp"
#include "chromsym/symfunc.hpp"

namespace oracle {

using chromsym::Partition;
using chromsym::Rational;
using chromsym::SimpleGraph;

/// Labeled graph from the bits of `code` over the pairs (u<v) in row order.
inline SimpleGraph graph_from_code(int n, std::uint64_t code) {
  std::vector<chromsym::Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1U) edges.emplace_back(u, v);
    }
  }
  return SimpleGraph::from_edges(n, edges);
}

/// Minimum adjacency code over all vertex permutations.
inline std::string canonical_code(const SimpleGraph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string code;
    for (int u = 0; u < g.order(); ++u) {
      for (int v = u + 1; v < g.order(); ++v) code.push_back(g.adjacent(perm[u], perm[v]) ? '1' : '0');
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One labeled representative per isomorphism class, by exhaustive dedup.
inline std::vector<SimpleGraph> all_unlabeled(int n) {
  std::map<std::string, SimpleGraph> seen;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    SimpleGraph g = graph_from_code(n, code);
    seen.emplace(canonical_code(g), g);
  }
  std::vector<SimpleGraph> out;
  for (auto& [k, g] : seen) out.push_back(g);
  return out;
}

inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

/// Does some injective map F -> G preserve adjacency and non-adjacency?
inline bool contains_induced(const SimpleGraph& g, const SimpleGraph& f) {
  const int k = f.order();
  if (k > g.order()) return false;
  std::vector<int> image;
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  auto place = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    for (int v = 0; v < g.order(); ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = f.adjacent(j, i) == g.adjacent(image[j], v);
      if (!ok) continue;
      used[v] = true;
      image.push_back(v);
      if (self(self, i + 1)) return true;
      image.pop_back();
      used[v] = false;
    }
    return false;
  };
  return place(place, 0);
}

/// Every set partition via restricted growth strings; counts stable ones by type.
inline std::map<Partition, long long> stable_type_counts(const SimpleGraph& g) {
  const int n = g.order();
  std::map<Partition, long long> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto visit = [&]() {
    const int blocks = n == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<int> sizes(static_cast<std::size_t>(blocks), 0);
    for (int u = 0; u < n; ++u) {
      ++sizes[rgs[u]];
      for (int v = u + 1; v < n; ++v) {
        if (rgs[u] == rgs[v] && g.adjacent(u, v)) return;
      }
    }
    ++out[Partition(sizes)];
  };
  auto gen = [&](auto&& self, int i, int max_label) -> void {
    if (i == n) {
      visit();
      return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
      rgs[i] = label;
      self(self, i + 1, std::max(max_label, label));
    }
  };
  if (n == 0) {
    visit();
  } else {
    rgs[0] = 0;
    gen(gen, 1, 0);
  }
  return out;
}

/// Counts all colors^n assignments that are proper.
inline long long colorings(const SimpleGraph& g, int colors) {
  const int n = g.order();
  if (n == 0) return 1;
  if (colors == 0) return 0;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  long long total = 0;
  const auto edges = g.edges();
  while (true) {
    bool proper = std::all_of(edges.begin(), edges.end(),
                              [&](const chromsym::Edge& e) { return c[e.first] != c[e.second]; });
    if (proper) ++total;
    int i = 0;
    while (i < n && ++c[i] == colors) c[i++] = 0;
    if (i == n) break;
  }
  return total;
}

/// A polynomial in finitely many variables: exponent vector -> coefficient.
using PolyN = std::map<std::vector<int>, Rational>;

/// Restriction of a monomial-basis symmetric function to k variables,
/// obtained by listing every distinct rearrangement of each partition.
inline PolyN restrict_m(const chromsym::SymFunc& f, int k) {
  PolyN out;
  const chromsym::SymFunc in_m = chromsym::to_m(f);
  for (const auto& [lambda, c] : in_m.terms()) {
    if (lambda.length() > k) continue;
    std::vector<int> exps(lambda.parts());
    exps.resize(static_cast<std::size_t>(k), 0);
    std::sort(exps.begin(), exps.end());
    do {
      out[exps] += c;
    } while (std::next_permutation(exps.begin(), exps.end()));
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline PolyN multiply(const PolyN& a, const PolyN& b) {
  PolyN out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Rational evaluate(const PolyN& p, const std::vector<Rational>& x) {
  Rational total = 0;
  for (const auto& [e, c] : p) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int j = 0; j < e[i]; ++j) term *= x[i];
    }
    total += term;
  }
  return total;
}

/// Erdős–Rényi style sample with edge probability 1/2.
inline SimpleGraph random_graph(std::mt19937_64& rng, int n) {
  std::vector<chromsym::Edge> edges;
  std::bernoulli_distribution coin(0.5);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return SimpleGraph::from_edges(n, edges);
}

/// Random sparse symmetric function in a random basis, small rational coefficients.
inline chromsym::SymFunc random_symfunc(std::mt19937_64& rng, int max_weight, int max_terms = 4) {
  static constexpr chromsym::Basis bases[] = {chromsym::Basis::m, chromsym::Basis::m_tilde, chromsym::Basis::p,
                                              chromsym::Basis::e};
  chromsym::SymFunc f(bases[rng() % 4]);
  const int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  for (int i = 0; i < terms; ++i) {
    const int w = static_cast<int>(rng() % static_cast<unsigned>(max_weight + 1));
    auto all = chromsym::partitions_of(w);
    Rational c(static_cast<int>(rng() % 13) - 6, 1 + static_cast<int>(rng() % 3));
    c.canonicalize();
    f.add(all[rng() % all.size()], c);
  }
  return f;
}

/// Random permutation of the vertex labels.
inline SimpleGraph relabel(const SimpleGraph& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<chromsym::Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return SimpleGraph::from_edges(g.order(), edges);
}

}  // namespace oracle
