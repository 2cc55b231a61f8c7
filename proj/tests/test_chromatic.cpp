#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "chromsym/chromatic.hpp"
#include "chromsym/cotree.hpp"
#include "chromsym/errors.hpp"

using namespace chromsym;

namespace {

SymFunc mt(std::initializer_list<int> parts, Rational c = 1) {
  return SymFunc::basis_element(Basis::m_tilde, Partition(parts), c);
}

SymFunc from_counts(const std::map<Partition, long long>& counts) {
  SymFunc out(Basis::m_tilde);
  for (const auto& [lambda, c] : counts) out.add(lambda, Rational(static_cast<long>(c)));
  return out;
}

}  // namespace

TEST_CASE("stable partitions of small graphs") {
  auto parts = stable_partitions(named::path(3));
  CHECK(parts.size() == 2);
  CHECK(csf_stable(SimpleGraph()).identical(SymFunc::one(Basis::m_tilde)));
  CHECK(csf_stable(named::k1()).identical(mt({1})));
  CHECK(csf_stable(named::complete(4)).identical(mt({1, 1, 1, 1})));
  CHECK(csf_stable(named::edgeless(3)) ==
        mt({1, 1, 1}) + mt({2, 1}, 3) + mt({3}));
  CHECK_THROWS_AS(csf_stable(SimpleGraph(13)), GuardError);
}

TEST_CASE("known chromatic symmetric functions") {
  CHECK(csf_stable(disjoint_union(named::complete(2), named::k1())).identical(mt({1, 1, 1}) + mt({2, 1}, 2)));
  CHECK(csf_stable(disjoint_union(named::complete(6), named::k1()))
            .identical(mt({1, 1, 1, 1, 1, 1, 1}) + mt({2, 1, 1, 1, 1, 1}, 6)));
  CHECK(csf_stable(disjoint_union(named::complete(4), named::complete(2)))
            .identical(mt({1, 1, 1, 1, 1, 1}) + mt({2, 1, 1, 1, 1}, 8) + mt({2, 2, 1, 1}, 12)));
  auto bowtie = csf_stable(named::bowtie());
  CHECK(bowtie.identical(mt({1, 1, 1, 1, 1}) + mt({2, 1, 1, 1}, 4) + mt({2, 2, 1}, 2)));
  CHECK(csf_stable(named::diamond_with_pendant()).identical(bowtie));
  CHECK_FALSE(oracle::isomorphic(named::bowtie(), named::diamond_with_pendant()));
  CHECK(csf_stable(complement(named::bowtie()))
            .identical(mt({1, 1, 1, 1, 1}) + mt({2, 1, 1, 1}, 6) + mt({2, 2, 1}, 5) + mt({3, 1, 1}, 2) +
                       mt({3, 2}, 2)));
  CHECK(csf_stable(complement(named::diamond_with_pendant()))
            .identical(mt({1, 1, 1, 1, 1}) + mt({2, 1, 1, 1}, 6) + mt({2, 2, 1}, 5) + mt({3, 1, 1}, 2) +
                       mt({3, 2})));
}

TEST_CASE("stable type counts match set-partition enumeration") {
  std::mt19937_64 rng(211);
  for (int i = 0; i < 150; ++i) {
    auto g = oracle::random_graph(rng, static_cast<int>(rng() % 8));
    CHECK(csf_stable(g).identical(from_counts(oracle::stable_type_counts(g))));
  }
}

TEST_CASE("power-sum expansion equals the stable expansion") {
  std::mt19937_64 rng(223);
  for (int i = 0; i < 120; ++i) {
    auto g = oracle::random_graph(rng, static_cast<int>(rng() % 7));
    auto x = csf_powersum(g);
    CHECK(x.basis() == Basis::p);
    CHECK(to_m_tilde(x).identical(csf_stable(g)));
  }
  CHECK_THROWS_AS(csf_powersum(named::complete(8)), GuardError);
}

TEST_CASE("cotree evaluation") {
  auto e = parse_expr("J(K1,E3)");
  CHECK(csf_cotree(e).identical(csf_stable(named::claw())));
  CHECK_THROWS_AS(csf_cotree(parse_expr("C(K2)")), InvalidArgument);
  CHECK(csf_cotree(ConstructExpr::leaf()).identical(mt({1})));

  CotreeCsfEvaluator eval;
  std::mt19937_64 rng(227);
  for (int n = 1; n <= 7; ++n) {
    for (const auto& expr : enumerate_class(GraphClass::cograph, n)) {
      CHECK(eval(expr).identical(csf_stable(to_graph(expr))));
    }
  }
  CHECK(eval.cache_size() > 0);
}

TEST_CASE("join and union laws") {
  std::mt19937_64 rng(229);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 4));
    auto h = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 4));
    auto xg = csf_stable(g), xh = csf_stable(h);
    CHECK(csf_stable(join(g, h)).identical(odot(xg, xh)));
    CHECK(csf_stable(disjoint_union(g, h)) == multiply(xg, xh));
    // Read's law for chromatic polynomials of joins.
    CHECK(chromatic_poly(join(g, h)) == falling_odot(chromatic_poly(g), chromatic_poly(h)));
  }
}

TEST_CASE("chromatic polynomial and colorings") {
  CHECK(chromatic_poly(named::complete(3)) == FallingPoly::falling(3));
  CHECK(chromatic_poly(named::path(3)).to_standard() == Polynomial({0, 1, -2, 1}));
  CHECK(count_colorings(SimpleGraph(), 0) == 1);
  CHECK(count_colorings(named::k1(), 0) == 0);
  CHECK(count_colorings(named::cycle(5), 3) == 30);
  CHECK_THROWS_AS(count_colorings(named::k1(), -1), InvalidArgument);
  CHECK_THROWS_AS(count_colorings(SimpleGraph(30), 10), GuardError);

  std::mt19937_64 rng(233);
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(rng() % 7);
    auto g = oracle::random_graph(rng, n);
    auto chi = chromatic_poly(g);
    auto x = csf_stable(g);
    std::vector<Rational> xs, ys;
    for (int t = 0; t <= n + 1; ++t) {
      const long brute = static_cast<long>(oracle::colorings(g, t));
      CHECK(count_colorings(g, t) == brute);
      xs.emplace_back(t);
      ys.emplace_back(brute);
    }
    auto interpolated = interpolate(xs, ys);
    CHECK(chi.to_standard() == interpolated);
    CHECK(epsilon_m_tilde(x) == chi);
    CHECK(epsilon_p(x) == interpolated);
  }
}

TEST_CASE("results do not depend on vertex labels") {
  std::mt19937_64 rng(239);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_graph(rng, static_cast<int>(rng() % 8));
    CHECK(csf_stable(oracle::relabel(g, rng)).identical(csf_stable(g)));
  }
}
