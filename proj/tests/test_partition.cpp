#include <random>
#include <set>

#include "doctest.h"

#include "chromsym/errors.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/polynomial.hpp"

using namespace chromsym;

TEST_CASE("partition basics") {
  Partition p{1, 4, 2, 1};
  CHECK(p.parts() == std::vector<int>{4, 2, 1, 1});
  CHECK(p.weight() == 8);
  CHECK(p.length() == 4);
  CHECK(p.multiplicity(1) == 2);
  CHECK(p.multiplicity(3) == 0);
  CHECK(p.multiplicity_factorial() == 2);
  CHECK(Partition{2, 2, 2, 1}.multiplicity_factorial() == 6);
  CHECK(p.without_part(1) == Partition{4, 2, 1});
  CHECK_THROWS_AS(p.without_part(3), InvalidArgument);
  CHECK_THROWS_AS(Partition({2, 0}), InvalidArgument);
  CHECK(Partition::repeated(3, 2) == Partition{3, 3});
  CHECK(Partition::repeated(3, 0).empty());
  CHECK(Partition().weight() == 0);
}

TEST_CASE("order is weight first then lexicographic") {
  CHECK(Partition{1, 1, 1} < Partition{2, 1});
  CHECK(Partition{2, 1} < Partition{3});
  CHECK(Partition{5} < Partition{1, 1, 1, 1, 1, 1});
  CHECK(Partition() < Partition{1});
}

TEST_CASE("union and conjugate") {
  CHECK(multiset_union(Partition{3, 1}, Partition{2, 1}) == Partition{3, 2, 1, 1});
  CHECK(multiset_union(Partition(), Partition{2}) == Partition{2});
  CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
  CHECK(conjugate(Partition()) == Partition());
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : partitions_of(n)) {
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(conjugate(p).weight() == n);
      CHECK(conjugate(p).length() == (p.empty() ? 0 : p[0]));
    }
  }
}

TEST_CASE("dominance") {
  CHECK(compare_dominance(Partition{2, 1}, Partition{2, 1}) == Dominance::equal);
  CHECK(compare_dominance(Partition{1, 1, 1}, Partition{3}) == Dominance::below);
  CHECK(compare_dominance(Partition{3, 1, 1, 1}, Partition{2, 2, 2}) == Dominance::incomparable);
  CHECK(compare_dominance(Partition{4}, Partition{2, 2}) == Dominance::above);
  CHECK_THROWS_AS(compare_dominance(Partition{2}, Partition{3}), InvalidArgument);
  CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));

  // Conjugation reverses dominance; the order refines it.
  for (int n = 1; n <= 8; ++n) {
    auto all = partitions_of(n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (dominance_leq(a, b)) {
          CHECK(dominance_leq(conjugate(b), conjugate(a)));
          CHECK(a <= b);
        }
      }
    }
  }
}

TEST_CASE("partitions_of") {
  auto p4 = partitions_of(4);
  std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(p4 == expected);
  CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
  const long long counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135};
  for (int n = 0; n < 15; ++n) {
    auto all = partitions_of(n);
    CHECK(static_cast<long long>(all.size()) == counts[n]);
    CHECK(partition_count(n) == counts[n]);
    std::set<Partition> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
  }
  CHECK(partition_count(100) == 190569292LL);
  CHECK_THROWS_AS(partitions_of(-1), InvalidArgument);
}

TEST_CASE("partition text") {
  CHECK(to_string(Partition{4, 2, 1}) == "[4,2,1]");
  CHECK(to_string(Partition()) == "[]");
  CHECK(parse_partition("[4,2,1]") == Partition{4, 2, 1});
  CHECK(parse_partition(" [ 1 , 2 ] ") == Partition{2, 1});
  CHECK(parse_partition("[]") == Partition());
  CHECK(parse_partition("<1^3 2^1>") == Partition{2, 1, 1, 1});
  CHECK_THROWS_AS(parse_partition("[4,0]"), Error);
  CHECK_THROWS_AS(parse_partition("[4,"), ParseError);
  CHECK_THROWS_AS(parse_partition("4,2"), ParseError);
  for (int n = 0; n <= 9; ++n) {
    for (const auto& p : partitions_of(n)) CHECK(parse_partition(to_string(p)) == p);
  }
  PartitionHash h;
  CHECK(h(Partition{2, 1}) == h(Partition{1, 2}));
}

TEST_CASE("polynomial arithmetic") {
  Polynomial t = Polynomial::monomial(1);
  Polynomial one = Polynomial::monomial(0);
  auto p = (t - one) * (t + one);
  CHECK(p == Polynomial({-1, 0, 1}));
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(3) == 8);
  CHECK((p - p).is_zero());
  CHECK(to_string(Polynomial()) == "0");
  CHECK(to_string(Polynomial({0, 2, -3, 1})) == "t^3 - 3*t^2 + 2*t");
  CHECK(Polynomial({1, 0, 0}).degree() == 0);
}

TEST_CASE("interpolation recovers random polynomials") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coeff(-20, 20);
  for (int i = 0; i < 100; ++i) {
    const int deg = static_cast<int>(rng() % 7);
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) {
      x = Rational(coeff(rng), 1 + static_cast<int>(rng() % 5));
      x.canonicalize();
    }
    c.back() = c.back() == 0 ? Rational(1) : c.back();
    Polynomial p(c);
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= deg; ++k) {
      xs.emplace_back(k * 2 - 3);
      ys.push_back(p.evaluate(xs.back()));
    }
    CHECK(interpolate(xs, ys) == p);
  }
  CHECK_THROWS_AS(interpolate({1, 1}, {2, 3}), InvalidArgument);
}

TEST_CASE("falling factorial polynomials") {
  auto f3 = FallingPoly::falling(3);
  CHECK(f3.evaluate(5) == 60);
  CHECK(f3.evaluate(2) == 0);
  CHECK(f3.to_standard() == Polynomial({0, 2, -3, 1}));
  CHECK(FallingPoly::from_standard(Polynomial({0, 2, -3, 1})) == f3);
  CHECK(FallingPoly::one().evaluate(7) == 1);
  CHECK(falling_odot(FallingPoly::falling(2), FallingPoly::falling(3)) == FallingPoly::falling(5));
  CHECK(to_string(FallingPoly()) == "0");

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    FallingPoly f;
    for (int l = 0; l <= 6; ++l) f.add(l, Rational(static_cast<int>(rng() % 11) - 5));
    CHECK(FallingPoly::from_standard(f.to_standard()) == f);
    for (int t = -2; t <= 8; ++t) CHECK(f.evaluate(t) == f.to_standard().evaluate(t));
  }
}
