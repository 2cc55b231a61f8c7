#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "chromsym/rational.hpp"

namespace chromsym {

/// Integer partition stored as its non-increasing list of parts.
///
/// Ordering is by weight first, then lexicographic on the parts, so within a
/// fixed weight a partition never strictly dominates one that sorts after it.
/// This is the iteration and printing order of every basis map.
class Partition {
 public:
  Partition() = default;

  /// Parts in any order; they are sorted. Throws InvalidArgument on parts < 1.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// (k, k, ..., k) with `count` copies; count may be 0.
  static Partition repeated(int part, int count);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_.at(i); }

  /// r_i, the number of parts equal to i.
  int multiplicity(int part) const;

  /// prod_i r_i!, the factor relating m~ to m.
  Integer multiplicity_factorial() const;

  /// Copy with one occurrence of `part` removed. Throws InvalidArgument if absent.
  Partition without_part(int part) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Multiset union; weights and lengths add.
Partition multiset_union(const Partition& a, const Partition& b);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& p);

enum class Dominance { equal, below, above, incomparable };

/// Compares prefix sums. Throws InvalidArgument when weights differ.
Dominance compare_dominance(const Partition& a, const Partition& b);

/// a is dominated by b (reflexive). Throws InvalidArgument when weights differ.
bool dominance_leq(const Partition& a, const Partition& b);

/// All partitions of n, (n) first, in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Number of partitions of n (by recurrence, not enumeration).
long long partition_count(int n);

/// `[4,2,1]`, `[]` for the empty partition.
std::string to_string(const Partition& p);

/// Accepts `[4,2,1]`, `[]`, or multiplicity form `<1^3 2^1>`. Throws ParseError.
Partition parse_partition(std::string_view text);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace chromsym
