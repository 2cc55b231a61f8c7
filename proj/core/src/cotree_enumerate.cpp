#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chromsym/cotree.hpp"
#include "chromsym/errors.hpp"
#include "chromsym/partition.hpp"

namespace chromsym {

namespace {

using Shelf = std::vector<std::vector<ConstructExpr>>;  // indexed by leaf count

// Every multiset of at least two pieces whose sizes sum to n, each piece
// drawn from pieces[size], combined under `kind`.
std::vector<ConstructExpr> combine_multisets(int n, const Shelf& pieces,
                                             ConstructExpr::Kind kind) {
  std::vector<ConstructExpr> out;
  for (const auto& shape : partitions_of(n)) {
    if (shape.length() < 2) continue;
    // Distinct sizes with multiplicities.
    std::vector<std::pair<int, int>> blocks;
    for (int part : shape.parts()) {
      if (!blocks.empty() && blocks.back().first == part) {
        ++blocks.back().second;
      } else {
        blocks.emplace_back(part, 1);
      }
    }
    std::vector<ConstructExpr> chosen;
    auto fill = [&](auto&& self, std::size_t block, int remaining, std::size_t from) -> void {
      if (block == blocks.size()) {
        std::vector<ConstructExpr> children(chosen);
        out.push_back(canonicalize(kind == ConstructExpr::Kind::join
                                       ? ConstructExpr::make_join(std::move(children))
                                       : ConstructExpr::make_union(std::move(children))));
        return;
      }
      if (remaining == 0) {
        self(self, block + 1, block + 1 < blocks.size() ? blocks[block + 1].second : 0, 0);
        return;
      }
      const auto& shelf = pieces[static_cast<std::size_t>(blocks[block].first)];
      for (std::size_t i = from; i < shelf.size(); ++i) {
        chosen.push_back(shelf[i]);
        self(self, block, remaining - 1, i);  // multiset: indices non-decreasing
        chosen.pop_back();
      }
    };
    fill(fill, 0, blocks.front().second, 0);
  }
  return out;
}

std::vector<ConstructExpr> dedupe_sorted(std::vector<ConstructExpr> items) {
  std::map<std::string, ConstructExpr> unique;
  for (auto& e : items) unique.emplace(e.encoding(), std::move(e));
  std::vector<ConstructExpr> out;
  out.reserve(unique.size());
  for (auto& [key, e] : unique) out.push_back(std::move(e));
  return out;
}

std::vector<ConstructExpr> cographs(int n) {
  // Connected cographs of size k >= 2 are complements of disconnected ones.
  Shelf connected(static_cast<std::size_t>(n) + 1);
  std::vector<ConstructExpr> disconnected;
  connected[1] = {ConstructExpr::leaf()};
  for (int k = 2; k <= n; ++k) {
    disconnected = combine_multisets(k, connected, ConstructExpr::Kind::disjoint_union);
    for (const auto& d : disconnected) {
      connected[k].push_back(canonicalize(ConstructExpr::make_complement(d)));
    }
  }
  if (n == 1) return connected[1];
  std::vector<ConstructExpr> all = connected[static_cast<std::size_t>(n)];
  all.insert(all.end(), disconnected.begin(), disconnected.end());
  return dedupe_sorted(std::move(all));
}

std::vector<ConstructExpr> trivially_perfect(int n) {
  // Connected members are K1 or (member on k-1 vertices) + K1.
  Shelf connected(static_cast<std::size_t>(n) + 1);
  Shelf all(static_cast<std::size_t>(n) + 1);
  connected[1] = {ConstructExpr::leaf()};
  all[1] = connected[1];
  for (int k = 2; k <= n; ++k) {
    std::vector<ConstructExpr> joined;
    for (const auto& smaller : all[static_cast<std::size_t>(k) - 1]) {
      joined.push_back(canonicalize(ConstructExpr::make_join({smaller, ConstructExpr::leaf()})));
    }
    connected[k] = dedupe_sorted(std::move(joined));
    std::vector<ConstructExpr> members = connected[k];
    auto unions = combine_multisets(k, connected, ConstructExpr::Kind::disjoint_union);
    members.insert(members.end(), unions.begin(), unions.end());
    all[k] = dedupe_sorted(std::move(members));
  }
  return all[static_cast<std::size_t>(n)];
}

std::vector<ConstructExpr> threshold(int n) {
  // Creation sequences: each step adds an isolated or a dominating vertex.
  std::vector<ConstructExpr> level{ConstructExpr::leaf()};
  for (int k = 2; k <= n; ++k) {
    std::vector<ConstructExpr> next;
    for (const auto& e : level) {
      next.push_back(canonicalize(ConstructExpr::make_union({e, ConstructExpr::leaf()})));
      next.push_back(canonicalize(ConstructExpr::make_join({e, ConstructExpr::leaf()})));
    }
    level = dedupe_sorted(std::move(next));
  }
  return level;
}

}  // namespace

std::vector<ConstructExpr> enumerate_class(GraphClass c, int n) {
  if (n < 1) throw InvalidArgument("enumerate_class needs n >= 1");
  const int limit =
      c == GraphClass::cograph ? kCographEnumerationLimit : kNestedEnumerationLimit;
  if (n > limit) {
    throw GuardError("enumeration of " + std::string(class_name(c)) + " graphs is limited to n <= " +
                     std::to_string(limit));
  }
  switch (c) {
    case GraphClass::threshold:
      return threshold(n);
    case GraphClass::trivially_perfect:
      return trivially_perfect(n);
    case GraphClass::cograph:
      return cographs(n);
  }
  return {};
}

}  // namespace chromsym
