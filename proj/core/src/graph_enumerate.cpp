#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "chromsym/errors.hpp"
#include "chromsym/graph.hpp"

namespace chromsym {

namespace {

// Isomorphism invariant used to bucket candidates: per-vertex
// (degree, sum of neighbour degrees, triangles through the vertex), sorted.
std::vector<std::tuple<int, int, int>> vertex_profile(const SimpleGraph& g) {
  std::vector<std::tuple<int, int, int>> profile;
  for (int v = 0; v < g.order(); ++v) {
    int neighbour_degrees = 0;
    int triangles = 0;
    for (VertexMask rest = g.neighbors(v); rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      neighbour_degrees += g.degree(u);
      triangles += std::popcount(g.neighbors(u) & g.neighbors(v));
    }
    profile.emplace_back(g.degree(v), neighbour_degrees, triangles / 2);
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

}  // namespace

std::vector<SimpleGraph> enumerate_graphs(int n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  if (n > kEnumerateGraphsLimit) {
    throw GuardError("enumerate_graphs is limited to n <= " +
                     std::to_string(kEnumerateGraphsLimit));
  }
  std::vector<SimpleGraph> level{SimpleGraph(0)};
  for (int k = 1; k <= n; ++k) {
    // Every graph on k vertices arises from one on k-1 vertices plus a new
    // vertex with some neighbourhood; dedupe within invariant buckets.
    std::map<std::vector<std::tuple<int, int, int>>, std::vector<std::size_t>> buckets;
    std::vector<SimpleGraph> next;
    const VertexMask subsets = VertexMask{1} << (k - 1);
    for (const auto& base : level) {
      for (VertexMask nbrs = 0; nbrs < subsets; ++nbrs) {
        std::vector<VertexMask> rows(base.rows());
        for (VertexMask rest = nbrs; rest; rest &= rest - 1) {
          rows[std::countr_zero(rest)] |= VertexMask{1} << (k - 1);
        }
        rows.push_back(nbrs);
        SimpleGraph candidate = SimpleGraph::from_rows(std::move(rows));
        auto& bucket = buckets[vertex_profile(candidate)];
        bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) {
          return is_isomorphic_small(next[i], candidate);
        });
        if (!seen) {
          bucket.push_back(next.size());
          next.push_back(std::move(candidate));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace chromsym
