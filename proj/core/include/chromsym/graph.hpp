#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chromsym {

/// Vertex subsets and neighbourhoods are 64-bit masks.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Guard for the brute-force isomorphism test.
inline constexpr int kIsomorphismGuard = 12;

/// Largest n accepted by enumerate_graphs.
inline constexpr int kEnumerateGraphsLimit = 7;

using Edge = std::pair<int, int>;

/// Finite simple graph on vertices {0, ..., n-1}.
///
/// Each vertex owns a neighbourhood bitset, so the order is capped at
/// kMaxVertices. Values are immutable once built; every operation below
/// returns a new graph.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Edgeless graph on n vertices. Throws CapacityError if n > kMaxVertices.
  explicit SimpleGraph(int n);

  /// Throws InvalidArgument on loops or out-of-range endpoints.
  /// Duplicate edges are collapsed.
  static SimpleGraph from_edges(int n, std::span<const Edge> edges);
  static SimpleGraph from_edges(int n, std::initializer_list<Edge> edges);

  /// Builds from neighbourhood rows. Rows must be symmetric and loop-free.
  static SimpleGraph from_rows(std::vector<VertexMask> rows);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  int edge_count() const noexcept;
  bool empty() const noexcept { return rows_.empty(); }

  bool adjacent(int u, int v) const;
  VertexMask neighbors(int v) const { return rows_.at(v); }
  int degree(int v) const;
  VertexMask all_vertices() const noexcept;

  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // non-increasing

  /// Upper-triangle adjacency bits, row by row, as '0'/'1' characters.
  std::string adjacency_code() const;

  const std::vector<VertexMask>& rows() const noexcept { return rows_; }

  /// Labeled equality (same n, same edge set).
  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<VertexMask> rows_;
};

namespace named {

SimpleGraph complete(int n);
SimpleGraph edgeless(int n);
SimpleGraph path(int n);
SimpleGraph cycle(int n);
SimpleGraph star(int leaves);  // K_{1,leaves}, centre is vertex 0

inline SimpleGraph k1() { return complete(1); }
inline SimpleGraph k3() { return complete(3); }
inline SimpleGraph p4() { return path(4); }
inline SimpleGraph c4() { return cycle(4); }
inline SimpleGraph claw() { return star(3); }
SimpleGraph two_k2();

/// Two triangles sharing a vertex.
SimpleGraph bowtie();
/// Four-cycle with one chord plus a pendant vertex on a chord-free corner.
SimpleGraph diamond_with_pendant();

}  // namespace named

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);
SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h);
SimpleGraph complement(const SimpleGraph& g);

/// Vertices of `subset` relabeled 0..|S|-1 in increasing order.
SimpleGraph induced_subgraph(const SimpleGraph& g, VertexMask subset);
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const int> subset);

/// Vertex masks of the connected components, in vertex order of their minimum.
std::vector<VertexMask> component_masks(const SimpleGraph& g, VertexMask within);
bool is_connected(const SimpleGraph& g);

/// Components as induced subgraphs, sorted by
/// (order, edge count, degree sequence, adjacency code).
std::vector<SimpleGraph> connected_components(const SimpleGraph& g);

/// Complements of the components of the complement; their join is g.
std::vector<SimpleGraph> coconnected_components(const SimpleGraph& g);

/// True iff no induced subgraph of g is isomorphic to a member of `forbidden`.
bool is_f_free(const SimpleGraph& g, std::span<const SimpleGraph> forbidden);
bool is_f_free(const SimpleGraph& g, std::initializer_list<SimpleGraph> forbidden);

struct GraphClasses {
  bool threshold = false;
  bool trivially_perfect = false;
  bool cograph = false;
  bool claw_free = false;
  bool triangle_free_complement = false;

  friend bool operator==(const GraphClasses&, const GraphClasses&) = default;
};

/// Forbidden-subgraph classification of g.
GraphClasses classify(const SimpleGraph& g);

/// Backtracking isomorphism test with degree filtering.
/// Orders differing gives false; orders above kIsomorphismGuard throw GuardError.
bool is_isomorphic_small(const SimpleGraph& g, const SimpleGraph& h);

/// One representative per isomorphism class on n vertices (n <= 7).
std::vector<SimpleGraph> enumerate_graphs(int n);

}  // namespace chromsym
