#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "chromsym/cotree.hpp"
#include "chromsym/graph.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/polynomial.hpp"
#include "chromsym/symfunc.hpp"

namespace chromsym {

/// Size limits for the exponential routes. Exceeding one raises GuardError.
struct ChromaticGuards {
  int max_stable_vertices = 12;              // Bell(12) stable-partition candidates
  int max_powersum_edges = 24;               // 2^24 edge subsets
  long long max_coloring_assignments = 100'000'000;  // colors^vertices
};

/// A set partition of the vertices whose blocks are independent sets.
struct StablePartition {
  std::vector<VertexMask> blocks;
  Partition type;  // block sizes
};

/// Calls `visit` once per stable partition of g. Blocks are listed in order
/// of their smallest vertex.
void for_each_stable_partition(const SimpleGraph& g,
                               const std::function<void(std::span<const VertexMask>)>& visit,
                               const ChromaticGuards& guards = {});

std::vector<StablePartition> stable_partitions(const SimpleGraph& g,
                                               const ChromaticGuards& guards = {});

/// |St_λ(g)| for every type λ that occurs.
std::map<Partition, Integer> stable_type_counts(const SimpleGraph& g,
                                                const ChromaticGuards& guards = {});

/// X(g) = Σ_λ |St_λ(g)| m~_λ.
SymFunc csf_stable(const SimpleGraph& g, const ChromaticGuards& guards = {});

/// Σ over edge subsets S of (-1)^|S| p_{λ(S)}, where λ(S) lists the
/// component sizes of the spanning subgraph (V, S).
SymFunc csf_powersum(const SimpleGraph& g, const ChromaticGuards& guards = {});

/// X from a complement-free construction expression: m~_1 at leaves,
/// ordinary product at unions, ⊙ at joins. Results are cached per subtree
/// encoding, so reuse one evaluator across related expressions.
class CotreeCsfEvaluator {
 public:
  /// Throws InvalidArgument if the expression has complement nodes.
  SymFunc operator()(const ConstructExpr& e);

  std::size_t cache_size() const noexcept { return cache_.size(); }

 private:
  std::unordered_map<std::string, SymFunc> cache_;
};

SymFunc csf_cotree(const ConstructExpr& e);

/// χ(g, t) = Σ_ℓ |St_ℓ(g)| (t)_ℓ.
FallingPoly chromatic_poly(const SimpleGraph& g, const ChromaticGuards& guards = {});

/// Proper colorings with `colors` colors by exhaustive backtracking.
Integer count_colorings(const SimpleGraph& g, int colors, const ChromaticGuards& guards = {});

}  // namespace chromsym
