#include "chromsym/chromatic.hpp"

#include <bit>
#include <string>
#include <utility>

#include "chromsym/errors.hpp"

namespace chromsym {

namespace {

// Tallies signed counts keyed by the multiset of block sizes, updated
// incrementally as blocks grow, merge and split. Small graphs key the
// histogram as a mixed-radix integer; larger ones fall back to a string.
class TypeTally {
 public:
  explicit TypeTally(int n) : n_(n), fast_(n <= 15) {
    if (fast_) {
      weight_.assign(static_cast<std::size_t>(n) + 2, 0);
      std::uint64_t w = 1;
      for (int s = 1; s <= n + 1 && s < static_cast<int>(weight_.size()); ++s) {
        weight_[s] = w;
        w *= static_cast<std::uint64_t>(n + 1);
      }
    } else {
      histogram_.assign(static_cast<std::size_t>(n) + 1, '\0');
    }
  }

  void add_block(int size) {
    if (fast_) {
      key_ += weight_[size];
    } else {
      ++histogram_[size];
    }
  }

  void remove_block(int size) {
    if (fast_) {
      key_ -= weight_[size];
    } else {
      --histogram_[size];
    }
  }

  void record(long long delta) {
    if (fast_) {
      fast_counts_[key_] += delta;
    } else {
      slow_counts_[histogram_] += delta;
    }
  }

  std::map<Partition, Integer> result() const {
    std::map<Partition, Integer> out;
    auto emit = [&](std::vector<int> parts, long long count) {
      if (count != 0) out.emplace(Partition(std::move(parts)), Integer(static_cast<long>(count)));
    };
    if (fast_) {
      for (auto [key, count] : fast_counts_) {
        std::vector<int> parts;
        std::uint64_t k = key;
        for (int s = 1; k; ++s) {
          const auto r = k % static_cast<std::uint64_t>(n_ + 1);
          parts.insert(parts.end(), r, s);
          k /= static_cast<std::uint64_t>(n_ + 1);
        }
        emit(std::move(parts), count);
      }
    } else {
      for (const auto& [hist, count] : slow_counts_) {
        std::vector<int> parts;
        for (std::size_t s = 1; s < hist.size(); ++s) {
          parts.insert(parts.end(), static_cast<std::size_t>(hist[s]), static_cast<int>(s));
        }
        emit(std::move(parts), count);
      }
    }
    return out;
  }

 private:
  int n_;
  bool fast_;
  std::vector<std::uint64_t> weight_;
  std::uint64_t key_ = 0;
  std::string histogram_;
  std::unordered_map<std::uint64_t, long long> fast_counts_;
  std::unordered_map<std::string, long long> slow_counts_;
};

void check_stable_guard(const SimpleGraph& g, const ChromaticGuards& guards) {
  if (g.order() > guards.max_stable_vertices) {
    throw GuardError("stable-partition enumeration is limited to " +
                     std::to_string(guards.max_stable_vertices) + " vertices (got " +
                     std::to_string(g.order()) + ")");
  }
}

// Sequential vertex insertion: vertex v joins any existing block containing
// none of its neighbours, or opens a new block.
template <typename OnLeaf, typename OnJoin, typename OnLeave>
void insert_vertices(const SimpleGraph& g, std::vector<VertexMask>& blocks, int v,
                     OnLeaf& leaf, OnJoin& enter, OnLeave& leave) {
  if (v == g.order()) {
    leaf();
    return;
  }
  const VertexMask bit = VertexMask{1} << v;
  const VertexMask nbrs = g.neighbors(v);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b] & nbrs) continue;
    const int before = std::popcount(blocks[b]);
    blocks[b] |= bit;
    enter(before);
    insert_vertices(g, blocks, v + 1, leaf, enter, leave);
    leave(before);
    blocks[b] &= ~bit;
  }
  blocks.push_back(bit);
  enter(0);
  insert_vertices(g, blocks, v + 1, leaf, enter, leave);
  leave(0);
  blocks.pop_back();
}

}  // namespace

void for_each_stable_partition(const SimpleGraph& g,
                               const std::function<void(std::span<const VertexMask>)>& visit,
                               const ChromaticGuards& guards) {
  check_stable_guard(g, guards);
  std::vector<VertexMask> blocks;
  auto leaf = [&] { visit(blocks); };
  auto noop = [](int) {};
  insert_vertices(g, blocks, 0, leaf, noop, noop);
}

std::vector<StablePartition> stable_partitions(const SimpleGraph& g,
                                               const ChromaticGuards& guards) {
  std::vector<StablePartition> out;
  for_each_stable_partition(
      g,
      [&](std::span<const VertexMask> blocks) {
        std::vector<int> sizes;
        sizes.reserve(blocks.size());
        for (auto b : blocks) sizes.push_back(std::popcount(b));
        out.push_back({std::vector<VertexMask>(blocks.begin(), blocks.end()),
                       Partition(std::move(sizes))});
      },
      guards);
  return out;
}

std::map<Partition, Integer> stable_type_counts(const SimpleGraph& g,
                                                const ChromaticGuards& guards) {
  check_stable_guard(g, guards);
  TypeTally tally(g.order());
  std::vector<VertexMask> blocks;
  auto leaf = [&] { tally.record(1); };
  auto enter = [&](int before) {
    if (before) tally.remove_block(before);
    tally.add_block(before + 1);
  };
  auto leave = [&](int before) {
    tally.remove_block(before + 1);
    if (before) tally.add_block(before);
  };
  insert_vertices(g, blocks, 0, leaf, enter, leave);
  return tally.result();
}

SymFunc csf_stable(const SimpleGraph& g, const ChromaticGuards& guards) {
  SymFunc out(Basis::m_tilde);
  for (const auto& [type, count] : stable_type_counts(g, guards)) out.add(type, Rational(count));
  return out;
}

namespace {

// Union-find without path compression so every merge can be undone.
struct RollbackUnionFind {
  std::vector<int> parent;
  std::vector<int> size;

  explicit RollbackUnionFind(int n) : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
    for (int v = 0; v < n; ++v) parent[v] = v;
  }

  int find(int v) const {
    while (parent[v] != v) v = parent[v];
    return v;
  }
};

}  // namespace

SymFunc csf_powersum(const SimpleGraph& g, const ChromaticGuards& guards) {
  const auto edges = g.edges();
  if (static_cast<int>(edges.size()) > guards.max_powersum_edges) {
    throw GuardError("edge-subset expansion is limited to " +
                     std::to_string(guards.max_powersum_edges) + " edges (got " +
                     std::to_string(edges.size()) + ")");
  }
  const int n = g.order();
  TypeTally tally(n);
  for (int v = 0; v < n; ++v) tally.add_block(1);
  RollbackUnionFind uf(n);

  auto recurse = [&](auto&& self, std::size_t i, int chosen) -> void {
    if (i == edges.size()) {
      tally.record(chosen % 2 == 0 ? 1 : -1);
      return;
    }
    self(self, i + 1, chosen);
    int a = uf.find(edges[i].first);
    int b = uf.find(edges[i].second);
    if (a == b) {
      self(self, i + 1, chosen + 1);
      return;
    }
    if (uf.size[a] < uf.size[b]) std::swap(a, b);
    const int sa = uf.size[a];
    const int sb = uf.size[b];
    tally.remove_block(sa);
    tally.remove_block(sb);
    tally.add_block(sa + sb);
    uf.parent[b] = a;
    uf.size[a] = sa + sb;
    self(self, i + 1, chosen + 1);
    uf.size[a] = sa;
    uf.parent[b] = b;
    tally.remove_block(sa + sb);
    tally.add_block(sb);
    tally.add_block(sa);
  };
  recurse(recurse, 0, 0);

  SymFunc out(Basis::p);
  for (const auto& [type, count] : tally.result()) out.add(type, Rational(count));
  return out;
}

SymFunc CotreeCsfEvaluator::operator()(const ConstructExpr& e) {
  using Kind = ConstructExpr::Kind;
  if (e.kind() == Kind::leaf) return SymFunc::basis_element(Basis::m_tilde, Partition{1});
  if (e.has_complement()) {
    throw InvalidArgument("expression contains a complement node; canonicalize it first");
  }
  if (auto it = cache_.find(e.encoding()); it != cache_.end()) return it->second;

  SymFunc acc = (*this)(e.children().front());
  for (std::size_t i = 1; i < e.children().size(); ++i) {
    SymFunc next = (*this)(e.children()[i]);
    acc = e.kind() == Kind::join ? odot(acc, next) : to_m_tilde(multiply(acc, next));
  }
  cache_.emplace(e.encoding(), acc);
  return acc;
}

SymFunc csf_cotree(const ConstructExpr& e) {
  CotreeCsfEvaluator eval;
  return eval(e);
}

FallingPoly chromatic_poly(const SimpleGraph& g, const ChromaticGuards& guards) {
  std::map<int, long long> by_blocks;
  for_each_stable_partition(
      g, [&](std::span<const VertexMask> blocks) { ++by_blocks[static_cast<int>(blocks.size())]; },
      guards);
  FallingPoly out;
  for (auto [l, count] : by_blocks) out.add(l, Rational(static_cast<long>(count)));
  return out;
}

Integer count_colorings(const SimpleGraph& g, int colors, const ChromaticGuards& guards) {
  if (colors < 0) throw InvalidArgument("negative number of colors");
  const int n = g.order();
  if (n == 0) return 1;
  if (colors == 0) return 0;
  long long work = 1;
  for (int i = 0; i < n; ++i) {
    work *= colors;
    if (work > guards.max_coloring_assignments) {
      throw GuardError("coloring count exceeds the guard of " +
                       std::to_string(guards.max_coloring_assignments) + " assignments");
    }
  }
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  auto place = [&](auto&& self, int v) -> long long {
    if (v == n) return 1;
    long long total = 0;
    for (int c = 0; c < colors; ++c) {
      bool clash = false;
      for (int u = 0; u < v && !clash; ++u) clash = color[u] == c && g.adjacent(u, v);
      if (clash) continue;
      color[v] = c;
      total += self(self, v + 1);
    }
    color[v] = -1;
    return total;
  };
  return Integer(static_cast<long>(place(place, 0)));
}

}  // namespace chromsym
