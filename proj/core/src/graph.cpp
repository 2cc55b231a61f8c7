#include "chromsym/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <tuple>

#include "chromsym/errors.hpp"

namespace chromsym {

namespace {

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

VertexMask low_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (bit(n) - 1);
}

void check_capacity(int n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  if (n > kMaxVertices) {
    throw CapacityError("graph with " + std::to_string(n) +
                        " vertices exceeds the limit of " +
                        std::to_string(kMaxVertices));
  }
}

// Canonical sort key for component ordering.
auto component_key(const SimpleGraph& g) {
  return std::make_tuple(g.order(), g.edge_count(), g.degree_sequence(),
                         g.adjacency_code());
}

void sort_components(std::vector<SimpleGraph>& parts) {
  std::sort(parts.begin(), parts.end(),
            [](const SimpleGraph& a, const SimpleGraph& b) {
              return component_key(a) < component_key(b);
            });
}

}  // namespace

SimpleGraph::SimpleGraph(int n) {
  check_capacity(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

SimpleGraph SimpleGraph::from_edges(int n, std::span<const Edge> edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidArgument("edge " + std::to_string(u) + "-" +
                            std::to_string(v) + " out of range for n=" +
                            std::to_string(n));
    }
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    g.rows_[u] |= bit(v);
    g.rows_[v] |= bit(u);
  }
  return g;
}

SimpleGraph SimpleGraph::from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

SimpleGraph SimpleGraph::from_rows(std::vector<VertexMask> rows) {
  const int n = static_cast<int>(rows.size());
  check_capacity(n);
  const VertexMask valid = low_mask(n);
  for (int u = 0; u < n; ++u) {
    if (rows[u] & ~valid) throw InvalidArgument("neighbour out of range");
    if (rows[u] & bit(u)) throw InvalidArgument("loop at vertex " + std::to_string(u));
    for (VertexMask rest = rows[u]; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (!(rows[v] & bit(u))) throw InvalidArgument("adjacency is not symmetric");
    }
  }
  SimpleGraph g;
  g.rows_ = std::move(rows);
  return g;
}

int SimpleGraph::edge_count() const noexcept {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

bool SimpleGraph::adjacent(int u, int v) const {
  return (rows_.at(u) >> v) & 1U;
}

int SimpleGraph::degree(int v) const { return std::popcount(rows_.at(v)); }

VertexMask SimpleGraph::all_vertices() const noexcept { return low_mask(order()); }

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (VertexMask rest = rows_[u] & ~low_mask(u + 1); rest; rest &= rest - 1) {
      out.emplace_back(u, std::countr_zero(rest));
    }
  }
  return out;
}

std::vector<int> SimpleGraph::degree_sequence() const {
  std::vector<int> deg(rows_.size());
  std::transform(rows_.begin(), rows_.end(), deg.begin(),
                 [](VertexMask r) { return std::popcount(r); });
  std::sort(deg.begin(), deg.end(), std::greater<>());
  return deg;
}

std::string SimpleGraph::adjacency_code() const {
  std::string code;
  const int n = order();
  code.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) code.push_back(adjacent(u, v) ? '1' : '0');
  }
  return code;
}

namespace named {

SimpleGraph complete(int n) {
  check_capacity(n);
  std::vector<VertexMask> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rows[v] = low_mask(n) & ~bit(v);
  return SimpleGraph::from_rows(std::move(rows));
}

SimpleGraph edgeless(int n) { return SimpleGraph(n); }

SimpleGraph path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return SimpleGraph::from_edges(n, edges);
}

SimpleGraph cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return SimpleGraph::from_edges(n, edges);
}

SimpleGraph star(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return SimpleGraph::from_edges(leaves + 1, edges);
}

SimpleGraph two_k2() { return SimpleGraph::from_edges(4, {{0, 1}, {2, 3}}); }

SimpleGraph bowtie() {
  return SimpleGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
}

SimpleGraph diamond_with_pendant() {
  return SimpleGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 4}});
}

}  // namespace named

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
  const int ng = g.order();
  const int n = ng + h.order();
  check_capacity(n);
  std::vector<VertexMask> rows(g.rows());
  rows.reserve(static_cast<std::size_t>(n));
  for (auto r : h.rows()) rows.push_back(ng == 64 ? 0 : r << ng);
  return SimpleGraph::from_rows(std::move(rows));
}

SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h) {
  const int ng = g.order();
  const int n = ng + h.order();
  check_capacity(n);
  const VertexMask g_block = low_mask(ng);
  const VertexMask h_block = low_mask(n) & ~g_block;
  std::vector<VertexMask> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (auto r : g.rows()) rows.push_back(r | h_block);
  for (auto r : h.rows()) rows.push_back((r << ng) | g_block);
  return SimpleGraph::from_rows(std::move(rows));
}

SimpleGraph complement(const SimpleGraph& g) {
  const VertexMask all = g.all_vertices();
  std::vector<VertexMask> rows(g.rows().size());
  for (int v = 0; v < g.order(); ++v) rows[v] = all & ~g.rows()[v] & ~bit(v);
  return SimpleGraph::from_rows(std::move(rows));
}

SimpleGraph induced_subgraph(const SimpleGraph& g, VertexMask subset) {
  if (subset & ~g.all_vertices()) throw InvalidArgument("subset out of range");
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> members;
  for (VertexMask rest = subset; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    index[v] = static_cast<int>(members.size());
    members.push_back(v);
  }
  std::vector<VertexMask> rows(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (VertexMask rest = g.rows()[members[i]] & subset; rest; rest &= rest - 1) {
      rows[i] |= bit(index[std::countr_zero(rest)]);
    }
  }
  return SimpleGraph::from_rows(std::move(rows));
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const int> subset) {
  VertexMask mask = 0;
  for (int v : subset) {
    if (v < 0 || v >= g.order()) throw InvalidArgument("subset out of range");
    mask |= bit(v);
  }
  return induced_subgraph(g, mask);
}

std::vector<VertexMask> component_masks(const SimpleGraph& g, VertexMask within) {
  std::vector<VertexMask> out;
  VertexMask unseen = within;
  while (unseen) {
    VertexMask comp = unseen & (~unseen + 1);
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask rest = frontier; rest; rest &= rest - 1) {
        next |= g.rows()[std::countr_zero(rest)];
      }
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const SimpleGraph& g) {
  return component_masks(g, g.all_vertices()).size() <= 1;
}

std::vector<SimpleGraph> connected_components(const SimpleGraph& g) {
  std::vector<SimpleGraph> parts;
  for (auto mask : component_masks(g, g.all_vertices())) {
    parts.push_back(induced_subgraph(g, mask));
  }
  sort_components(parts);
  return parts;
}

std::vector<SimpleGraph> coconnected_components(const SimpleGraph& g) {
  std::vector<SimpleGraph> parts;
  for (const auto& c : connected_components(complement(g))) {
    parts.push_back(complement(c));
  }
  sort_components(parts);
  return parts;
}

namespace {

// Visits every k-subset of `pool` as a mask; stops early when visit returns true.
template <typename Visit>
bool any_subset(VertexMask pool, int k, VertexMask chosen, Visit&& visit) {
  if (k == 0) return visit(chosen);
  if (std::popcount(pool) < k) return false;
  VertexMask rest = pool;
  while (std::popcount(rest) >= k) {
    VertexMask low = rest & (~rest + 1);
    rest &= rest - 1;
    if (any_subset(rest, k - 1, chosen | low, visit)) return true;
  }
  return false;
}

bool isomorphic_unchecked(const SimpleGraph& g, const SimpleGraph& h);

}  // namespace

bool is_f_free(const SimpleGraph& g, std::span<const SimpleGraph> forbidden) {
  for (const auto& f : forbidden) {
    const int k = f.order();
    if (k > g.order()) continue;
    const int f_edges = f.edge_count();
    const auto f_degrees = f.degree_sequence();
    bool found = any_subset(g.all_vertices(), k, 0, [&](VertexMask s) {
      // Degree-sequence pruning before the isomorphism check.
      std::vector<int> deg;
      deg.reserve(static_cast<std::size_t>(k));
      int twice = 0;
      for (VertexMask rest = s; rest; rest &= rest - 1) {
        int d = std::popcount(g.rows()[std::countr_zero(rest)] & s);
        deg.push_back(d);
        twice += d;
      }
      if (twice != 2 * f_edges) return false;
      std::sort(deg.begin(), deg.end(), std::greater<>());
      if (deg != f_degrees) return false;
      return isomorphic_unchecked(induced_subgraph(g, s), f);
    });
    if (found) return false;
  }
  return true;
}

bool is_f_free(const SimpleGraph& g, std::initializer_list<SimpleGraph> forbidden) {
  return is_f_free(g, std::span<const SimpleGraph>(forbidden.begin(), forbidden.size()));
}

GraphClasses classify(const SimpleGraph& g) {
  const SimpleGraph c4 = named::c4();
  const SimpleGraph p4 = named::p4();
  GraphClasses out;
  out.cograph = is_f_free(g, {p4});
  out.trivially_perfect = out.cograph && is_f_free(g, {c4});
  out.threshold = out.trivially_perfect && is_f_free(g, {named::two_k2()});
  out.claw_free = is_f_free(g, {named::claw()});
  out.triangle_free_complement = is_f_free(complement(g), {named::k3()});
  return out;
}

namespace {

struct IsoSearch {
  const SimpleGraph& g;
  const SimpleGraph& h;
  std::vector<int> order;    // vertices of g in assignment order
  std::vector<int> image;    // g-vertex -> h-vertex
  VertexMask used = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    const int dv = g.degree(v);
    for (int w = 0; w < h.order(); ++w) {
      if ((used >> w) & 1U) continue;
      if (h.degree(w) != dv) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const int u = order[i];
        ok = g.adjacent(u, v) == h.adjacent(image[u], w);
      }
      if (!ok) continue;
      image[v] = w;
      used |= bit(w);
      if (extend(depth + 1)) return true;
      used &= ~bit(w);
    }
    return false;
  }
};

bool isomorphic_unchecked(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  IsoSearch search{g, h, {}, std::vector<int>(static_cast<std::size_t>(g.order()), -1)};
  // Assign high-degree vertices first, then follow adjacency (BFS-like) so
  // that consistency checks prune early.
  std::vector<int> vertices(static_cast<std::size_t>(g.order()));
  std::iota(vertices.begin(), vertices.end(), 0);
  VertexMask placed = 0;
  while (search.order.size() < vertices.size()) {
    int best = -1;
    int best_key = -1;
    for (int v : vertices) {
      if ((placed >> v) & 1U) continue;
      int key = std::popcount(g.neighbors(v) & placed) * 128 + g.degree(v);
      if (key > best_key) {
        best_key = key;
        best = v;
      }
    }
    search.order.push_back(best);
    placed |= bit(best);
  }
  return search.extend(0);
}

}  // namespace

bool is_isomorphic_small(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() > kIsomorphismGuard || h.order() > kIsomorphismGuard) {
    throw GuardError("is_isomorphic_small is limited to " +
                     std::to_string(kIsomorphismGuard) + " vertices");
  }
  return isomorphic_unchecked(g, h);
}

}  // namespace chromsym
