#include "chromsym/cotree.hpp"

#include <algorithm>
#include <bit>

#include "chromsym/errors.hpp"

namespace chromsym {

namespace {

bool child_less(const ConstructExpr& a, const ConstructExpr& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.size() != b.size()) return a.size() < b.size();
  return a.encoding() < b.encoding();
}

char tag(ConstructExpr::Kind k) {
  switch (k) {
    case ConstructExpr::Kind::disjoint_union:
      return 'U';
    case ConstructExpr::Kind::join:
      return 'J';
    case ConstructExpr::Kind::complement:
      return 'C';
    case ConstructExpr::Kind::leaf:
      break;
  }
  return 'K';
}

ConstructExpr::Kind dual(ConstructExpr::Kind k) {
  return k == ConstructExpr::Kind::join ? ConstructExpr::Kind::disjoint_union
                                        : ConstructExpr::Kind::join;
}

}  // namespace

ConstructExpr::ConstructExpr() {
  static const std::shared_ptr<const Node> shared_leaf = [] {
    auto n = std::make_shared<Node>();
    n->encoding = "K1";
    return n;
  }();
  node_ = shared_leaf;
}

ConstructExpr::ConstructExpr(Kind kind, std::vector<ConstructExpr> children) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->size = 0;
  n->has_complement = kind == Kind::complement;
  n->encoding.push_back(tag(kind));
  n->encoding.push_back('(');
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) n->encoding.push_back(',');
    n->encoding += children[i].encoding();
    n->size += children[i].size();
    n->has_complement = n->has_complement || children[i].has_complement();
  }
  n->encoding.push_back(')');
  n->children = std::move(children);
  node_ = std::move(n);
}

ConstructExpr ConstructExpr::make_union(std::vector<ConstructExpr> children) {
  if (children.size() < 2) throw InvalidArgument("a union needs at least two operands");
  return ConstructExpr(Kind::disjoint_union, std::move(children));
}

ConstructExpr ConstructExpr::make_join(std::vector<ConstructExpr> children) {
  if (children.size() < 2) throw InvalidArgument("a join needs at least two operands");
  return ConstructExpr(Kind::join, std::move(children));
}

ConstructExpr ConstructExpr::make_complement(ConstructExpr child) {
  return ConstructExpr(Kind::complement, {std::move(child)});
}

ConstructExpr ConstructExpr::complete(int m) {
  if (m < 1) throw InvalidArgument("K<m> needs m >= 1");
  if (m == 1) return leaf();
  return make_join(std::vector<ConstructExpr>(static_cast<std::size_t>(m)));
}

ConstructExpr ConstructExpr::edgeless(int m) {
  if (m < 1) throw InvalidArgument("E<m> needs m >= 1");
  if (m == 1) return leaf();
  return make_union(std::vector<ConstructExpr>(static_cast<std::size_t>(m)));
}

std::string to_string(const ConstructExpr& e, bool sugar) {
  using Kind = ConstructExpr::Kind;
  if (e.kind() == Kind::leaf) return "K1";
  if (sugar && e.kind() != Kind::complement &&
      std::all_of(e.children().begin(), e.children().end(),
                  [](const ConstructExpr& c) { return c.kind() == Kind::leaf; })) {
    return (e.kind() == Kind::join ? "K" : "E") + std::to_string(e.children().size());
  }
  if (!sugar) return e.encoding();
  std::string out(1, tag(e.kind()));
  out += '(';
  for (std::size_t i = 0; i < e.children().size(); ++i) {
    if (i) out += ',';
    out += to_string(e.children()[i], sugar);
  }
  out += ')';
  return out;
}

SimpleGraph to_graph(const ConstructExpr& e) {
  using Kind = ConstructExpr::Kind;
  if (e.size() > kMaxVertices) {
    throw CapacityError("expression has " + std::to_string(e.size()) +
                        " leaves; graphs are limited to " + std::to_string(kMaxVertices));
  }
  switch (e.kind()) {
    case Kind::leaf:
      return named::k1();
    case Kind::complement:
      return complement(to_graph(e.children().front()));
    case Kind::disjoint_union:
    case Kind::join: {
      SimpleGraph acc = to_graph(e.children().front());
      for (std::size_t i = 1; i < e.children().size(); ++i) {
        SimpleGraph next = to_graph(e.children()[i]);
        acc = e.kind() == Kind::join ? join(acc, next) : disjoint_union(acc, next);
      }
      return acc;
    }
  }
  throw InvalidArgument("unknown expression node");
}

namespace {

ConstructExpr canonical(const ConstructExpr& e, bool negated) {
  using Kind = ConstructExpr::Kind;
  switch (e.kind()) {
    case Kind::leaf:
      return e;
    case Kind::complement:
      return canonical(e.children().front(), !negated);
    case Kind::disjoint_union:
    case Kind::join:
      break;
  }
  // complement(G ⊔ H) = complement(G) + complement(H) and dually.
  const Kind kind = negated ? dual(e.kind()) : e.kind();
  std::vector<ConstructExpr> flat;
  for (const auto& child : e.children()) {
    ConstructExpr c = canonical(child, negated);
    if (c.kind() == kind) {
      flat.insert(flat.end(), c.children().begin(), c.children().end());
    } else {
      flat.push_back(std::move(c));
    }
  }
  std::sort(flat.begin(), flat.end(), child_less);
  return kind == Kind::join ? ConstructExpr::make_join(std::move(flat))
                            : ConstructExpr::make_union(std::move(flat));
}

}  // namespace

ConstructExpr canonicalize(const ConstructExpr& e) { return canonical(e, false); }

bool is_canonical(const ConstructExpr& e) {
  using Kind = ConstructExpr::Kind;
  if (e.kind() == Kind::leaf) return true;
  if (e.kind() == Kind::complement) return false;
  const auto& kids = e.children();
  if (kids.size() < 2) return false;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (kids[i].kind() == e.kind() || !is_canonical(kids[i])) return false;
    if (i > 0 && child_less(kids[i], kids[i - 1])) return false;
  }
  return true;
}

namespace {

ConstructExpr cotree_of(const SimpleGraph& g, VertexMask within) {
  if (std::popcount(within) == 1) return ConstructExpr::leaf();
  auto parts = component_masks(g, within);
  ConstructExpr::Kind kind = ConstructExpr::Kind::disjoint_union;
  if (parts.size() == 1) {
    const SimpleGraph co = complement(g);
    parts = component_masks(co, within);
    kind = ConstructExpr::Kind::join;
    if (parts.size() == 1) {
      throw NotACograph("graph contains a piece on " + std::to_string(std::popcount(within)) +
                        " vertices that is connected and co-connected (an induced P4)");
    }
  }
  std::vector<ConstructExpr> children;
  children.reserve(parts.size());
  for (auto mask : parts) children.push_back(cotree_of(g, mask));
  std::sort(children.begin(), children.end(), child_less);
  return kind == ConstructExpr::Kind::join ? ConstructExpr::make_join(std::move(children))
                                           : ConstructExpr::make_union(std::move(children));
}

}  // namespace

ConstructExpr from_cograph(const SimpleGraph& g) {
  if (g.empty()) throw InvalidArgument("the empty graph has no construction expression");
  return cotree_of(g, g.all_vertices());
}

bool cograph_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order()) {
    // Still validate both inputs.
    from_cograph(g);
    from_cograph(h);
    return false;
  }
  return from_cograph(g) == from_cograph(h);
}

std::string_view class_name(GraphClass c) {
  switch (c) {
    case GraphClass::threshold:
      return "threshold";
    case GraphClass::trivially_perfect:
      return "trivially_perfect";
    case GraphClass::cograph:
      return "cograph";
  }
  return "?";
}

GraphClass parse_graph_class(std::string_view name) {
  if (name == "threshold") return GraphClass::threshold;
  if (name == "trivially_perfect" || name == "trivially-perfect") {
    return GraphClass::trivially_perfect;
  }
  if (name == "cograph") return GraphClass::cograph;
  throw InvalidArgument("unknown graph class '" + std::string(name) +
                        "' (expected threshold, trivially_perfect, cograph)");
}

namespace {

int degree_within(const SimpleGraph& g, int v, VertexMask within) {
  return std::popcount(g.neighbors(v) & within);
}

bool strip_to_k1(const SimpleGraph& g) {
  VertexMask remaining = g.all_vertices();
  while (std::popcount(remaining) > 1) {
    const int size = std::popcount(remaining);
    bool removed = false;
    for (VertexMask rest = remaining; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = degree_within(g, v, remaining);
      if (d == 0 || d == size - 1) {
        remaining &= ~(VertexMask{1} << v);
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

bool nested(const SimpleGraph& g, VertexMask within) {
  const int size = std::popcount(within);
  if (size == 1) return true;
  const auto parts = component_masks(g, within);
  if (parts.size() > 1) {
    return std::all_of(parts.begin(), parts.end(),
                       [&](VertexMask part) { return nested(g, part); });
  }
  for (VertexMask rest = within; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (degree_within(g, v, within) == size - 1) {
      return nested(g, within & ~(VertexMask{1} << v));
    }
  }
  return false;
}

}  // namespace

bool recognize_constructive(const SimpleGraph& g, GraphClass c) {
  if (g.empty()) return false;
  switch (c) {
    case GraphClass::threshold:
      return strip_to_k1(g);
    case GraphClass::trivially_perfect:
      return nested(g, g.all_vertices());
    case GraphClass::cograph:
      try {
        from_cograph(g);
        return true;
      } catch (const NotACograph&) {
        return false;
      }
  }
  return false;
}

}  // namespace chromsym
