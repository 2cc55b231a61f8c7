#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "chromsym/graph.hpp"

namespace chromsym {

/// Construction expression over K1, disjoint union, join and complement.
///
/// Expressions are immutable and share subtrees. The canonical form
/// (see canonicalize) has no complement nodes, at least two children per
/// internal node, alternating Union/Join levels, and children sorted by
/// (kind, leaf count, encoding). Two cographs are isomorphic exactly when
/// their canonical expressions are equal.
class ConstructExpr {
 public:
  enum class Kind { leaf, disjoint_union, join, complement };

  /// K1.
  ConstructExpr();

  static ConstructExpr leaf() { return ConstructExpr(); }
  static ConstructExpr make_union(std::vector<ConstructExpr> children);
  static ConstructExpr make_join(std::vector<ConstructExpr> children);
  static ConstructExpr make_complement(ConstructExpr child);

  /// K_m (join of m leaves) and its complement E_m; m >= 1.
  static ConstructExpr complete(int m);
  static ConstructExpr edgeless(int m);

  Kind kind() const noexcept { return node_->kind; }
  const std::vector<ConstructExpr>& children() const noexcept { return node_->children; }
  /// Number of leaves, i.e. vertices of the evaluated graph.
  int size() const noexcept { return node_->size; }
  bool has_complement() const noexcept { return node_->has_complement; }

  /// Structural encoding with K1/U/J/C only, children in stored order.
  const std::string& encoding() const noexcept { return node_->encoding; }

  friend bool operator==(const ConstructExpr& a, const ConstructExpr& b) {
    return a.node_ == b.node_ || a.encoding() == b.encoding();
  }

 private:
  struct Node {
    Kind kind = Kind::leaf;
    std::vector<ConstructExpr> children;
    int size = 1;
    bool has_complement = false;
    std::string encoding;
  };

  ConstructExpr(Kind kind, std::vector<ConstructExpr> children);

  std::shared_ptr<const Node> node_;
};

/// Grammar (whitespace-insensitive):
///   expr := "K1" | "K"INT | "E"INT | "U(" expr ("," expr)+ ")"
///         | "J(" expr ("," expr)+ ")" | "C(" expr ")"
/// K<m> and E<m> expand to a join / union of m leaves. Throws ParseError.
ConstructExpr parse_expr(std::string_view text);

/// Printer. With `sugar`, joins/unions whose children are all leaves print as
/// K<m>/E<m>; without it only K1, U, J and C appear.
std::string to_string(const ConstructExpr& e, bool sugar = true);

/// Evaluates the expression. Throws CapacityError beyond 64 vertices.
SimpleGraph to_graph(const ConstructExpr& e);

/// Pushes complements to the leaves with the De Morgan identities, flattens
/// nested nodes of the same kind and sorts children. Idempotent.
ConstructExpr canonicalize(const ConstructExpr& e);

/// True iff e already satisfies every canonical-form invariant.
bool is_canonical(const ConstructExpr& e);

/// Canonical cotree of a cograph by component / co-component recursion.
/// Throws NotACograph when some induced piece with >= 2 vertices is both
/// connected and co-connected.
ConstructExpr from_cograph(const SimpleGraph& g);

/// Compares canonical cotrees. Throws NotACograph if either input is not a cograph.
bool cograph_isomorphic(const SimpleGraph& g, const SimpleGraph& h);

enum class GraphClass { threshold, trivially_perfect, cograph };

std::string_view class_name(GraphClass c);  // "threshold", "trivially_perfect", "cograph"
GraphClass parse_graph_class(std::string_view name);

/// Whether g is generated by the construction rules of the class:
/// threshold from K1 by adding isolated or dominating vertices;
/// trivially perfect from K1 by disjoint unions and adding a dominating vertex;
/// cograph from K1 by disjoint unions and complements.
bool recognize_constructive(const SimpleGraph& g, GraphClass c);

inline constexpr int kCographEnumerationLimit = 10;
inline constexpr int kNestedEnumerationLimit = 12;

/// One canonical expression per isomorphism class with n leaves, sorted by
/// encoding. Throws GuardError when n exceeds the per-class limit.
std::vector<ConstructExpr> enumerate_class(GraphClass c, int n);

}  // namespace chromsym
