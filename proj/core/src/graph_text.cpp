#include "chromsym/graph_text.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "chromsym/errors.hpp"

namespace chromsym {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) {
      throw ParseError(pos_, {"'" + std::string(token) + "'"});
    }
    pos_ += token.size();
  }

  int integer() {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{} || value < 0) throw ParseError(pos_, {"non-negative integer"});
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SimpleGraph parse_graph(std::string_view text) {
  Scanner in(text);
  in.expect("n");
  in.expect("=");
  const std::size_t n_pos = in.pos();
  const int n = in.integer();
  in.expect(";");
  in.expect("edges");
  in.expect("=");
  std::vector<Edge> edges;
  if (!in.at_end()) {
    do {
      const std::size_t at = in.pos();
      int u = in.integer();
      in.expect("-");
      int v = in.integer();
      if (u >= n || v >= n) throw ParseError(at, {"vertex index < " + std::to_string(n)});
      if (u == v) throw ParseError(at, {"edge between distinct vertices"});
      edges.emplace_back(u, v);
      if (!in.peek(',')) break;
      in.expect(",");
    } while (true);
  }
  if (!in.at_end()) throw ParseError(in.pos(), {"','", "end of input"});
  if (n > kMaxVertices) {
    throw ParseError(n_pos, {"vertex count <= " + std::to_string(kMaxVertices)});
  }
  return SimpleGraph::from_edges(n, edges);
}

std::string format_graph(const SimpleGraph& g) {
  std::string out = "n=" + std::to_string(g.order()) + "; edges=";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

bool looks_like_graph_text(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i >= text.size() || text[i] != 'n') return false;
  ++i;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  return i < text.size() && text[i] == '=';
}

}  // namespace chromsym
