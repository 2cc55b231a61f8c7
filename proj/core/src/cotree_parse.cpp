#include <cctype>
#include <string>
#include <vector>

#include "chromsym/cotree.hpp"
#include "chromsym/errors.hpp"

namespace chromsym {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ConstructExpr parse() {
    ConstructExpr e = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(pos_, {"end of input"});
    return e;
  }

 private:
  ConstructExpr expr() {
    skip();
    if (pos_ >= text_.size()) throw ParseError(pos_, {"K", "E", "U(", "J(", "C("});
    const char c = text_[pos_];
    switch (c) {
      case 'K':
      case 'E': {
        ++pos_;
        const int m = count();
        return c == 'K' ? ConstructExpr::complete(m) : ConstructExpr::edgeless(m);
      }
      case 'U':
      case 'J': {
        ++pos_;
        open();
        std::vector<ConstructExpr> children{expr()};
        do {
          expect(',', {"','"});
          children.push_back(expr());
        } while (!closing());
        return c == 'U' ? ConstructExpr::make_union(std::move(children))
                        : ConstructExpr::make_join(std::move(children));
      }
      case 'C': {
        ++pos_;
        open();
        ConstructExpr inner = expr();
        expect(')', {"')'"});
        return ConstructExpr::make_complement(std::move(inner));
      }
      default:
        throw ParseError(pos_, {"K", "E", "U(", "J(", "C("});
    }
  }

  // After a child of U/J: ')' ends the list, ',' continues it.
  bool closing() {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ')') {
      ++pos_;
      return true;
    }
    if (pos_ < text_.size() && text_[pos_] == ',') return false;
    throw ParseError(pos_, {"','", "')'"});
  }

  void open() { expect('(', {"'('"}); }

  void expect(char c, std::vector<std::string> expected) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(pos_, std::move(expected));
    ++pos_;
  }

  int count() {
    skip();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxVertices) throw ParseError(start, {"integer in 1.." + std::to_string(kMaxVertices)});
      ++pos_;
    }
    if (pos_ == start || value < 1) {
      throw ParseError(start, {"integer in 1.." + std::to_string(kMaxVertices)});
    }
    return static_cast<int>(value);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ConstructExpr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace chromsym
