#include "chromsym/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "chromsym/errors.hpp"

namespace chromsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidArgument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::repeated(int part, int count) {
  if (count < 0) throw InvalidArgument("negative repetition count");
  return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Integer Partition::multiplicity_factorial() const {
  Integer out = 1;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    out *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return out;
}

Partition Partition::without_part(int part) const {
  auto it = std::find(parts_.begin(), parts_.end(), part);
  if (it == parts_.end()) {
    throw InvalidArgument("part " + std::to_string(part) + " not present in " +
                          to_string(*this));
  }
  std::vector<int> rest(parts_.begin(), it);
  rest.insert(rest.end(), std::next(it), parts_.end());
  return Partition(std::move(rest));
}

Partition multiset_union(const Partition& a, const Partition& b) {
  std::vector<int> merged;
  merged.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(merged), std::greater<>());
  return Partition(std::move(merged));
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  if (p.empty()) return Partition();
  const int largest = p.parts().front();
  out.reserve(static_cast<std::size_t>(largest));
  for (int i = 1; i <= largest; ++i) {
    out.push_back(static_cast<int>(std::count_if(p.parts().begin(), p.parts().end(),
                                                 [i](int part) { return part >= i; })));
  }
  return Partition(std::move(out));
}

Dominance compare_dominance(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) {
    throw InvalidArgument("dominance needs equal weights: " + to_string(a) + " vs " +
                          to_string(b));
  }
  bool a_smaller = false;
  bool b_smaller = false;
  int sa = 0;
  int sb = 0;
  const std::size_t len = std::max(a.parts().size(), b.parts().size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.parts().size() ? a.parts()[i] : 0;
    sb += i < b.parts().size() ? b.parts()[i] : 0;
    if (sa < sb) a_smaller = true;
    if (sb < sa) b_smaller = true;
  }
  if (a_smaller && b_smaller) return Dominance::incomparable;
  if (a_smaller) return Dominance::below;
  if (b_smaller) return Dominance::above;
  return Dominance::equal;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  auto d = compare_dominance(a, b);
  return d == Dominance::equal || d == Dominance::below;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidArgument("partitions_of needs n >= 0");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Successor in reverse-lex order: take the rightmost part > 1, decrement
  // it, and redistribute the remainder greedily.
  std::vector<int> parts{n};
  while (true) {
    out.emplace_back(parts);
    int ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) break;
    int k = --parts.back();
    int rest = ones + 1;
    while (rest > k) {
      parts.push_back(k);
      rest -= k;
    }
    if (rest > 0) parts.push_back(rest);
  }
  return out;
}

long long partition_count(int n) {
  if (n < 0) return 0;
  std::vector<long long> count(static_cast<std::size_t>(n) + 1, 0);
  count[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int total = part; total <= n; ++total) count[total] += count[total - part];
  }
  return count[n];
}

std::string to_string(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  out += ']';
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool take(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  int positive() {
    skip();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || value < 1) throw ParseError(pos, {"positive integer"});
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }
};

}  // namespace

Partition parse_partition(std::string_view text) {
  Cursor in{text};
  std::vector<int> parts;
  if (in.take('[')) {
    if (!in.take(']')) {
      do {
        parts.push_back(in.positive());
      } while (in.take(','));
      if (!in.take(']')) throw ParseError(in.pos, {"','", "']'"});
    }
  } else if (in.take('<')) {
    while (!in.take('>')) {
      int part = in.positive();
      if (!in.take('^')) throw ParseError(in.pos, {"'^'"});
      in.skip();
      int count = 0;
      auto [ptr, ec] = std::from_chars(text.data() + in.pos, text.data() + text.size(), count);
      if (ec != std::errc{} || count < 0) throw ParseError(in.pos, {"multiplicity"});
      in.pos = static_cast<std::size_t>(ptr - text.data());
      parts.insert(parts.end(), static_cast<std::size_t>(count), part);
      in.take(',');
      in.skip();
      if (in.pos >= text.size()) throw ParseError(in.pos, {"'>'"});
    }
  } else {
    throw ParseError(in.pos, {"'['", "'<'"});
  }
  in.skip();
  if (in.pos != text.size()) throw ParseError(in.pos, {"end of input"});
  return Partition(std::move(parts));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace chromsym
