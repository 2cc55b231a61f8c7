#include "chromsym/errors.hpp"

#include <string>
#include <utility>

#include "chromsym/rational.hpp"

namespace chromsym {

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& detail)
    : Error([&] {
        std::string msg = "parse error at position " + std::to_string(position);
        if (!expected.empty()) {
          msg += ": expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) msg += " | ";
            msg += expected[i];
          }
        }
        if (!detail.empty()) msg += " (" + detail + ")";
        return msg;
      }()),
      position_(position),
      expected_(std::move(expected)) {}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw InvalidArgument("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw InvalidArgument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace chromsym
