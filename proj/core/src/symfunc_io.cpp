#include "chromsym/symfunc_io.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "chromsym/errors.hpp"

namespace chromsym {

std::string to_text(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const std::string basis(basis_name(f.basis()));
  for (const auto& [lambda, c] : f.terms()) {
    if (!out.empty()) out += '\n';
    out += c.get_str() + " * " + basis + to_string(lambda);
  }
  return out;
}

SymFunc parse_symfunc_text(std::string_view text) {
  std::optional<Basis> basis;
  SymFunc::Terms terms;
  std::size_t line_start = 0;
  bool saw_zero = false;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    const std::size_t offset = line_start;
    line_start = line_end + 1;

    std::size_t b = 0;
    while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    std::size_t e = line.size();
    while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
    line = line.substr(b, e - b);
    if (line.empty()) continue;
    if (line == "0") {
      saw_zero = true;
      continue;
    }

    const std::size_t star = line.find('*');
    if (star == std::string_view::npos) throw ParseError(offset + b, {"'*'"});
    std::string coeff_text(line.substr(0, star));
    while (!coeff_text.empty() && std::isspace(static_cast<unsigned char>(coeff_text.back()))) {
      coeff_text.pop_back();
    }
    Rational coeff;
    try {
      coeff = parse_rational(coeff_text);
    } catch (const InvalidArgument&) {
      throw ParseError(offset + b, {"rational coefficient"});
    }

    std::string_view rest = line.substr(star + 1);
    std::size_t r = 0;
    while (r < rest.size() && std::isspace(static_cast<unsigned char>(rest[r]))) ++r;
    const std::size_t bracket = rest.find('[', r);
    if (bracket == std::string_view::npos) throw ParseError(offset + b + star + 1 + r, {"'['"});
    Basis term_basis;
    try {
      term_basis = parse_basis(rest.substr(r, bracket - r));
    } catch (const InvalidArgument&) {
      throw ParseError(offset + b + star + 1 + r, {"m", "mt", "p", "e"});
    }
    if (basis && *basis != term_basis) {
      throw ParseError(offset + b + star + 1 + r, {std::string(basis_name(*basis))},
                       "mixed bases");
    }
    basis = term_basis;
    Partition lambda = parse_partition(rest.substr(bracket));
    terms[lambda] += coeff;
  }
  if (!basis && !saw_zero) throw ParseError(0, {"term", "0"});
  return SymFunc(basis.value_or(Basis::m_tilde), std::move(terms));
}

nlohmann::json to_json(const SymFunc& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lambda, c] : f.terms()) {
    terms.push_back({{"partition", lambda.parts()}, {"coeff", c.get_str()}});
  }
  return {{"basis", std::string(basis_name(f.basis()))}, {"terms", std::move(terms)}};
}

SymFunc symfunc_from_json(const nlohmann::json& j) {
  try {
    SymFunc f(parse_basis(j.at("basis").get<std::string>()));
    for (const auto& term : j.at("terms")) {
      f.add(Partition(term.at("partition").get<std::vector<int>>()),
            parse_rational(term.at("coeff").get<std::string>()));
    }
    return f;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed symmetric function JSON: ") + ex.what());
  }
}

nlohmann::json to_json(const FallingPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [l, c] : p.coeffs()) terms.push_back({{"index", l}, {"coeff", c.get_str()}});
  return {{"basis", "falling"}, {"terms", std::move(terms)}};
}

FallingPoly falling_from_json(const nlohmann::json& j) {
  try {
    if (j.at("basis").get<std::string>() != "falling") {
      throw InvalidArgument("expected basis \"falling\"");
    }
    FallingPoly p;
    for (const auto& term : j.at("terms")) {
      p.add(term.at("index").get<int>(), parse_rational(term.at("coeff").get<std::string>()));
    }
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed falling polynomial JSON: ") + ex.what());
  }
}

std::string canonical_key(const SymFunc& f) { return to_text(to_m_tilde(f)); }

}  // namespace chromsym
