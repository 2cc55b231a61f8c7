#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "chromsym/polynomial.hpp"
#include "chromsym/symfunc.hpp"

namespace chromsym {

/// One line per term, `<coeff> * <basis>[<partition>]`, in partition order.
/// The zero function prints as `0`.
std::string to_text(const SymFunc& f);

/// Inverse of to_text. All lines must share one basis. Throws ParseError.
SymFunc parse_symfunc_text(std::string_view text);

/// {"basis":"mt","terms":[{"partition":[2,1],"coeff":"2"}]}
nlohmann::json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const nlohmann::json& j);

/// {"basis":"falling","terms":[{"index":3,"coeff":"1"}]}
nlohmann::json to_json(const FallingPoly& p);
FallingPoly falling_from_json(const nlohmann::json& j);

/// Basis-independent serialization (the m~ text form); equal functions give
/// equal keys.
std::string canonical_key(const SymFunc& f);

}  // namespace chromsym
