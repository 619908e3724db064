#pragma once

#include <string>
#include <string_view>

#include "chiralkit/exactlin/json_io.hpp"
#include "chiralkit/jet/diffpoly.hpp"

namespace chiralkit::jet {

using exactlin::Json;

/// Infix grammar:
///   expr    := term (('+' | '-') term)*
///   term    := factor (('*' | '/') factor)*      division by constants only
///   factor  := ('-' | '+') factor | atom ('^' integer)?
///   atom    := integer | 'i' | jet | symbol | '(' expr ')'
///   jet     := ('dt.' | 'ds.' | 'dz.' | 'dzb.')* ('x' | 'p') index
///   symbol  := 'f' 'p'* | 'g' 'p'* | 'e(' integer ')'
/// Field indices are 1-based; dz./dzb. expand to ½(D_τ ∓ i D_σ).
DiffPoly parse_expr(std::string_view text);

/// Canonical text that parse_expr reads back to the same value.
std::string to_text(const DiffPoly& p);

Json to_json(const JetVar& v);
JetVar jet_from_json(const Json& j);
Json to_json(const DiffPoly& p);
DiffPoly diffpoly_from_json(const Json& j);

}  // namespace chiralkit::jet
