#pragma once

#include "ellop/context.hpp"
#include "ellop/polynomial.hpp"

#include <string_view>
#include <vector>

namespace ellop {

class DiffOperator;

// Grammar: variables [A-Za-z_][A-Za-z0-9_]*, integer or rational literals
// p or p/q, operators + - * ^ with the usual precedence, parentheses.
// Whitespace is insignificant. Throws ParseError with a byte position.
Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx);

// Operator grammar: a term is a polynomial coefficient times a product of
// d-tokens; d<var>^k denotes the k-th partial derivative in <var>. An
// identifier "d"+<known variable> is always read as a d-token.
DiffOperator parse_operator(std::string_view text, const ContextPtr& ctx);

// Variable inference for standalone operator text (no context supplied):
// identifiers starting with 'd' whose tail is nonempty contribute the tail,
// all other identifiers contribute themselves, in order of first appearance.
std::vector<std::string> infer_operator_variables(std::string_view text);

}  // namespace ellop
