#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidcert/rational.hpp"

namespace braidcert {

using Bindings = std::vector<std::pair<std::string, Rational>>;

// Exact evaluator for the small inequality language used in certificates:
//   numbers (integers or p/q), bound names, + - * /, unary -, parentheses,
//   abs floor ceil gcd min max, comparisons == != < <= > >=, && || and prefix !.
// Comparisons and connectives yield 1 or 0. Throws ParseError on bad input
// or unbound names.
Rational evaluate(std::string_view expression, const Bindings& bindings);

// evaluate(...) != 0.
bool holds(std::string_view expression, const Bindings& bindings);

}  // namespace braidcert
