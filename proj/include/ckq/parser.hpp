#pragma once

#include <stdexcept>
#include <string>

#include "ckq/nc.hpp"

namespace ckq {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Symbols available while parsing: j1..j{params}, the macro J, i, v,
/// cosh/sinh/tanh(c*J*v) and the alphabet's generator names.
struct ParseContext {
    std::size_t params = 0;
    JMonomial J;
    const Alphabet* alphabet = nullptr;
};

/// Grammar: sums, products, '/' by scalars, integer powers "^2" or "^(-2)",
/// commutators "[a,b]", parentheses.
ExprPoly parse_expression(const std::string& text, const ParseContext& ctx);
/// "lhs = rhs" as lhs - rhs.
ExprPoly parse_equation(const std::string& text, const ParseContext& ctx);

}  // namespace ckq
