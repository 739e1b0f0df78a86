#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ics/poset.hpp"

namespace ics {

/// Error with the offset into the input where parsing failed.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Syntax tree for the poset expression language:
///   expr := chain(INT) | antichain(INT) | osum(args) | dsum(args)
///         | prod(expr, expr {, expr}) | diamonds(INT, INT) | divisor(INT)
///   args := item {, item}       item := expr | INT
/// A bare INT inside osum/dsum abbreviates antichain(INT). Integers are
/// decimal and at least 1; whitespace is insignificant.
struct PosetExpr {
    enum class Kind { chain, antichain, osum, dsum, prod, diamonds, divisor };

    Kind kind = Kind::chain;
    std::vector<long long> ints;     // the INT arguments
    std::vector<PosetExpr> children; // the sub-expressions

    bool operator==(const PosetExpr&) const = default;
};

/// Parses the full input; trailing garbage is an error. Bound and arity
/// violations are reported as ParseError at the offending token.
PosetExpr parse_expr(const std::string& text);

/// Canonical text form; parse(pretty(e)) == e.
std::string pretty(const PosetExpr& e);

Poset evaluate(const PosetExpr& e);

} // namespace ics
