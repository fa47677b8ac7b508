#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "ts/rat.hpp"

namespace ts::expr
{

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Number {
    Rat value;
};
// x
struct Variable {
};
// l(k): l0 = x, l(k+1) = log l(k)
struct IterLog {
    std::size_t index;
};
// Y with `order` primes, only meaningful in differential polynomials.
struct DiffVar {
    std::size_t order;
};
// The previous REPL result.
struct Answer {
};

enum class UnaryOp { neg, exp, log, derive, up, down, iota, big_o };

struct Unary {
    UnaryOp op;
    ExprPtr arg;
};

enum class BinaryOp { add, sub, mul, div };

struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

// base^exponent with a rational literal exponent.
struct Power {
    ExprPtr base;
    Rat exponent;
};

// lambda(n) or omega(n)
struct Sequence {
    bool omega;
    std::size_t n;
};

struct Expr {
    std::variant<Number, Variable, IterLog, DiffVar, Answer, Unary, Binary, Power, Sequence> node;
    // Byte offset of the construct in the source text.
    std::size_t offset = 0;
};

// Grammar (whitespace-insensitive):
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?          exponent: 2, -1, (1/2), (-3/2)
//   primary := number | x | l<k> | l(k) | Y'... | ans | '(' sum ')'
//            | e '^' atom | exp(..) | log(..) | derive(..) | up(..) | down(..)
//            | iota(..) | O(..) | lambda(k) | omega(k)
// Throws SyntaxError carrying the byte offset and the expected tokens.
ExprPtr parse(std::string_view input);

struct PrefixParse {
    ExprPtr expr;
    // Offset just past the parsed expression (and past a ',' separator if one follows).
    std::size_t consumed;
};

// Parses the longest expression at the start of `input`, leaving the rest.
PrefixParse parse_prefix(std::string_view input);

// Fully parenthesized prefix form, e.g. "(+ (^ x 2) 42)".
std::string to_sexpr(const Expr &e);

bool mentions_diff_var(const Expr &e);

} // namespace ts::expr
