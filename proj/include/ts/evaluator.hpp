#pragma once

#include <optional>

#include "ts/diffpoly.hpp"
#include "ts/expr.hpp"
#include "ts/series.hpp"

namespace ts
{

struct EvalContext {
    unsigned budget = 8;
    // Value of `ans`.
    std::optional<Transseries> answer;
};

// Largest l(k), lambda(n) and omega(n) index accepted.
inline constexpr std::size_t max_sequence_index = 256;

// Evaluates an expression without Y. Inexact steps (division by a multi-term
// series, exp, log, fractional powers) expand to ctx.budget terms.
Transseries evaluate(const expr::Expr &e, const EvalContext &ctx);

// Evaluates a differential polynomial literal: sums and products of series
// and Y, Y', ... with nonnegative integer powers.
DiffPolynomial evaluate_poly(const expr::Expr &e, const EvalContext &ctx);

} // namespace ts
