#pragma once

#include <string_view>

#include <doctest.h>

#include "ts/evaluator.hpp"
#include "ts/expr.hpp"
#include "ts/printer.hpp"
#include "ts/series.hpp"

namespace ts::test
{

inline Transseries S(std::string_view text, unsigned budget = 8)
{
    return evaluate(*expr::parse(text), EvalContext{budget, {}});
}

inline Transmonomial M(std::string_view text)
{
    return S(text).leading_monomial();
}

inline DiffPolynomial P(std::string_view text, unsigned budget = 8)
{
    return evaluate_poly(*expr::parse(text), EvalContext{budget, {}});
}

// x^e as a monomial
inline Transmonomial xp(long num, long den = 1)
{
    return Transmonomial::x_pow(Rat(num, den));
}

} // namespace ts::test

namespace doctest
{
template <>
struct StringMaker<ts::Transseries> {
    static String convert(const ts::Transseries &f) { return ts::print_canonical(f).c_str(); }
};
template <>
struct StringMaker<ts::Transmonomial> {
    static String convert(const ts::Transmonomial &m) { return ts::print_monomial(m).c_str(); }
};
template <>
struct StringMaker<ts::Rat> {
    static String convert(const ts::Rat &r) { return r.str().c_str(); }
};
template <>
struct StringMaker<ts::DiffPolynomial> {
    static String convert(const ts::DiffPolynomial &p) { return ts::print_diffpoly(p).c_str(); }
};
} // namespace doctest
