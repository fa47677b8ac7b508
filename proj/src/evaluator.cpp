#include "ts/evaluator.hpp"

#include <variant>

#include "ts/calculus.hpp"
#include "ts/error.hpp"
#include "ts/explog.hpp"
#include "ts/harness.hpp"

namespace ts
{

namespace
{

using namespace expr;

constexpr std::size_t max_terms = 1u << 14;
constexpr std::size_t max_coeff_bits = 1u << 20;

std::size_t coeff_bits(const Transseries &f)
{
    std::size_t bits = 0;
    for (const Term &t : f.terms()) {
        bits = std::max(bits, mpz_sizeinbase(t.coeff.num().get_mpz_t(), 2) + mpz_sizeinbase(t.coeff.den().get_mpz_t(), 2));
    }
    return bits;
}

void check_size(std::size_t terms, std::size_t bits)
{
    if (terms > max_terms) {
        throw InvalidArgument("result would exceed " + std::to_string(max_terms) + " terms");
    }
    if (bits > max_coeff_bits) {
        throw InvalidArgument("coefficients would exceed " + std::to_string(max_coeff_bits) + " bits");
    }
}

std::size_t checked_index(std::size_t n)
{
    if (n > max_sequence_index) {
        throw InvalidArgument("index " + std::to_string(n) + " exceeds " + std::to_string(max_sequence_index));
    }
    return n;
}

Transseries power(const Transseries &base, const Rat &r, unsigned budget)
{
    if (r.is_integer()) {
        const mpz_class n = abs(r.num());
        const bool multi = base.terms().size() > 1 || !base.is_exact();
        if (n > (multi ? 64 : 4096)) {
            throw InvalidArgument("integer exponent " + r.str() + " out of range");
        }
        const std::size_t k = n.get_ui();
        check_size(multi ? base.terms().size() * k : 1, coeff_bits(base) * k);
    } else if (abs(r.num()) > 4096 || r.den() > 4096) {
        throw InvalidArgument("exponent " + r.str() + " out of range");
    }
    return pow(base, r, budget);
}

Transseries divide(const Transseries &a, const Transseries &b, unsigned budget)
{
    if (b.is_exact() && b.terms().size() == 1) {
        const Term &t = b.terms()[0];
        return a * t.monomial.inverse() * t.coeff.reciprocal();
    }
    return a * inverse(b, budget);
}

Transseries multiply(const Transseries &a, const Transseries &b)
{
    check_size((a.terms().size() + 1) * (b.terms().size() + 1), coeff_bits(a) + coeff_bits(b));
    return a * b;
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Transseries unary(UnaryOp op, const Transseries &f, unsigned budget)
{
    switch (op) {
    case UnaryOp::neg: return -f;
    case UnaryOp::exp: return exp(f, budget);
    case UnaryOp::log: return log(f, budget);
    case UnaryOp::derive: return derive(f);
    case UnaryOp::up: return upward_shift(f);
    case UnaryOp::down: return downward_shift(f);
    case UnaryOp::iota: return iota(f, budget);
    case UnaryOp::big_o:
        if (f.is_zero()) {
            return {};
        }
        return Transseries::big_o(f.magnitude());
    }
    throw InvalidArgument("unknown operator");
}

} // namespace

Transseries evaluate(const Expr &e, const EvalContext &ctx)
{
    return std::visit(
        overloaded{
            [](const Number &n) { return Transseries(n.value); },
            [](const Variable &) { return Transseries::x(); },
            [](const IterLog &l) { return Transseries::ell(checked_index(l.index)); },
            [](const DiffVar &) -> Transseries {
                throw InvalidArgument("Y may only appear in differential polynomials");
            },
            [&](const Answer &) -> Transseries {
                if (!ctx.answer) {
                    throw InvalidArgument("no previous result");
                }
                return *ctx.answer;
            },
            [&](const Unary &u) { return unary(u.op, evaluate(*u.arg, ctx), ctx.budget); },
            [&](const Binary &b) {
                const Transseries lhs = evaluate(*b.lhs, ctx);
                const Transseries rhs = evaluate(*b.rhs, ctx);
                switch (b.op) {
                case BinaryOp::add: return lhs + rhs;
                case BinaryOp::sub: return lhs - rhs;
                case BinaryOp::mul: return multiply(lhs, rhs);
                case BinaryOp::div: return divide(lhs, rhs, ctx.budget);
                }
                throw InvalidArgument("unknown operator");
            },
            [&](const Power &p) { return power(evaluate(*p.base, ctx), p.exponent, ctx.budget); },
            [](const Sequence &s) {
                const std::size_t n = checked_index(s.n);
                return s.omega ? omega_seq(n) : lambda(n);
            },
        },
        e.node);
}

DiffPolynomial evaluate_poly(const Expr &e, const EvalContext &ctx)
{
    if (!mentions_diff_var(e)) {
        return DiffPolynomial(evaluate(e, ctx));
    }
    return std::visit(
        overloaded{
            [](const DiffVar &d) { return DiffPolynomial::variable(checked_index(d.order)); },
            [&](const Unary &u) {
                if (u.op != UnaryOp::neg) {
                    throw InvalidArgument("only +, -, * and integer powers apply to Y");
                }
                return -evaluate_poly(*u.arg, ctx);
            },
            [&](const Binary &b) {
                switch (b.op) {
                case BinaryOp::add: return evaluate_poly(*b.lhs, ctx) + evaluate_poly(*b.rhs, ctx);
                case BinaryOp::sub: return evaluate_poly(*b.lhs, ctx) - evaluate_poly(*b.rhs, ctx);
                case BinaryOp::mul: return evaluate_poly(*b.lhs, ctx) * evaluate_poly(*b.rhs, ctx);
                case BinaryOp::div:
                    if (mentions_diff_var(*b.rhs)) {
                        throw InvalidArgument("cannot divide by a differential polynomial");
                    }
                    return evaluate_poly(*b.lhs, ctx) * divide(Transseries(1), evaluate(*b.rhs, ctx), ctx.budget);
                }
                throw InvalidArgument("unknown operator");
            },
            [&](const Power &p) {
                if (!p.exponent.is_integer() || p.exponent.sign() < 0 || p.exponent > Rat(16)) {
                    throw InvalidArgument("differential polynomials take integer powers 0..16");
                }
                return evaluate_poly(*p.base, ctx).pow(static_cast<unsigned>(p.exponent.num().get_ui()));
            },
            [](const auto &) -> DiffPolynomial { throw InvalidArgument("malformed differential polynomial"); },
        },
        e.node);
}

} // namespace ts
