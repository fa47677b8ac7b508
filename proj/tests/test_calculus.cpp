#include <doctest.h>

#include "support.hpp"
#include "ts/calculus.hpp"
#include "ts/harness.hpp"

using namespace ts;
using ts::test::M;
using ts::test::S;
using ts::test::xp;

namespace
{

// sum_{n <= N} n! e^x x^-(n+1)
Transseries factorial_sum(unsigned N)
{
    const Transmonomial ex = M("e^x");
    std::vector<Term> terms;
    for (unsigned n = 0; n <= N; ++n) {
        terms.push_back({ex * xp(-static_cast<long>(n + 1)), factorial(n)});
    }
    return Transseries(std::move(terms));
}

} // namespace

TEST_CASE("derivative examples")
{
    CHECK(derive(S("x^2")) == S("2*x"));
    CHECK(derive(S("l2")) == S("1/(x*l1)"));
    CHECK(derive(S("l1")) == S("1/x"));
    CHECK(derive(S("x^(1/2)")) == S("1/(2*x^(1/2))"));
    CHECK(derive(S("e^(x^2)")) == S("2*x*e^(x^2)"));
    CHECK(derive(S("e^(e^x)")) == S("e^(e^x + x)"));
    CHECK(derive(S("7")).is_zero());
    CHECK(derive(S("x*l1")) == S("l1 + 1"));
    // l3' = 1/(x l1 l2)
    CHECK(derive(S("l3")) == S("1/(x*l1*l2)"));
}

TEST_CASE("termwise derivative telescopes")
{
    for (unsigned N : {0u, 1u, 4u, 10u, 15u}) {
        const Transseries expected = S("e^x/x") - Transseries(M("e^x") * xp(-static_cast<long>(N + 2)), factorial(N + 1));
        CHECK(derive(factorial_sum(N)) == expected);
    }
}

TEST_CASE("derivative of a truncated series")
{
    const Transseries f = S("x + 1/x") + Transseries::big_o(xp(-3));
    const Transseries df = derive(f);
    CHECK(df.bound() == xp(-3));
    CHECK(df.terms() == S("1 - 1/x^2").terms());
    const Transseries g = S("e^x") + Transseries::big_o(M("e^x/x"));
    CHECK(derive(g).bound() == M("e^x/x"));
}

TEST_CASE("derivation laws on random series")
{
    GenConfig cfg;
    cfg.max_height = 2;
    SeriesGenerator gen(cfg, 31);
    for (int i = 0; i < 150; ++i) {
        const Transseries f = gen.series();
        const Transseries g = gen.series();
        CHECK(derive(f + g) == derive(f) + derive(g));
        CHECK(derive(f * g) == derive(f) * g + f * derive(g));
        CHECK(derive(f).is_zero() == f.is_constant());
        if (!f.is_zero() && f.leading_monomial() > Transmonomial::one() && sign(f) > 0) {
            CHECK(sign(derive(f)) == 1);
        }
    }
}

TEST_CASE("shifts")
{
    CHECK(upward_shift(S("l1")) == S("x"));
    CHECK(upward_shift(S("x")) == S("e^x"));
    CHECK(upward_shift(S("x^2 + l1")) == S("e^(2*x) + x"));
    CHECK(upward_shift(S("e^x")) == S("e^(e^x)"));
    CHECK(downward_shift(S("x")) == S("l1"));
    CHECK(downward_shift(S("e^x")) == S("x"));
    CHECK(downward_shift(S("e^(2*x)")) == S("x^2"));
    CHECK(downward_shift(S("e^(x^2)*x")) == S("e^(l1^2)*l1"));
    CHECK(downward_shift(S("e^(e^x - x)")) == S("e^x/x"));
}

TEST_CASE("chain rule at exp and shift round trip")
{
    GenConfig cfg;
    cfg.max_height = 2;
    SeriesGenerator gen(cfg, 32);
    const Transseries ex = S("e^x");
    for (int i = 0; i < 150; ++i) {
        const Transseries f = gen.series();
        CHECK(derive(upward_shift(f)) == upward_shift(derive(f)) * ex);
        CHECK(downward_shift(upward_shift(f)) == f);
        CHECK(upward_shift(downward_shift(f)) == f);
    }
}
