#include <doctest.h>

#include "support.hpp"
#include "ts/calculus.hpp"
#include "ts/error.hpp"
#include "ts/harness.hpp"

using namespace ts;
using ts::test::S;
using ts::test::xp;

TEST_CASE("iota")
{
    CHECK(iota(Transseries(), 4).is_zero());
    CHECK(iota(S("x"), 4) == S("1/x"));
    CHECK(iota(S("2"), 4) == S("1/2"));
    SeriesGenerator gen(GenConfig{}, 51);
    for (int i = 0; i < 100; ++i) {
        const Transseries f = gen.nonzero_series();
        CHECK(agrees_above_bounds(iota(iota(f, 8), 8), f));
        CHECK(agrees_above_bounds(iota(f, 8) * f, Transseries(1)));
    }
}

TEST_CASE("valuation decomposition")
{
    const ValuationSplit a = valuation_decompose(S("3 + 1/x"));
    CHECK(a.constant == Rat(3));
    CHECK(a.infinitesimal == S("1/x"));
    const ValuationSplit z = valuation_decompose(Transseries());
    CHECK(z.constant.is_zero());
    CHECK(z.infinitesimal.is_zero());
    CHECK_THROWS_AS(valuation_decompose(S("x")), NotBounded);
    CHECK_THROWS_AS(valuation_decompose(S("l5 + 1")), NotBounded);

    SeriesGenerator gen(GenConfig{}, 52);
    for (int i = 0; i < 200; ++i) {
        const Transseries f = decompose(gen.series()).infinitesimal + Transseries(gen.coefficient());
        const ValuationSplit v = valuation_decompose(f);
        CHECK(Transseries(v.constant) + v.infinitesimal == f);
        const Rat other = v.constant + gen.coefficient();
        if (other != v.constant) {
            CHECK_FALSE(prec(f - Transseries(other), Transseries(1)));
        }
    }
}

TEST_CASE("generator")
{
    GenConfig bad;
    bad.max_terms = 0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    SeriesGenerator a(GenConfig{}, 3);
    SeriesGenerator b(GenConfig{}, 3);
    for (int i = 0; i < 50; ++i) {
        CHECK(a.series() == b.series());
    }
    SeriesGenerator c(GenConfig{}, 4);
    for (int i = 0; i < 50; ++i) {
        const Transseries f = c.purely_large(1);
        CHECK(f.is_purely_large());
        CHECK(f.terms().size() <= GenConfig{}.max_terms);
    }
}

TEST_CASE("axiom checks pass on the engine")
{
    const CheckReport empty = check_axioms(GenConfig{}, 0);
    CHECK(empty.cases_run == 0);
    CHECK(empty.failures.empty());
    CHECK(empty.ok());

    const CheckReport report = check_axioms(GenConfig{}, 1000);
    CHECK(report.cases_run == 1000);
    CHECK(report.ok());
    for (const char *axiom : {"positivity", "small", "dominance", "valuation", "additivity", "leibniz", "constants"}) {
        REQUIRE(report.tallies.count(axiom) == 1);
        CHECK(report.tallies.at(axiom).checked > 0);
        CHECK(report.tallies.at(axiom).failed == 0);
    }
    const Json j = report.to_json();
    CHECK(j["seed"] == 1);
    CHECK(j["cases_run"] == 1000);
    CHECK(j["failures"].empty());
}

TEST_CASE("axiom checks detect a corrupted derivation")
{
    // Drops the exp-part contribution from monomial derivatives.
    const Derivation broken = [](const Transseries &f) {
        std::vector<Term> out;
        for (const Term &t : f.terms()) {
            const Transmonomial log_only(t.monomial.logpart());
            const Transseries d = derive(log_only) * Transseries(t.monomial / log_only, t.coeff);
            out.insert(out.end(), d.terms().begin(), d.terms().end());
        }
        return Transseries(out);
    };
    const CheckReport report = check_axioms(GenConfig{}, 300, broken);
    CHECK_FALSE(report.ok());
    REQUIRE_FALSE(report.failures.empty());
    CHECK_FALSE(report.failures[0].operands.empty());
    // failures carry enough to rebuild the operands
    CHECK_NOTHROW(series_from_json(report.failures[0].operands[0]));

    const Derivation doubled = [](const Transseries &f) { return derive(f) * Transseries(2) + Transseries(xp(-1)) * Transseries(f.is_zero() ? 0 : 1); };
    CHECK_FALSE(check_axioms(GenConfig{}, 100, doubled).ok());
}

TEST_CASE("reports are deterministic and merge associatively")
{
    GenConfig cfg;
    cfg.seed = 77;
    const CheckReport a = check_axioms(cfg, 50);
    const CheckReport b = check_axioms(cfg, 50);
    CHECK(a.to_json() == b.to_json());

    CheckReport x = a;
    CheckReport y = b;
    CheckReport z = a;
    CheckReport left = x;
    left.merge(y);
    left.merge(z);
    CheckReport yz = y;
    yz.merge(z);
    CheckReport right = x;
    right.merge(yz);
    CHECK(left.to_json() == right.to_json());
    CHECK(left.cases_run == 150);
}

TEST_CASE("lambda-omega identity")
{
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(lambda_omega_identity(n));
    }
}
