// One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lo_oracle.hpp"
#include "support.hpp"
#include "surreal_oracle.hpp"
#include "ts/calculus.hpp"
#include "ts/diffpoly.hpp"
#include "ts/error.hpp"
#include "ts/explog.hpp"
#include "ts/harness.hpp"

using namespace ts;
using namespace ts::test;

namespace
{

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char *title;
    double limit_seconds;
    std::function<Outcome()> body;
};

// Counts failed checks and remembers the first one.
class Tally
{
public:
    void check(bool cond, const std::string &what)
    {
        ++checks_;
        if (!cond) {
            if (failures_ == 0) {
                first_ = what;
            }
            ++failures_;
        }
    }

    Outcome outcome(const std::string &summary) const
    {
        std::string d = summary + ", " + std::to_string(checks_) + " checks, " + std::to_string(failures_) + " failures";
        if (failures_ > 0) {
            d += "; first: " + first_;
        }
        return {failures_ == 0, d};
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
};

Outcome growth_chain()
{
    Tally t;
    const std::vector<std::pair<const char *, Transmonomial>> chain = {
        {"1", Transmonomial::one()}, {"l2", M("l2")}, {"l1", M("l1")}, {"x^(1/2)", xp(1, 2)},
        {"x", xp(1)},                {"x^2", xp(2)},  {"e^x", M("e^x")},
    };
    t.check(compare_dominance(Transseries(), Transseries(1)) == DomRel::below, "0 << 1");
    for (std::size_t i = 0; i < chain.size(); ++i) {
        for (std::size_t j = 0; j < chain.size(); ++j) {
            const auto want = i < j ? std::strong_ordering::less
                                    : (i == j ? std::strong_ordering::equal : std::strong_ordering::greater);
            t.check(cmp_monomial(chain[i].second, chain[j].second) == want,
                    std::string(chain[i].first) + " vs " + chain[j].first);
        }
    }
    return t.outcome("0 < 1 < l2 < l1 < x^(1/2) < x < x^2 < e^x");
}

Outcome telescoping()
{
    constexpr unsigned N = 10;
    const Transmonomial ex = M("e^x");
    std::vector<Term> terms;
    for (unsigned n = 0; n <= N; ++n) {
        terms.push_back({ex * xp(-static_cast<long>(n + 1)), factorial(n)});
    }
    const Transseries f(std::move(terms));
    const Transseries expected = Transseries(ex * xp(-1), 1) - Transseries(ex * xp(-12), factorial(11));
    const Transseries got = derive(f);
    Tally t;
    t.check(got == expected, print_canonical(got));
    return t.outcome("d/dx sum_{n<=10} n! e^x/x^(n+1) = e^x/x - 11! e^x/x^12");
}

Outcome exp_log_roundtrip()
{
    constexpr unsigned budget = 12;
    GenConfig cfg;
    cfg.seed = 3;
    cfg.max_terms = 3;
    SeriesGenerator gen(cfg);
    Tally t;
    for (int i = 0; i < 500; ++i) {
        // log(exp f) for f with no constant term, exp(log g) for g monic and positive
        Transseries f = gen.series();
        f = f - Transseries(f.coefficient(Transmonomial::one()));
        const Transseries back = log(exp(f, budget), budget);
        t.check(agrees_above_bounds(back, f), "log(exp(" + print_canonical(f) + "))");

        Transseries g = gen.nonzero_series();
        g = g * Transseries(g.leading_term().coeff.reciprocal());
        const Transseries g_back = exp(log(g, budget), budget);
        t.check(agrees_above_bounds(g_back, g), "exp(log(" + print_canonical(g) + "))");
    }
    return t.outcome("500 inputs, both directions, budget 12");
}

Outcome derivation_laws()
{
    GenConfig cfg;
    cfg.seed = 4;
    const CheckReport report = check_axioms(cfg, 10000);
    Tally t;
    for (const auto &[axiom, tally] : report.tallies) {
        t.check(tally.failed == 0, axiom);
    }
    for (const char *axiom : {"positivity", "small", "dominance", "valuation", "additivity", "leibniz", "constants"}) {
        const auto it = report.tallies.find(axiom);
        t.check(it != report.tallies.end() && it->second.checked > 0, std::string("no cases for ") + axiom);
    }
    t.check(report.failures.empty(), "failure list not empty");
    std::size_t applied = 0;
    for (const auto &[axiom, tally] : report.tallies) {
        applied += tally.checked;
    }
    return t.outcome(std::to_string(report.cases_run) + " cases, " + std::to_string(applied) + " law applications");
}

Outcome lambda_omega()
{
    Tally t;
    for (std::size_t n = 0; n <= 4; ++n) {
        std::vector<Term> lt;
        std::vector<Term> ot;
        for (std::size_t k = 0; k <= n; ++k) {
            lt.push_back({ell_product(k, 1), 1});
            ot.push_back({ell_product(k, 2), 1});
        }
        const std::string tag = " n=" + std::to_string(n);
        t.check(lambda(n) == Transseries(lt), "lambda" + tag);
        t.check(omega_seq(n) == Transseries(ot), "omega" + tag);
        const Transseries lhs = Transseries(-2) * derive(lambda(n)) - lambda(n) * lambda(n);
        t.check(lhs == omega_seq(n), "identity" + tag);
        t.check(identity_oracle(n) == omega_seq(n), "oracle identity" + tag);
        t.check(identity_oracle(n) == lhs, "oracle vs library" + tag);
    }
    return t.outcome("n = 0..4");
}

Outcome newton_probe()
{
    Tally t;
    const NewtonResult y = newton_poly(P("Y"), 8);
    t.check(y.outcome == NewtonResult::Outcome::stabilized && y.poly == P("Y"), "N(Y) = " + print_diffpoly(y.poly));
    const NewtonResult l = newton_poly(P("Y' + Y"), 8);
    t.check(l.outcome == NewtonResult::Outcome::stabilized && l.poly == P("Y'"),
            "N(Y' + Y) = " + print_diffpoly(l.poly));
    const ShapeVerdict shape = shape_check(l.poly);
    t.check(shape.yprime_power == 1u, "shape of N(Y' + Y)");
    const ShapeVerdict y_shape = shape_check(y.poly);
    t.check(y_shape.yprime_power == 0u, "shape of N(Y)");
    const DiffPolynomial c = conjugate(P("Y''"), S("1/x"));
    t.check(c == P("x^2*Y'' + Y'"), "conjugate = " + print_diffpoly(c));
    return t.outcome("N(Y) = Y, N(Y'+Y) = Y' of form A(Y)(Y')^1, Y'' at 1/x = x^2*Y'' + Y'");
}

Outcome surreal_exhaustive()
{
    using namespace ts::surreal;
    Tally t;
    const auto all = all_sequences(6);
    for (const auto &a : all) {
        const Rat va = oracle_value(a);
        t.check(oracle_value(neg(a)) == -va, "neg " + a.str());
        t.check(to_dyadic(a).to_rat() == va, "value " + a.str());
        for (const auto &b : all) {
            const Rat vb = oracle_value(b);
            t.check(oracle_value(add(a, b)) == va + vb, "add " + a.str() + " " + b.str());
            t.check(oracle_value(mul(a, b)) == va * vb, "mul " + a.str() + " " + b.str());
            t.check((cmp(a, b) < 0) == (va < vb) && (cmp(a, b) == 0) == (va == vb), "cmp " + a.str() + " " + b.str());
        }
    }
    std::size_t cuts = 0;
    for (const auto &a : all_sequences(8)) {
        t.check(simplest_between(left_options(a), right_options(a)) == a, "cut " + a.str());
        ++cuts;
    }
    return t.outcome(std::to_string(all.size()) + " values, " + std::to_string(cuts) + " canonical cuts");
}

Outcome simplicity()
{
    using namespace ts::surreal;
    std::mt19937_64 rng(8);
    auto random_seq = [&] {
        std::vector<Sign> s(rng() % 11);
        for (auto &x : s) {
            x = rng() % 2 ? Sign::plus : Sign::minus;
        }
        return SignSeq(std::move(s));
    };
    Tally t;
    int made = 0;
    while (made < 1000) {
        std::vector<SignSeq> pool(1 + rng() % 6);
        for (auto &s : pool) {
            s = random_seq();
        }
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        const std::size_t split = rng() % (pool.size() + 1);
        // Any split of a sorted set is a separated cut.
        std::vector<SignSeq> left(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(split));
        std::vector<SignSeq> right(pool.begin() + static_cast<std::ptrdiff_t>(split), pool.end());
        ++made;
        const SignSeq s = simplest_between(left, right);
        const Rat v = oracle_value(s);
        bool between = true;
        for (const auto &l : left) {
            between = between && oracle_value(l) < v;
        }
        for (const auto &r : right) {
            between = between && v < oracle_value(r);
        }
        t.check(between, "not between for " + s.str());
        const auto [lo, hi] = cut_bounds(left, right);
        bool shorter = false;
        for (const auto &c : all_sequences(s.size() == 0 ? 0 : s.size() - 1)) {
            if (c.size() < s.size()) {
                const Rat vc = oracle_value(c);
                shorter = shorter || ((!lo || *lo < vc) && (!hi || vc < *hi));
            }
        }
        t.check(!shorter, "shorter sequence fits the cut of " + s.str());
    }
    return t.outcome("1000 random cuts with up to 6 options of length <= 10");
}

Outcome parser_properties()
{
    Tally t;
    GenConfig cfg;
    cfg.seed = 9;
    cfg.max_terms = 5;
    cfg.max_height = 2;
    SeriesGenerator gen(cfg);
    for (int i = 0; i < 1000; ++i) {
        const Transseries f = gen.series();
        const std::string text = print_canonical(f);
        t.check(S(text) == f, text);
    }
    static const char *const pieces[] = {
        "x", "l1", "l(2)", "Y", "'", "ans", "e^", "exp(", "log(", "(", ")", "+", "-", "*", "/", "^",
        "2", "(1/2)", "(-3/2)", "0", ",", " ", "O(", "lambda(", "omega(", "1.5", "l", "#", "derive(",
    };
    constexpr std::size_t n_pieces = sizeof(pieces) / sizeof(pieces[0]);
    std::mt19937_64 rng(99);
    std::size_t rejected = 0;
    for (int i = 0; i < 100000; ++i) {
        std::string text;
        const std::size_t target = rng() % 33;
        while (text.size() < target) {
            if (rng() % 8 == 0) {
                text.push_back(static_cast<char>(rng() % 256));
            } else {
                text += pieces[rng() % n_pieces];
            }
        }
        try {
            expr::parse(text);
        } catch (const SyntaxError &e) {
            ++rejected;
            t.check(e.position() <= text.size(), "position out of range for '" + text + "'");
        } catch (const std::exception &e) {
            t.check(false, "unexpected exception for '" + text + "': " + e.what());
        }
    }
    return t.outcome("1000 round-trips, 100000 fuzz inputs (" + std::to_string(rejected) + " rejected)");
}

Outcome chain_rule()
{
    GenConfig cfg;
    cfg.seed = 10;
    SeriesGenerator gen(cfg);
    const Transmonomial ex = M("e^x");
    Tally t;
    for (int i = 0; i < 500; ++i) {
        const Transseries f = gen.series();
        const std::string tag = print_canonical(f);
        t.check(derive(upward_shift(f)) == upward_shift(derive(f)) * ex, "chain rule " + tag);
        t.check(downward_shift(upward_shift(f)) == f, "down(up f) " + tag);
        t.check(upward_shift(downward_shift(f)) == f, "up(down f) " + tag);
    }
    return t.outcome("500 random exact series");
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "growth chain ordering", 1, growth_chain},
        {2, "termwise derivative telescopes (N = 10)", 1, telescoping},
        {3, "exp/log round-trips at budget 12", 30, exp_log_roundtrip},
        {4, "derivation laws over 10^4 cases", 60, derivation_laws},
        {5, "lambda/omega formulas and identity", 5, lambda_omega},
        {6, "Newton probe and conjugation", 5, newton_probe},
        {7, "surreal arithmetic, lengths <= 6; canonical cuts, lengths <= 8", 120, surreal_exhaustive},
        {8, "simplest element of random cuts", 30, simplicity},
        {9, "print/parse round-trip and parser fuzz", 60, parser_properties},
        {10, "chain rule at exp and up/down round-trip", 10, chain_rule},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.body();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = out.ok && in_time;
        failed += pass ? 0 : 1;
        std::printf("[%s] criterion %d: %s (%.3f s, limit %g s%s): %s\n", pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    c.limit_seconds, in_time ? "" : ", over time", out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
