#include "ts/harness.hpp"

#include "ts/calculus.hpp"
#include "ts/error.hpp"
#include "ts/explog.hpp"

namespace ts
{

void GenConfig::validate() const
{
    if (max_terms < 1 || max_height < 1 || max_log_depth < 1 || exponent_bound < 1 || coeff_bound < 1) {
        throw InvalidArgument("generator bounds must all be at least 1");
    }
}

SeriesGenerator::SeriesGenerator(const GenConfig &config) : SeriesGenerator(config, 0) {}

SeriesGenerator::SeriesGenerator(const GenConfig &config, std::uint64_t stream) : config_(config)
{
    config_.validate();
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    rng_.seed(seq);
}

std::size_t SeriesGenerator::uniform(std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

Rat SeriesGenerator::coefficient()
{
    const long den = static_cast<long>(uniform(1, 3));
    long num = static_cast<long>(uniform(1, config_.coeff_bound));
    if (uniform(0, 1) == 0) {
        num = -num;
    }
    return Rat(num, den);
}

Rat SeriesGenerator::exponent()
{
    const long den = static_cast<long>(uniform(1, 3));
    const long span = static_cast<long>(config_.exponent_bound) * den;
    const long num = static_cast<long>(uniform(0, static_cast<std::size_t>(2 * span))) - span;
    return Rat(num, den);
}

LogMonomial SeriesGenerator::log_monomial()
{
    const std::size_t depth = uniform(0, config_.max_log_depth);
    std::vector<Rat> exps(depth + 1);
    for (auto &e : exps) {
        // Sparse vectors keep many monomials close to plain powers of x.
        if (uniform(0, 1) == 0) {
            e = exponent();
        }
    }
    return LogMonomial(std::move(exps));
}

Transseries SeriesGenerator::purely_large(unsigned max_height)
{
    const std::size_t n = uniform(1, 2);
    std::vector<Term> terms;
    const Transmonomial one;
    while (terms.size() < n) {
        Transmonomial m = monomial(max_height);
        const auto c = cmp_monomial(m, one);
        if (c == std::strong_ordering::equal) {
            continue;
        }
        terms.push_back(Term{c == std::strong_ordering::greater ? m : m.inverse(), coefficient()});
    }
    Transseries g(std::move(terms));
    return g.is_zero() ? Transseries::x() : g;
}

Transmonomial SeriesGenerator::monomial(unsigned max_height)
{
    Transmonomial m(log_monomial());
    if (max_height > 0 && uniform(0, 2) == 0) {
        m = m * Transmonomial::exp_of(purely_large(max_height - 1));
    }
    return m;
}

Transseries SeriesGenerator::series()
{
    const std::size_t n = uniform(0, config_.max_terms);
    std::vector<Term> terms;
    terms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        terms.push_back(Term{monomial(), coefficient()});
    }
    return Transseries(std::move(terms));
}

Transseries SeriesGenerator::nonzero_series()
{
    for (;;) {
        Transseries f = series();
        if (!f.is_zero()) {
            return f;
        }
    }
}

Transseries iota(const Transseries &f, unsigned budget)
{
    return f.is_zero() ? Transseries() : inverse(f, budget);
}

ValuationSplit valuation_decompose(const Transseries &f)
{
    auto [g, c, eps] = decompose(f);
    if (!g.is_zero()) {
        throw NotBounded("series is not dominated by 1");
    }
    return {std::move(c), std::move(eps)};
}

void CheckReport::merge(const CheckReport &other)
{
    cases_run += other.cases_run;
    for (const auto &[name, t] : other.tallies) {
        tallies[name].checked += t.checked;
        tallies[name].failed += t.failed;
    }
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

Json CheckReport::to_json() const
{
    Json j;
    j["seed"] = seed;
    j["cases_run"] = cases_run;
    Json t = Json::object();
    for (const auto &[name, tally] : tallies) {
        t[name] = Json{{"checked", tally.checked}, {"failed", tally.failed}};
    }
    j["tallies"] = std::move(t);
    Json f = Json::array();
    for (const auto &fail : failures) {
        f.push_back(Json{{"case", fail.case_index}, {"axiom", fail.axiom}, {"operands", fail.operands}});
    }
    j["failures"] = std::move(f);
    j["ok"] = ok();
    return j;
}

namespace
{

bool not_asymp_one(const Transseries &f)
{
    return !f.is_zero() && cmp_monomial(f.leading_monomial(), Transmonomial()) != std::strong_ordering::equal;
}

class CaseChecker
{
public:
    CaseChecker(CheckReport &report, std::size_t index, const Transseries &f, const Transseries &g)
        : report_(report), index_(index), f_(f), g_(g)
    {
    }

    void expect(const std::string &axiom, bool holds)
    {
        auto &t = report_.tallies[axiom];
        ++t.checked;
        if (!holds) {
            ++t.failed;
            report_.failures.push_back({index_, axiom, {series_to_json(f_), series_to_json(g_)}});
        }
    }

private:
    CheckReport &report_;
    std::size_t index_;
    const Transseries &f_;
    const Transseries &g_;
};

void check_case(CheckReport &report, std::size_t index, const Transseries &f, const Transseries &g,
                const Derivation &d)
{
    CaseChecker check(report, index, f, g);
    const Transseries df = d(f);
    const Transseries dg = d(g);
    const Transmonomial one;

    if (!f.is_zero() && cmp_monomial(f.leading_monomial(), one) == std::strong_ordering::greater) {
        // Test on whichever of f, -f is positive.
        check.expect("positivity", sign(df) == sign(f));
    }
    if (prec(f, Transseries(1)) || f.is_zero()) {
        check.expect("small", prec(df, Transseries(1)) || df.is_zero());
    }
    if (not_asymp_one(f) && not_asymp_one(g)) {
        check.expect("dominance", preceq(f, g) == preceq(df, dg));
    }
    bool split_ok = true;
    try {
        valuation_decompose(f);
    } catch (const NotBounded &) {
        split_ok = false;
    }
    check.expect("valuation", split_ok == preceq(f, Transseries(1)));
    check.expect("additivity", d(f + g) == df + dg);
    check.expect("leibniz", d(f * g) == df * g + f * dg);
    check.expect("constants", df.is_zero() == f.is_constant());
}

} // namespace

CheckReport check_axioms(const GenConfig &config, std::size_t n_cases, const Derivation &derivation)
{
    config.validate();
    const Derivation d = derivation ? derivation : Derivation([](const Transseries &f) { return derive(f); });
    CheckReport report;
    report.seed = config.seed;
    for (std::size_t i = 0; i < n_cases; ++i) {
        SeriesGenerator gen(config, i);
        const Transseries f = gen.series();
        const Transseries g = gen.series();
        CheckReport one;
        one.cases_run = 1;
        check_case(one, i, f, g, d);
        report.merge(one);
    }
    return report;
}

bool lambda_omega_identity(std::size_t n)
{
    const Transseries l = lambda(n);
    return derive(l) * Rat(-2) - l * l == omega_seq(n);
}

} // namespace ts
