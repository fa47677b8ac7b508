#include "ts/explog.hpp"

#include <vector>

#include "ts/error.hpp"

namespace ts
{

namespace
{

void require_budget(unsigned budget)
{
    if (budget == 0) {
        throw InvalidArgument("expansion budget must be positive");
    }
}

// (l0 l1 ... ln)^power
Transmonomial ell_product(std::size_t n, long power)
{
    return Transmonomial(LogMonomial(std::vector<Rat>(n + 1, Rat(power))));
}

Transseries ell_product_sum(std::size_t n, long power)
{
    std::vector<Term> terms;
    terms.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        terms.push_back(Term{ell_product(k, power), Rat(1)});
    }
    return Transseries::from_sorted(std::move(terms));
}

PredVerdict cut_pred(const Transseries &f, std::size_t budget, long power)
{
    if (!f.is_exact()) {
        throw InexactArgument("cut predicates need an exact argument");
    }
    for (std::size_t n = 0; n <= budget; ++n) {
        if (sign(ell_product_sum(n, power) - f) > 0) {
            return {PredVerdict::Outcome::yes, n};
        }
    }
    // Every later partial sum differs from the last one by terms
    // <= (l0 ... l(budget+1))^power.
    const Transseries gap = f - ell_product_sum(budget, power);
    if (!gap.is_zero() && sign(gap) > 0 &&
        cmp_monomial(gap.leading_monomial(), ell_product(budget + 1, power)) == std::strong_ordering::greater) {
        return {PredVerdict::Outcome::no, 0};
    }
    return {PredVerdict::Outcome::unknown, 0};
}

} // namespace

Transseries exp(const Transseries &f, unsigned budget)
{
    require_budget(budget);
    auto [g, c, eps] = decompose(f);
    if (!c.is_zero()) {
        throw NonRationalConstant("exp of a series with constant term " + c.str() + " leaves the rationals");
    }
    if (!g.is_exact()) {
        throw InexactArgument("exp needs an exactly known infinite part");
    }
    const Transmonomial m = Transmonomial::exp_of(g);
    if (eps.is_zero()) {
        return Transseries(m);
    }
    std::vector<Rat> coeffs(budget + 1);
    for (unsigned n = 0; n <= budget; ++n) {
        coeffs[n] = factorial(n).reciprocal();
    }
    return compose_power_series(eps, coeffs) * m;
}

Transseries log(const Transseries &f, unsigned budget)
{
    require_budget(budget);
    if (f.is_zero() || sign(f) <= 0) {
        throw NotPositive("log needs a positive argument");
    }
    const Term &lead = f.leading_term();
    if (!lead.coeff.is_one()) {
        throw NonRationalConstant("log needs leading coefficient 1, got " + lead.coeff.str());
    }
    const Transseries eps = f * lead.monomial.inverse() - Transseries(1);
    const Transseries logm = lead.monomial.log();
    if (eps.is_zero()) {
        return logm;
    }
    std::vector<Rat> coeffs(budget + 1);
    for (unsigned n = 1; n <= budget; ++n) {
        coeffs[n] = Rat(n % 2 == 1 ? 1 : -1, static_cast<long>(n));
    }
    return logm + compose_power_series(eps, coeffs);
}

Transseries lambda(std::size_t n)
{
    return ell_product_sum(n, -1);
}

Transseries omega_seq(std::size_t n)
{
    return ell_product_sum(n, -2);
}

PredVerdict lambda_pred(const Transseries &f, std::size_t budget)
{
    return cut_pred(f, budget, -1);
}

PredVerdict omega_pred(const Transseries &f, std::size_t budget)
{
    return cut_pred(f, budget, -2);
}

} // namespace ts
