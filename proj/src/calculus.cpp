#include "ts/calculus.hpp"

#include <vector>

namespace ts
{

namespace
{

// (l0 ... lk)^-1, the logarithmic derivative of l(k).
Transmonomial ell_dagger(std::size_t k)
{
    return Transmonomial(LogMonomial(std::vector<Rat>(k + 1, Rat(-1))));
}

} // namespace

Transseries derive(const Transmonomial &m)
{
    // m'/m = sum_i r_i / (l0 ... li) + L'
    std::vector<Term> logderiv;
    const auto &exps = m.logpart().exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (!exps[i].is_zero()) {
            logderiv.push_back(Term{ell_dagger(i), exps[i]});
        }
    }
    Transseries ld = Transseries::from_sorted(std::move(logderiv));
    if (m.has_exppart()) {
        ld += derive(m.exppart());
    }
    return ld * m;
}

Transseries derive(const Transseries &f)
{
    std::vector<Term> out;
    for (const auto &t : f.terms()) {
        const Transseries dm = derive(t.monomial);
        for (const auto &d : dm.terms()) {
            out.push_back(Term{d.monomial, d.coeff * t.coeff});
        }
    }
    std::optional<Transmonomial> bound;
    if (f.bound()) {
        bound = *f.bound();
        const Transseries db = derive(*f.bound());
        if (!db.is_zero() && cmp_monomial(db.leading_monomial(), *bound) == std::strong_ordering::greater) {
            bound = db.leading_monomial();
        }
    }
    return Transseries(std::move(out), std::move(bound));
}

Transmonomial upward_shift(const Transmonomial &m)
{
    const auto &exps = m.logpart().exponents();
    std::vector<Rat> shifted;
    if (exps.size() > 1) {
        shifted.assign(exps.begin() + 1, exps.end());
    }
    Transseries e = m.has_exppart() ? upward_shift(m.exppart()) : Transseries();
    if (!exps.empty() && !exps[0].is_zero()) {
        e += Transseries(Transmonomial::x_pow(1), exps[0]);
    }
    return Transmonomial(LogMonomial(std::move(shifted))) * Transmonomial::exp_of(e);
}

Transseries upward_shift(const Transseries &f)
{
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const auto &t : f.terms()) {
        out.push_back(Term{upward_shift(t.monomial), t.coeff});
    }
    std::optional<Transmonomial> bound;
    if (f.bound()) {
        bound = upward_shift(*f.bound());
    }
    return Transseries(std::move(out), std::move(bound));
}

Transmonomial downward_shift(const Transmonomial &m)
{
    const auto &exps = m.logpart().exponents();
    std::vector<Rat> shifted;
    if (!exps.empty()) {
        shifted.reserve(exps.size() + 1);
        shifted.emplace_back();
        shifted.insert(shifted.end(), exps.begin(), exps.end());
    }
    Transmonomial out{LogMonomial(std::move(shifted))};
    if (m.has_exppart()) {
        out = out * Transmonomial::exp_of(downward_shift(m.exppart()));
    }
    return out;
}

Transseries downward_shift(const Transseries &f)
{
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const auto &t : f.terms()) {
        out.push_back(Term{downward_shift(t.monomial), t.coeff});
    }
    std::optional<Transmonomial> bound;
    if (f.bound()) {
        bound = downward_shift(*f.bound());
    }
    return Transseries(std::move(out), std::move(bound));
}

} // namespace ts
