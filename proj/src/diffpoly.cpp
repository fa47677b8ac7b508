#include "ts/diffpoly.hpp"

#include <algorithm>

#include "ts/calculus.hpp"
#include "ts/error.hpp"

namespace ts
{

DiffMonomialIndex::DiffMonomialIndex(std::vector<unsigned> exponents) : exps_(std::move(exponents))
{
    while (!exps_.empty() && exps_.back() == 0) {
        exps_.pop_back();
    }
}

DiffMonomialIndex DiffMonomialIndex::y(std::size_t k, unsigned power)
{
    std::vector<unsigned> e(k + 1);
    e[k] = power;
    return DiffMonomialIndex(std::move(e));
}

unsigned DiffMonomialIndex::degree() const
{
    unsigned d = 0;
    for (unsigned e : exps_) {
        d += e;
    }
    return d;
}

DiffMonomialIndex DiffMonomialIndex::operator*(const DiffMonomialIndex &o) const
{
    std::vector<unsigned> e(std::max(exps_.size(), o.exps_.size()));
    for (std::size_t k = 0; k < e.size(); ++k) {
        e[k] = exponent(k) + o.exponent(k);
    }
    return DiffMonomialIndex(std::move(e));
}

std::strong_ordering operator<=>(const DiffMonomialIndex &a, const DiffMonomialIndex &b)
{
    if (auto c = a.exps_.size() <=> b.exps_.size(); c != 0) {
        return c;
    }
    for (std::size_t k = a.exps_.size(); k-- > 0;) {
        if (auto c = a.exps_[k] <=> b.exps_[k]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

DiffPolynomial::DiffPolynomial(const Transseries &c)
{
    add_term(DiffMonomialIndex(), c);
}

DiffPolynomial::DiffPolynomial(const DiffMonomialIndex &idx, const Transseries &c)
{
    add_term(idx, c);
}

DiffPolynomial DiffPolynomial::variable(std::size_t k)
{
    return DiffPolynomial(DiffMonomialIndex::y(k), Transseries(1));
}

void DiffPolynomial::add_term(const DiffMonomialIndex &idx, const Transseries &c)
{
    if (c.is_zero()) {
        return;
    }
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) {
        coeffs_.emplace(idx, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        coeffs_.erase(it);
    }
}

Transseries DiffPolynomial::coefficient(const DiffMonomialIndex &idx) const
{
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? Transseries() : it->second;
}

std::size_t DiffPolynomial::order() const
{
    std::size_t r = 0;
    for (const auto &[idx, c] : coeffs_) {
        r = std::max(r, idx.order());
    }
    return r;
}

unsigned DiffPolynomial::degree() const
{
    unsigned d = 0;
    for (const auto &[idx, c] : coeffs_) {
        d = std::max(d, idx.degree());
    }
    return d;
}

bool DiffPolynomial::has_constant_coefficients() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto &kv) { return kv.second.is_constant(); });
}

DiffPolynomial DiffPolynomial::operator-() const
{
    DiffPolynomial out = *this;
    for (auto &[idx, c] : out.coeffs_) {
        c = -c;
    }
    return out;
}

DiffPolynomial DiffPolynomial::operator+(const DiffPolynomial &o) const
{
    DiffPolynomial out = *this;
    for (const auto &[idx, c] : o.coeffs_) {
        out.add_term(idx, c);
    }
    return out;
}

DiffPolynomial DiffPolynomial::operator*(const DiffPolynomial &o) const
{
    DiffPolynomial out;
    for (const auto &[ia, ca] : coeffs_) {
        for (const auto &[ib, cb] : o.coeffs_) {
            out.add_term(ia * ib, ca * cb);
        }
    }
    return out;
}

DiffPolynomial DiffPolynomial::operator*(const Transseries &c) const
{
    DiffPolynomial out;
    for (const auto &[idx, a] : coeffs_) {
        out.add_term(idx, a * c);
    }
    return out;
}

DiffPolynomial DiffPolynomial::pow(unsigned n) const
{
    DiffPolynomial acc(Transseries(1));
    for (unsigned k = 0; k < n; ++k) {
        acc = acc * *this;
    }
    return acc;
}

namespace
{

Transseries monomial_power(const Transseries &f, unsigned n)
{
    Transseries acc(1);
    for (unsigned k = 0; k < n; ++k) {
        acc *= f;
    }
    return acc;
}

Transseries eval_on(const DiffPolynomial &p, const std::vector<Transseries> &derivs)
{
    Transseries out;
    for (const auto &[idx, c] : p.coefficients()) {
        Transseries term = c;
        for (std::size_t k = 0; k < idx.exponents().size(); ++k) {
            if (idx.exponent(k) > 0) {
                term *= monomial_power(derivs[k], idx.exponent(k));
            }
        }
        out += term;
    }
    return out;
}

} // namespace

Transseries eval(const DiffPolynomial &p, const Transseries &f)
{
    std::vector<Transseries> derivs{f};
    for (std::size_t k = 0; k < p.order(); ++k) {
        derivs.push_back(derive(derivs.back()));
    }
    return eval_on(p, derivs);
}

Transseries eval_with_derivation(const DiffPolynomial &p, const Transseries &f, const Transseries &phi)
{
    std::vector<Transseries> derivs{f};
    for (std::size_t k = 0; k < p.order(); ++k) {
        derivs.push_back(phi * derive(derivs.back()));
    }
    return eval_on(p, derivs);
}

DiffPolynomial conjugate(const DiffPolynomial &p, const Transseries &phi, unsigned budget)
{
    if (phi.is_zero()) {
        throw DivisionByZero();
    }
    const Transseries phi_inv = inverse(phi, budget);
    const std::size_t r = p.order();

    // d^k = sum_i c[k][i] (phi d)^i, with c[k+1][i] = c[k][i]' + c[k][i-1] / phi.
    std::vector<std::vector<Transseries>> c(r + 1);
    c[0] = {Transseries(1)};
    for (std::size_t k = 0; k < r; ++k) {
        c[k + 1].assign(k + 2, Transseries());
        for (std::size_t i = 0; i <= k + 1; ++i) {
            Transseries v;
            if (i <= k) {
                v = derive(c[k][i]);
            }
            if (i >= 1) {
                v += phi_inv * c[k][i - 1];
            }
            c[k + 1][i] = std::move(v);
        }
    }
    std::vector<DiffPolynomial> subst(r + 1);
    for (std::size_t k = 0; k <= r; ++k) {
        for (std::size_t i = 0; i < c[k].size(); ++i) {
            subst[k] = subst[k] + DiffPolynomial(DiffMonomialIndex::y(i), c[k][i]);
        }
    }

    DiffPolynomial out;
    for (const auto &[idx, coeff] : p.coefficients()) {
        DiffPolynomial term(coeff);
        for (std::size_t k = 0; k < idx.exponents().size(); ++k) {
            if (idx.exponent(k) > 0) {
                term = term * subst[k].pow(idx.exponent(k));
            }
        }
        out = out + term;
    }
    return out;
}

DominantPart dominant_part(const DiffPolynomial &p)
{
    if (p.is_zero()) {
        throw InvalidArgument("zero differential polynomial has no dominant part");
    }
    std::optional<Transmonomial> scale;
    for (const auto &[idx, c] : p.coefficients()) {
        if (c.terms().empty()) {
            throw IndeterminateDominance("coefficient has no listed terms above its truncation bound");
        }
        const Transmonomial &m = c.leading_monomial();
        if (!scale || cmp_monomial(m, *scale) == std::strong_ordering::greater) {
            scale = m;
        }
    }
    DiffPolynomial d;
    for (const auto &[idx, c] : p.coefficients()) {
        if (c.leading_monomial() == *scale) {
            d = d + DiffPolynomial(idx, Transseries(c.leading_term().coeff));
        }
    }
    return {*scale, std::move(d)};
}

bool same_up_to_positive_scale(const DiffPolynomial &a, const DiffPolynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return a.is_zero() && b.is_zero();
    }
    if (a.coefficients().size() != b.coefficients().size()) {
        return false;
    }
    std::optional<Rat> ratio;
    auto ib = b.coefficients().begin();
    for (const auto &[idx, ca] : a.coefficients()) {
        const auto &[jdx, cb] = *ib++;
        if (!(idx == jdx) || !ca.is_constant() || !cb.is_constant()) {
            return false;
        }
        Rat q = ca.terms().front().coeff / cb.terms().front().coeff;
        if (!ratio) {
            if (q.sign() <= 0) {
                return false;
            }
            ratio = std::move(q);
        } else if (!(q == *ratio)) {
            return false;
        }
    }
    return true;
}

NewtonResult newton_poly(const DiffPolynomial &p, std::size_t max_level)
{
    if (p.is_zero()) {
        throw InvalidArgument("newton polynomial of zero");
    }
    std::optional<DiffPolynomial> previous;
    for (std::size_t n = 0; n <= max_level; ++n) {
        const Transmonomial phi{LogMonomial(std::vector<Rat>(n + 1, Rat(-1)))};
        DiffPolynomial d = dominant_part(conjugate(p, Transseries(phi))).poly;
        if (previous && same_up_to_positive_scale(d, *previous)) {
            return {NewtonResult::Outcome::stabilized, std::move(d), n};
        }
        previous = std::move(d);
    }
    return {NewtonResult::Outcome::budget_exceeded, std::move(*previous), max_level};
}

ShapeVerdict shape_check(const DiffPolynomial &n)
{
    if (n.is_zero()) {
        throw InvalidArgument("shape of the zero polynomial");
    }
    ShapeVerdict v;
    v.quasilinear = n.degree() == 1;
    std::optional<unsigned> power;
    for (const auto &[idx, c] : n.coefficients()) {
        if (idx.order() > 1) {
            return v;
        }
        const unsigned e = idx.exponent(1);
        if (power && *power != e) {
            return v;
        }
        power = e;
    }
    v.yprime_power = power;
    return v;
}

} // namespace ts
