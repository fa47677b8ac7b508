#include "ts/series.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "ts/error.hpp"

namespace ts
{

namespace
{

const Rat zero_rat{};

bool is_greater(const Transmonomial &a, const Transmonomial &b)
{
    return cmp_monomial(a, b) == std::strong_ordering::greater;
}

const Transmonomial &max_monomial(const Transmonomial &a, const Transmonomial &b)
{
    return is_greater(b, a) ? b : a;
}

// Merge two strictly decreasing term lists, adding coefficients on equal monomials.
std::vector<Term> merge_terms(const std::vector<Term> &a, const std::vector<Term> &b)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const auto c = cmp_monomial(a[i].monomial, b[j].monomial);
        if (c == std::strong_ordering::greater) {
            out.push_back(a[i++]);
        } else if (c == std::strong_ordering::less) {
            out.push_back(b[j++]);
        } else {
            Rat sum = a[i].coeff + b[j].coeff;
            if (!sum.is_zero()) {
                out.push_back(Term{a[i].monomial, std::move(sum)});
            }
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return out;
}

} // namespace

// ---------------------------------------------------------------- LogMonomial

LogMonomial::LogMonomial(std::vector<Rat> exponents) : exps_(std::move(exponents))
{
    trim();
}

LogMonomial LogMonomial::ell(std::size_t k, Rat power)
{
    std::vector<Rat> e(k + 1);
    e[k] = std::move(power);
    return LogMonomial(std::move(e));
}

const Rat &LogMonomial::exponent(std::size_t i) const
{
    return i < exps_.size() ? exps_[i] : zero_rat;
}

void LogMonomial::trim()
{
    while (!exps_.empty() && exps_.back().is_zero()) {
        exps_.pop_back();
    }
}

LogMonomial LogMonomial::operator*(const LogMonomial &o) const
{
    std::vector<Rat> e(std::max(exps_.size(), o.exps_.size()));
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = exponent(i) + o.exponent(i);
    }
    return LogMonomial(std::move(e));
}

LogMonomial LogMonomial::inverse() const
{
    std::vector<Rat> e;
    e.reserve(exps_.size());
    for (const auto &r : exps_) {
        e.push_back(-r);
    }
    return LogMonomial(std::move(e));
}

LogMonomial LogMonomial::pow(const Rat &r) const
{
    std::vector<Rat> e;
    e.reserve(exps_.size());
    for (const auto &x : exps_) {
        e.push_back(x * r);
    }
    return LogMonomial(std::move(e));
}

std::optional<std::size_t> LogMonomial::as_pure_ell() const
{
    if (exps_.size() < 2 || !exps_.back().is_one()) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i + 1 < exps_.size(); ++i) {
        if (!exps_[i].is_zero()) {
            return std::nullopt;
        }
    }
    return exps_.size() - 1;
}

std::strong_ordering operator<=>(const LogMonomial &a, const LogMonomial &b)
{
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a.exponent(i) <=> b.exponent(i); c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Transmonomial

Transmonomial::Transmonomial(LogMonomial logpart, std::shared_ptr<const Transseries> exppart)
    : log_(std::move(logpart)), exp_(std::move(exppart))
{
}

Transmonomial Transmonomial::exp_of(const Transseries &g)
{
    if (!g.is_exact()) {
        throw InexactArgument("exp of a truncated infinite part");
    }
    if (g.is_zero()) {
        return {};
    }
    if (!g.is_purely_large()) {
        throw InvalidArgument("exponent of a transmonomial must be purely large");
    }
    std::vector<Rat> logexps;
    std::vector<Term> rest;
    for (const auto &t : g.terms()) {
        std::optional<std::size_t> k;
        if (!t.monomial.has_exppart()) {
            k = t.monomial.logpart().as_pure_ell();
        }
        if (k) {
            if (logexps.size() < *k) {
                logexps.resize(*k);
            }
            logexps[*k - 1] += t.coeff;
        } else {
            rest.push_back(t);
        }
    }
    std::shared_ptr<const Transseries> e;
    if (!rest.empty()) {
        e = std::make_shared<const Transseries>(Transseries::from_sorted(std::move(rest)));
    }
    return Transmonomial(LogMonomial(std::move(logexps)), std::move(e));
}

Transseries Transmonomial::exppart_or_zero() const
{
    return exp_ ? *exp_ : Transseries();
}

std::size_t Transmonomial::height() const
{
    if (!exp_) {
        return 0;
    }
    std::size_t h = 0;
    for (const auto &t : exp_->terms()) {
        h = std::max(h, t.monomial.height());
    }
    return h + 1;
}

Transseries Transmonomial::log() const
{
    std::vector<Term> ells;
    for (std::size_t i = 0; i < log_.size(); ++i) {
        if (!log_.exponent(i).is_zero()) {
            ells.push_back(Term{Transmonomial::ell(i + 1), log_.exponent(i)});
        }
    }
    if (!exp_) {
        return Transseries::from_sorted(std::move(ells));
    }
    // Canonical form keeps the two lists disjoint, so this is a plain merge.
    return Transseries::from_sorted(merge_terms(ells, exp_->terms()));
}

Transmonomial Transmonomial::operator*(const Transmonomial &o) const
{
    std::shared_ptr<const Transseries> e;
    if (exp_ && o.exp_) {
        Transseries sum = *exp_ + *o.exp_;
        if (!sum.is_zero()) {
            e = std::make_shared<const Transseries>(std::move(sum));
        }
    } else {
        e = exp_ ? exp_ : o.exp_;
    }
    return Transmonomial(log_ * o.log_, std::move(e));
}

Transmonomial Transmonomial::inverse() const
{
    std::shared_ptr<const Transseries> e;
    if (exp_) {
        e = std::make_shared<const Transseries>(-*exp_);
    }
    return Transmonomial(log_.inverse(), std::move(e));
}

Transmonomial Transmonomial::pow(const Rat &r) const
{
    if (r.is_zero()) {
        return {};
    }
    std::shared_ptr<const Transseries> e;
    if (exp_) {
        e = std::make_shared<const Transseries>(*exp_ * r);
    }
    return Transmonomial(log_.pow(r), std::move(e));
}

bool operator==(const Transmonomial &a, const Transmonomial &b)
{
    if (!(a.log_ == b.log_)) {
        return false;
    }
    if (!a.exp_ || !b.exp_) {
        return !a.exp_ && !b.exp_;
    }
    return a.exp_ == b.exp_ || *a.exp_ == *b.exp_;
}

namespace
{

const Transmonomial &cached_ell(std::size_t k)
{
    thread_local std::vector<Transmonomial> cache;
    while (cache.size() <= k) {
        cache.push_back(Transmonomial::ell(cache.size()));
    }
    return cache[k];
}

// Walks the terms of log m = sum r_i l(i+1) + L in decreasing order without
// materializing the series.
class LogTerms
{
public:
    explicit LogTerms(const Transmonomial &m)
        : exps_(m.logpart().exponents()), exp_terms_(m.has_exppart() ? &m.exppart().terms() : nullptr)
    {
        skip_zero_exponents();
    }

    bool done() const { return k_ >= exps_.size() && (!exp_terms_ || li_ >= exp_terms_->size()); }

    // Precondition: !done().
    std::pair<const Transmonomial *, const Rat *> current()
    {
        if (!from_exp_known_) {
            pick();
        }
        if (from_exp_) {
            const Term &t = (*exp_terms_)[li_];
            return {&t.monomial, &t.coeff};
        }
        return {&cached_ell(k_ + 1), &exps_[k_]};
    }

    void advance()
    {
        if (!from_exp_known_) {
            pick();
        }
        if (from_exp_) {
            ++li_;
        } else {
            ++k_;
            skip_zero_exponents();
        }
        from_exp_known_ = false;
    }

private:
    void skip_zero_exponents()
    {
        while (k_ < exps_.size() && exps_[k_].is_zero()) {
            ++k_;
        }
    }

    void pick()
    {
        const bool have_exp = exp_terms_ && li_ < exp_terms_->size();
        const bool have_ell = k_ < exps_.size();
        from_exp_ = have_exp && (!have_ell || (*exp_terms_)[li_].monomial > cached_ell(k_ + 1));
        from_exp_known_ = true;
    }

    const std::vector<Rat> &exps_;
    const std::vector<Term> *exp_terms_;
    std::size_t k_ = 0;
    std::size_t li_ = 0;
    bool from_exp_ = false;
    bool from_exp_known_ = false;
};

} // namespace

std::strong_ordering operator<=>(const Transmonomial &a, const Transmonomial &b)
{
    if (!a.exp_ && !b.exp_) {
        return a.log_ <=> b.log_;
    }
    if (a.exp_ == b.exp_) {
        return a.log_ <=> b.log_;
    }
    // a > b iff log a - log b is positive. Both logs only involve monomials of
    // strictly smaller height, so the recursion terminates.
    LogTerms la(a);
    LogTerms lb(b);
    auto by_sign = [](int s) { return s > 0 ? std::strong_ordering::greater : std::strong_ordering::less; };
    while (!la.done() && !lb.done()) {
        const auto [ma, ca] = la.current();
        const auto [mb, cb] = lb.current();
        const auto c = *ma <=> *mb;
        if (c == std::strong_ordering::greater) {
            return by_sign(ca->sign());
        }
        if (c == std::strong_ordering::less) {
            return by_sign(-cb->sign());
        }
        const auto d = *ca <=> *cb;
        if (d != 0) {
            return d;
        }
        la.advance();
        lb.advance();
    }
    if (!la.done()) {
        return by_sign(la.current().second->sign());
    }
    if (!lb.done()) {
        return by_sign(-lb.current().second->sign());
    }
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_monomial(const Transmonomial &a, const Transmonomial &b)
{
    return a <=> b;
}

// ---------------------------------------------------------------- Transseries

Transseries::Transseries(const Rat &c)
{
    if (!c.is_zero()) {
        terms_.push_back(Term{Transmonomial(), c});
    }
}

Transseries::Transseries(const Transmonomial &m, const Rat &c)
{
    if (!c.is_zero()) {
        terms_.push_back(Term{m, c});
    }
}

Transseries::Transseries(std::vector<Term> terms, std::optional<Transmonomial> bound)
    : terms_(std::move(terms)), bound_(std::move(bound))
{
    normalize();
}

Transseries Transseries::from_sorted(std::vector<Term> terms, std::optional<Transmonomial> bound)
{
    Transseries s;
    s.terms_ = std::move(terms);
    s.bound_ = std::move(bound);
    s.apply_bound();
    return s;
}

Transseries Transseries::big_o(const Transmonomial &bound)
{
    Transseries s;
    s.bound_ = bound;
    return s;
}

void Transseries::normalize()
{
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const Term &a, const Term &b) { return is_greater(a.monomial, b.monomial); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto &t : terms_) {
        if (!out.empty() && out.back().monomial == t.monomial) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff.is_zero()) {
                out.pop_back();
            }
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero()) {
        out.pop_back();
    }
    terms_ = std::move(out);
    apply_bound();
}

void Transseries::apply_bound()
{
    if (!bound_) {
        return;
    }
    // Terms are decreasing, so everything from the first term <= bound goes.
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const Term &t) { return !is_greater(t.monomial, *bound_); });
    terms_.erase(it, terms_.end());
}

bool Transseries::is_constant() const
{
    return is_exact() && (terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()));
}

bool Transseries::is_purely_large() const
{
    if (!is_exact() || terms_.empty()) {
        return false;
    }
    // The last term is the smallest.
    return is_greater(terms_.back().monomial, Transmonomial());
}

const Term &Transseries::leading_term() const
{
    if (terms_.empty()) {
        throw IndeterminateDominance(bound_ ? "series has no listed terms above its truncation bound"
                                            : "zero series has no leading term");
    }
    return terms_.front();
}

const Transmonomial &Transseries::magnitude() const
{
    if (!terms_.empty()) {
        return terms_.front().monomial;
    }
    if (bound_) {
        return *bound_;
    }
    throw InvalidArgument("zero series has no magnitude");
}

Rat Transseries::coefficient(const Transmonomial &m) const
{
    for (const auto &t : terms_) {
        if (t.monomial == m) {
            return t.coeff;
        }
    }
    return Rat();
}

Transseries Transseries::truncated_below(const Transmonomial &b) const
{
    Transseries s = *this;
    s.bound_ = bound_ ? max_monomial(*bound_, b) : b;
    s.apply_bound();
    return s;
}

Transseries Transseries::operator-() const
{
    Transseries s = *this;
    for (auto &t : s.terms_) {
        t.coeff = -t.coeff;
    }
    return s;
}

Transseries Transseries::operator+(const Transseries &o) const
{
    std::optional<Transmonomial> b;
    if (bound_ && o.bound_) {
        b = max_monomial(*bound_, *o.bound_);
    } else if (bound_) {
        b = bound_;
    } else {
        b = o.bound_;
    }
    return from_sorted(merge_terms(terms_, o.terms_), std::move(b));
}

Transseries Transseries::operator*(const Transseries &o) const
{
    if (is_zero() || o.is_zero()) {
        return {};
    }
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto &a : terms_) {
        for (const auto &b : o.terms_) {
            prod.push_back(Term{a.monomial * b.monomial, a.coeff * b.coeff});
        }
    }
    // Remainders: O(bf) * g and f * O(bg); the product of both remainders is
    // dominated by either candidate.
    std::optional<Transmonomial> bound;
    if (bound_) {
        bound = *bound_ * o.magnitude();
    }
    if (o.bound_) {
        Transmonomial cand = *o.bound_ * magnitude();
        bound = bound ? max_monomial(*bound, cand) : std::move(cand);
    }
    return Transseries(std::move(prod), std::move(bound));
}

Transseries Transseries::operator*(const Rat &c) const
{
    if (c.is_zero()) {
        return {};
    }
    Transseries s = *this;
    for (auto &t : s.terms_) {
        t.coeff *= c;
    }
    return s;
}

Transseries Transseries::operator*(const Transmonomial &m) const
{
    Transseries s = *this;
    for (auto &t : s.terms_) {
        t.monomial = t.monomial * m;
    }
    if (s.bound_) {
        s.bound_ = *s.bound_ * m;
    }
    return s;
}

bool operator==(const Transseries &a, const Transseries &b)
{
    return a.terms_ == b.terms_ && a.bound_ == b.bound_;
}

// ------------------------------------------------------------------ relations

DomRel compare_dominance(const Transseries &f, const Transseries &g)
{
    if (f.is_zero() && g.is_zero()) {
        throw BothZero();
    }
    if (f.is_zero()) {
        g.leading_term();
        return DomRel::below;
    }
    if (g.is_zero()) {
        f.leading_term();
        return DomRel::above;
    }
    const auto c = cmp_monomial(f.leading_monomial(), g.leading_monomial());
    if (c == std::strong_ordering::less) {
        return DomRel::below;
    }
    return c == std::strong_ordering::greater ? DomRel::above : DomRel::asymp;
}

bool preceq(const Transseries &f, const Transseries &g)
{
    if (f.is_zero()) {
        return true;
    }
    if (g.is_zero()) {
        return false;
    }
    return compare_dominance(f, g) != DomRel::above;
}

bool prec(const Transseries &f, const Transseries &g)
{
    if (g.is_zero()) {
        return false;
    }
    return compare_dominance(f, g) == DomRel::below;
}

bool asymp(const Transseries &f, const Transseries &g)
{
    if (f.is_zero() || g.is_zero()) {
        return f.is_zero() && g.is_zero();
    }
    return compare_dominance(f, g) == DomRel::asymp;
}

int sign(const Transseries &f)
{
    if (f.is_zero()) {
        return 0;
    }
    if (f.terms().empty()) {
        throw IndeterminateSign();
    }
    return f.terms().front().coeff.sign();
}

Decomposition decompose(const Transseries &f)
{
    const Transmonomial one;
    if (f.bound() && cmp_monomial(*f.bound(), one) != std::strong_ordering::less) {
        return {f, Rat(), Transseries()};
    }
    std::vector<Term> large;
    std::vector<Term> small;
    Rat c;
    for (const auto &t : f.terms()) {
        const auto o = cmp_monomial(t.monomial, one);
        if (o == std::strong_ordering::greater) {
            large.push_back(t);
        } else if (o == std::strong_ordering::equal) {
            c = t.coeff;
        } else {
            small.push_back(t);
        }
    }
    return {Transseries::from_sorted(std::move(large)), std::move(c),
            Transseries::from_sorted(std::move(small), f.bound())};
}

namespace
{

// (a * b).truncated_below(cap), skipping products that would be dropped.
Transseries multiply_above(const Transseries &a, const Transseries &b, const Transmonomial &cap)
{
    if (a.is_zero() || b.is_zero()) {
        return Transseries(std::vector<Term>{}, cap);
    }
    std::vector<Term> prod;
    for (const auto &s : a.terms()) {
        for (const auto &t : b.terms()) {
            Transmonomial m = s.monomial * t.monomial;
            if (!is_greater(m, cap)) {
                break;
            }
            prod.push_back(Term{std::move(m), s.coeff * t.coeff});
        }
    }
    std::optional<Transmonomial> bound;
    if (a.bound()) {
        bound = *a.bound() * b.magnitude();
    }
    if (b.bound()) {
        Transmonomial cand = *b.bound() * a.magnitude();
        bound = bound ? max_monomial(*bound, cand) : std::move(cand);
    }
    return Transseries(std::move(prod), std::move(bound)).truncated_below(cap);
}

} // namespace

Transseries compose_power_series(const Transseries &eps, std::span<const Rat> coeffs)
{
    if (coeffs.empty()) {
        throw InvalidArgument("power series needs at least one coefficient");
    }
    if (eps.is_zero()) {
        return Transseries(coeffs[0]);
    }
    const Transmonomial &mag = eps.magnitude();
    if (cmp_monomial(mag, Transmonomial()) != std::strong_ordering::less) {
        throw InvalidArgument("power series argument must be infinitesimal");
    }
    const Transmonomial cap = mag.pow(Rat(static_cast<long>(coeffs.size())));
    Transseries result(coeffs[0]);
    Transseries power(1);
    for (std::size_t n = 1; n < coeffs.size(); ++n) {
        power = multiply_above(power, eps, cap);
        result += power * coeffs[n];
    }
    return result.truncated_below(cap);
}

namespace
{

// f = c * m * (1 + eps)
struct Factored {
    Rat c;
    Transmonomial m;
    Transseries eps;
};

Factored factor_leading(const Transseries &f)
{
    const Term &lead = f.leading_term();
    const Rat cinv = lead.coeff.reciprocal();
    const Transmonomial minv = lead.monomial.inverse();
    Transseries eps = (f * minv) * cinv - Transseries(1);
    return {lead.coeff, lead.monomial, std::move(eps)};
}

void require_budget(unsigned budget)
{
    if (budget == 0) {
        throw InvalidArgument("expansion budget must be positive");
    }
}

} // namespace

Transseries inverse(const Transseries &f, unsigned budget)
{
    require_budget(budget);
    if (f.is_zero()) {
        throw DivisionByZero();
    }
    auto [c, m, eps] = factor_leading(f);
    std::vector<Rat> coeffs(budget + 1);
    for (unsigned n = 0; n <= budget; ++n) {
        coeffs[n] = Rat(n % 2 == 0 ? 1 : -1);
    }
    return compose_power_series(eps, coeffs) * m.inverse() * c.reciprocal();
}

Transseries pow(const Transseries &f, const Rat &r, unsigned budget)
{
    require_budget(budget);
    if (r.is_zero()) {
        return Transseries(1);
    }
    if (f.is_zero()) {
        if (r.sign() < 0) {
            throw DivisionByZero();
        }
        return {};
    }
    if (r.is_integer()) {
        if (!r.num().fits_slong_p()) {
            throw InvalidArgument("exponent too large");
        }
        long n = r.num().get_si();
        Transseries base = n < 0 ? inverse(f, budget) : f;
        n = n < 0 ? -n : n;
        Transseries acc(1);
        while (n > 0) {
            if (n & 1) {
                acc *= base;
            }
            n >>= 1;
            if (n > 0) {
                base *= base;
            }
        }
        return acc;
    }
    auto [c, m, eps] = factor_leading(f);
    if (!c.is_one()) {
        throw NonRationalConstant("fractional power needs leading coefficient 1, got " + c.str());
    }
    // Binomial series sum_n binom(r, n) eps^n.
    std::vector<Rat> coeffs(budget + 1);
    Rat b(1);
    for (unsigned n = 0; n <= budget; ++n) {
        coeffs[n] = b;
        b = b * (r - Rat(static_cast<long>(n))) / Rat(static_cast<long>(n + 1));
    }
    return compose_power_series(eps, coeffs) * m.pow(r);
}

bool agrees_above_bounds(const Transseries &a, const Transseries &b)
{
    std::optional<Transmonomial> bound;
    if (a.bound() && b.bound()) {
        bound = max_monomial(*a.bound(), *b.bound());
    } else {
        bound = a.bound() ? a.bound() : b.bound();
    }
    if (!bound) {
        return a == b;
    }
    return a.truncated_below(*bound).terms() == b.truncated_below(*bound).terms();
}

} // namespace ts
