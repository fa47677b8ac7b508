#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "ts/rat.hpp"

namespace ts
{

// l0^r0 * l1^r1 * ... * ld^rd with l0 = x and l(n+1) = log l(n).
// Trailing zero exponents are trimmed, so the empty vector is the monomial 1.
class LogMonomial
{
public:
    LogMonomial() = default;
    explicit LogMonomial(std::vector<Rat> exponents);

    // l(k)^power
    static LogMonomial ell(std::size_t k, Rat power = 1);

    const std::vector<Rat> &exponents() const noexcept { return exps_; }
    // Exponent of l(i); zero past the stored depth.
    const Rat &exponent(std::size_t i) const;
    std::size_t size() const noexcept { return exps_.size(); }
    bool is_one() const noexcept { return exps_.empty(); }

    LogMonomial operator*(const LogMonomial &o) const;
    LogMonomial inverse() const;
    LogMonomial pow(const Rat &r) const;

    // True if this is exactly l(k) for some k >= 1.
    std::optional<std::size_t> as_pure_ell() const;

    friend bool operator==(const LogMonomial &, const LogMonomial &) = default;

    // Asymptotic order: l0 dominates l1 dominates ...
    friend std::strong_ordering operator<=>(const LogMonomial &a, const LogMonomial &b);

private:
    void trim();

    std::vector<Rat> exps_;
};

class Transseries;

// A transmonomial logpart * exp(L). L is an exact, nonzero, purely large series
// containing no term r*l(k) with k >= 1 (those live in logpart), which makes the
// representation unique.
class Transmonomial
{
public:
    Transmonomial() = default;
    explicit Transmonomial(LogMonomial logpart) : log_(std::move(logpart)) {}

    static Transmonomial one() { return {}; }
    static Transmonomial x_pow(const Rat &r) { return Transmonomial(LogMonomial::ell(0, r)); }
    static Transmonomial ell(std::size_t k, const Rat &r = 1) { return Transmonomial(LogMonomial::ell(k, r)); }

    // exp(g) for an exact purely large g, normalized so that exp(r*l(k+1))
    // becomes l(k)^r. Throws InvalidArgument when g is not purely large or not exact.
    static Transmonomial exp_of(const Transseries &g);

    const LogMonomial &logpart() const noexcept { return log_; }
    bool has_exppart() const noexcept { return static_cast<bool>(exp_); }
    // Precondition: has_exppart().
    const Transseries &exppart() const { return *exp_; }
    // Zero series when there is no exp part.
    Transseries exppart_or_zero() const;

    bool is_one() const noexcept { return log_.is_one() && !exp_; }
    std::size_t height() const;

    // log m = sum r_i * l(i+1) + L, an exact purely large series.
    Transseries log() const;

    Transmonomial operator*(const Transmonomial &o) const;
    Transmonomial operator/(const Transmonomial &o) const { return *this * o.inverse(); }
    Transmonomial inverse() const;
    Transmonomial pow(const Rat &r) const;

    friend bool operator==(const Transmonomial &a, const Transmonomial &b);
    // a < b means a is asymptotically smaller (a is dominated by b).
    friend std::strong_ordering operator<=>(const Transmonomial &a, const Transmonomial &b);

private:
    Transmonomial(LogMonomial logpart, std::shared_ptr<const Transseries> exppart);

    LogMonomial log_;
    std::shared_ptr<const Transseries> exp_;
};

std::strong_ordering cmp_monomial(const Transmonomial &a, const Transmonomial &b);

struct Term {
    Transmonomial monomial;
    Rat coeff;

    friend bool operator==(const Term &, const Term &) = default;
};

// A finite list of terms in strictly decreasing monomial order, optionally
// followed by an unknown remainder whose terms are all dominated by (<=) bound().
// Every listed monomial is strictly above the bound.
class Transseries
{
public:
    Transseries() = default;
    Transseries(const Rat &c);
    Transseries(long c) : Transseries(Rat(c)) {}
    explicit Transseries(const Transmonomial &m, const Rat &c = 1);
    // Sorts, collects and drops zero coefficients.
    explicit Transseries(std::vector<Term> terms, std::optional<Transmonomial> bound = std::nullopt);
    // Precondition: terms strictly decreasing with nonzero coefficients.
    static Transseries from_sorted(std::vector<Term> terms, std::optional<Transmonomial> bound = std::nullopt);

    static Transseries x() { return Transseries(Transmonomial::x_pow(1)); }
    static Transseries ell(std::size_t k) { return Transseries(Transmonomial::ell(k)); }
    // The pure remainder O(bound).
    static Transseries big_o(const Transmonomial &bound);

    const std::vector<Term> &terms() const noexcept { return terms_; }
    const std::optional<Transmonomial> &bound() const noexcept { return bound_; }
    bool is_exact() const noexcept { return !bound_; }
    bool is_zero() const noexcept { return !bound_ && terms_.empty(); }
    // Exact and either zero or a single term on the monomial 1.
    bool is_constant() const;
    // Exact, nonzero, and every monomial above 1.
    bool is_purely_large() const;

    // Throws IndeterminateDominance when no term is listed.
    const Term &leading_term() const;
    const Transmonomial &leading_monomial() const { return leading_term().monomial; }
    // Leading monomial if any term is listed, else the bound. Throws on exact zero.
    const Transmonomial &magnitude() const;
    Rat coefficient(const Transmonomial &m) const;

    // Adds the remainder O(b): drops listed terms <= b and keeps the larger bound.
    Transseries truncated_below(const Transmonomial &b) const;

    Transseries operator-() const;
    Transseries operator+(const Transseries &o) const;
    Transseries operator-(const Transseries &o) const { return *this + (-o); }
    Transseries operator*(const Transseries &o) const;
    Transseries operator*(const Rat &c) const;
    Transseries operator*(const Transmonomial &m) const;
    Transseries &operator+=(const Transseries &o) { return *this = *this + o; }
    Transseries &operator-=(const Transseries &o) { return *this = *this - o; }
    Transseries &operator*=(const Transseries &o) { return *this = *this * o; }

    friend bool operator==(const Transseries &a, const Transseries &b);

private:
    void normalize();
    void apply_bound();

    std::vector<Term> terms_;
    std::optional<Transmonomial> bound_;
};

enum class DomRel { below, asymp, above };

// Dominance of f against g via leading monomials; 0 is below every nonzero series.
// Throws BothZero when f = g = 0.
DomRel compare_dominance(const Transseries &f, const Transseries &g);
// f <= g in the dominance sense; true when f = 0.
bool preceq(const Transseries &f, const Transseries &g);
bool prec(const Transseries &f, const Transseries &g);
bool asymp(const Transseries &f, const Transseries &g);

// Sign of the leading coefficient. Throws IndeterminateSign for a remainder-only series.
int sign(const Transseries &f);

struct Decomposition {
    Transseries infinite;
    Rat constant;
    Transseries infinitesimal;
};

// f = g + c + eps with g purely large, c constant, eps infinitesimal. A
// truncation bound that is not infinitesimal is carried entirely by g.
Decomposition decompose(const Transseries &f);

// Sum over n <= coeffs.size()-1 of coeffs[n] * eps^n for infinitesimal eps,
// with the remainder bounded by magnitude(eps)^(coeffs.size()).
Transseries compose_power_series(const Transseries &eps, std::span<const Rat> coeffs);

// 1/f expanded to `budget` geometric terms. Throws DivisionByZero for f = 0.
Transseries inverse(const Transseries &f, unsigned budget);

// f^r. Integer r works on any nonzero f; other exponents need leading coefficient 1.
Transseries pow(const Transseries &f, const Rat &r, unsigned budget);

// True when a and b agree on every monomial above both truncation bounds.
bool agrees_above_bounds(const Transseries &a, const Transseries &b);

} // namespace ts
