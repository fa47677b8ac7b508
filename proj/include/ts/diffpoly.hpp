#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ts/series.hpp"

namespace ts
{

// Exponent vector (i0, ..., ir) of Y^i0 (Y')^i1 ... (Y^(r))^ir, trailing zeros trimmed.
class DiffMonomialIndex
{
public:
    DiffMonomialIndex() = default;
    explicit DiffMonomialIndex(std::vector<unsigned> exponents);

    // (Y^(k))^power
    static DiffMonomialIndex y(std::size_t k, unsigned power = 1);

    const std::vector<unsigned> &exponents() const noexcept { return exps_; }
    unsigned exponent(std::size_t k) const { return k < exps_.size() ? exps_[k] : 0; }
    // Highest derivative present; 0 for the constant index.
    std::size_t order() const { return exps_.empty() ? 0 : exps_.size() - 1; }
    unsigned degree() const;

    DiffMonomialIndex operator*(const DiffMonomialIndex &o) const;

    friend bool operator==(const DiffMonomialIndex &, const DiffMonomialIndex &) = default;
    // Higher order first, then by exponents from the top derivative down.
    friend std::strong_ordering operator<=>(const DiffMonomialIndex &a, const DiffMonomialIndex &b);

private:
    std::vector<unsigned> exps_;
};

// Polynomial in Y, Y', Y'', ... with transseries coefficients. No zero coefficients are stored.
class DiffPolynomial
{
public:
    using CoeffMap = std::map<DiffMonomialIndex, Transseries, std::greater<>>;

    DiffPolynomial() = default;
    DiffPolynomial(const Transseries &c);
    DiffPolynomial(const DiffMonomialIndex &idx, const Transseries &c);

    // Y^(k)
    static DiffPolynomial variable(std::size_t k);

    const CoeffMap &coefficients() const noexcept { return coeffs_; }
    Transseries coefficient(const DiffMonomialIndex &idx) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t order() const;
    unsigned degree() const;
    // Every coefficient is a constant series.
    bool has_constant_coefficients() const;

    DiffPolynomial operator-() const;
    DiffPolynomial operator+(const DiffPolynomial &o) const;
    DiffPolynomial operator-(const DiffPolynomial &o) const { return *this + (-o); }
    DiffPolynomial operator*(const DiffPolynomial &o) const;
    DiffPolynomial operator*(const Transseries &c) const;
    DiffPolynomial pow(unsigned n) const;

    friend bool operator==(const DiffPolynomial &, const DiffPolynomial &) = default;

private:
    void add_term(const DiffMonomialIndex &idx, const Transseries &c);

    CoeffMap coeffs_;
};

// P(f, f', ..., f^(r))
Transseries eval(const DiffPolynomial &p, const Transseries &f);

// Evaluates Y^(i) at (phi d/dx)^i f.
Transseries eval_with_derivation(const DiffPolynomial &p, const Transseries &f, const Transseries &phi);

// Rewrites P in terms of the derivation phi*d/dx: the result's Y^(i) stands for
// (phi d/dx)^i Y. The budget only matters when 1/phi has no finite expansion.
DiffPolynomial conjugate(const DiffPolynomial &p, const Transseries &phi, unsigned budget = 8);

struct DominantPart {
    Transmonomial scale;
    DiffPolynomial poly; // constant coefficients
};

DominantPart dominant_part(const DiffPolynomial &p);

struct NewtonResult {
    enum class Outcome { stabilized, budget_exceeded };

    Outcome outcome = Outcome::budget_exceeded;
    DiffPolynomial poly;
    std::size_t level = 0;
};

// Probes phi_n = 1/(l0 ... ln) for n = 0..max_level and reports the first
// level whose dominant part matches the previous one up to a positive factor.
NewtonResult newton_poly(const DiffPolynomial &p, std::size_t max_level);

// True when a = q * b for some rational q > 0.
bool same_up_to_positive_scale(const DiffPolynomial &a, const DiffPolynomial &b);

struct ShapeVerdict {
    // n when N = A(Y) * (Y')^n
    std::optional<unsigned> yprime_power;
    // total degree 1
    bool quasilinear = false;

    bool is_other() const { return !yprime_power; }
};

ShapeVerdict shape_check(const DiffPolynomial &n);

} // namespace ts
