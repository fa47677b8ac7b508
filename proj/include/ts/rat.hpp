#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ts
{

// Exact rational number, always in lowest terms with a positive denominator.
class Rat
{
public:
    Rat() = default;
    Rat(long n) : v_(n) {}
    Rat(long num, long den);
    explicit Rat(mpq_class v);
    explicit Rat(const mpz_class &n) : v_(n) {}

    // Accepts "p", "-p", "p/q" and decimal literals such as "0.25".
    static Rat parse(std::string_view text);

    const mpq_class &value() const noexcept { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const noexcept { return sgn(v_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_one() const { return v_ == 1; }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    Rat reciprocal() const;

    // "p" or "p/q".
    std::string str() const { return v_.get_str(); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat &operator+=(const Rat &o);
    Rat &operator-=(const Rat &o);
    Rat &operator*=(const Rat &o);
    Rat &operator/=(const Rat &o);

    friend Rat operator+(Rat a, const Rat &b) { return a += b; }
    friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat &b) { return a /= b; }

    friend bool operator==(const Rat &a, const Rat &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat &a, const Rat &b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rat &r);

private:
    mpq_class v_;
};

Rat factorial(unsigned n);

} // namespace ts
