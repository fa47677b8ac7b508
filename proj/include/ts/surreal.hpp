#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ts/rat.hpp"

// Surreal numbers of finite birthday, represented by their sign sequences.
namespace ts::surreal
{

enum class Sign : std::int8_t { minus = -1, plus = 1 };

class SignSeq
{
public:
    SignSeq() = default;
    explicit SignSeq(std::vector<Sign> signs) : signs_(std::move(signs)) {}

    // A string over "+-"; the empty string is zero.
    static SignSeq parse(std::string_view text);

    const std::vector<Sign> &signs() const noexcept { return signs_; }
    std::size_t size() const noexcept { return signs_.size(); }
    bool empty() const noexcept { return signs_.empty(); }
    Sign operator[](std::size_t i) const { return signs_[i]; }
    SignSeq prefix(std::size_t n) const;
    SignSeq extended(Sign s) const;

    std::string str() const;

    friend bool operator==(const SignSeq &, const SignSeq &) = default;
    // The number ordering: lexicographic with "end of sequence" between - and +.
    friend std::strong_ordering operator<=>(const SignSeq &a, const SignSeq &b);

private:
    std::vector<Sign> signs_;
};

std::strong_ordering cmp(const SignSeq &a, const SignSeq &b);

// b <_s a: b is a proper initial segment of a.
bool simpler(const SignSeq &b, const SignSeq &a);

// L_a = {b <_s a : b < a}, R_a = {b <_s a : b > a}, shortest first.
std::vector<SignSeq> left_options(const SignSeq &a);
std::vector<SignSeq> right_options(const SignSeq &a);

// {L | R}: the simplest sequence strictly between max L and min R.
// Throws NotSeparated unless every element of L is below every element of R.
SignSeq simplest_between(std::span<const SignSeq> left, std::span<const SignSeq> right);

SignSeq neg(const SignSeq &a);
SignSeq add(const SignSeq &a, const SignSeq &b);
SignSeq sub(const SignSeq &a, const SignSeq &b);
SignSeq mul(const SignSeq &a, const SignSeq &b);

// k / 2^m in lowest terms.
class Dyadic
{
public:
    Dyadic() = default;
    Dyadic(long k) : k_(k) {}
    Dyadic(mpz_class k, unsigned long m);

    // Throws InvalidArgument when the denominator is not a power of two.
    static Dyadic from_rat(const Rat &r);

    const mpz_class &numerator() const noexcept { return k_; }
    unsigned long exponent() const noexcept { return m_; }
    Rat to_rat() const;
    std::string str() const { return to_rat().str(); }

    Dyadic half() const { return Dyadic(k_, m_ + 1); }

    Dyadic operator-() const { return Dyadic(mpz_class(-k_), m_); }
    friend Dyadic operator+(const Dyadic &a, const Dyadic &b);
    friend Dyadic operator-(const Dyadic &a, const Dyadic &b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic &a, const Dyadic &b);

    friend bool operator==(const Dyadic &, const Dyadic &) = default;
    friend std::strong_ordering operator<=>(const Dyadic &a, const Dyadic &b);

private:
    void reduce();

    mpz_class k_{0};
    unsigned long m_ = 0;
};

Dyadic to_dyadic(const SignSeq &a);
SignSeq from_dyadic(const Dyadic &d);

} // namespace ts::surreal
