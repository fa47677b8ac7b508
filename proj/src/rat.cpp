#include "ts/rat.hpp"

#include <ostream>

#include "ts/error.hpp"

namespace ts
{

Rat::Rat(long num, long den)
{
    if (den == 0) {
        throw DivisionByZero();
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v))
{
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text)
{
    std::string s(text);
    if (s.empty()) {
        throw InvalidArgument("empty rational literal");
    }
    const auto dot = s.find('.');
    try {
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            const std::size_t scale = s.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+") {
                throw InvalidArgument("malformed decimal literal '" + s + "'");
            }
            if (digits[0] == '+') {
                digits.erase(0, 1);
            }
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
            return Rat(mpq_class(mpz_class(digits, 10), den));
        }
        if (!s.empty() && s[0] == '+') {
            s.erase(0, 1);
        }
        mpq_class q(s, 10);
        if (q.get_den() == 0) {
            throw DivisionByZero();
        }
        return Rat(std::move(q));
    } catch (const std::invalid_argument &) {
        throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
    }
}

Rat Rat::reciprocal() const
{
    if (is_zero()) {
        throw DivisionByZero();
    }
    return Rat(mpq_class(1 / v_));
}

Rat &Rat::operator+=(const Rat &o)
{
    v_ += o.v_;
    return *this;
}

Rat &Rat::operator-=(const Rat &o)
{
    v_ -= o.v_;
    return *this;
}

Rat &Rat::operator*=(const Rat &o)
{
    v_ *= o.v_;
    return *this;
}

Rat &Rat::operator/=(const Rat &o)
{
    if (o.is_zero()) {
        throw DivisionByZero();
    }
    v_ /= o.v_;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Rat &r)
{
    return os << r.str();
}

Rat factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

} // namespace ts
