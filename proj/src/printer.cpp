#include "ts/printer.hpp"

#include <vector>

namespace ts
{

namespace
{

std::string join(const std::vector<std::string> &parts, const char *sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

std::string power_suffix(const Rat &r)
{
    if (r.is_one()) {
        return "";
    }
    if (r.is_integer()) {
        return "^" + r.str();
    }
    return "^(" + r.str() + ")";
}

std::string ell_name(std::size_t i)
{
    return i == 0 ? "x" : "l" + std::to_string(i);
}

std::string exp_factor(const Transseries &L)
{
    if (L.terms().size() == 1 && L.terms()[0].coeff.is_one() && L.terms()[0].monomial == Transmonomial::x_pow(1)) {
        return "e^x";
    }
    return "e^(" + print_canonical(L) + ")";
}

// |c| * m for c != 0.
std::string term_body(const Transmonomial &m, const Rat &c)
{
    std::vector<std::string> num;
    std::vector<std::string> den;
    const mpz_class p = abs(c.num());
    const mpz_class q = c.den();
    if (p != 1) {
        num.push_back(p.get_str());
    }
    if (q != 1) {
        den.push_back(q.get_str());
    }
    if (m.has_exppart()) {
        num.push_back(exp_factor(m.exppart()));
    }
    const auto &exps = m.logpart().exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i].sign() > 0) {
            num.push_back(ell_name(i) + power_suffix(exps[i]));
        } else if (exps[i].sign() < 0) {
            den.push_back(ell_name(i) + power_suffix(-exps[i]));
        }
    }
    std::string out = num.empty() ? "1" : join(num, "*");
    if (den.size() == 1) {
        out += "/" + den[0];
    } else if (den.size() > 1) {
        out += "/(" + join(den, "*") + ")";
    }
    return out;
}

} // namespace

std::string print_monomial(const Transmonomial &m)
{
    return term_body(m, Rat(1));
}

std::string print_canonical(const Transseries &f)
{
    std::string out;
    for (const Term &t : f.terms()) {
        const bool negative = t.coeff.sign() < 0;
        if (out.empty()) {
            out = negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += term_body(t.monomial, t.coeff);
    }
    if (f.bound()) {
        out += (out.empty() ? "O(" : " + O(") + print_monomial(*f.bound()) + ")";
    }
    return out.empty() ? "0" : out;
}

std::string print_diffpoly(const DiffPolynomial &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &[idx, c] : p.coefficients()) {
        std::vector<std::string> vars;
        const auto &exps = idx.exponents();
        for (std::size_t k = exps.size(); k-- > 0;) {
            if (exps[k] > 0) {
                vars.push_back("Y" + std::string(k, '\'') + power_suffix(Rat(static_cast<long>(exps[k]))));
            }
        }
        bool negative = false;
        std::string coeff;
        if (c.is_exact() && c.terms().size() == 1) {
            const Term &t = c.terms()[0];
            negative = t.coeff.sign() < 0;
            if (!(t.monomial.is_one() && t.coeff.abs().is_one()) || vars.empty()) {
                coeff = term_body(t.monomial, t.coeff);
            }
        } else {
            coeff = "(" + print_canonical(c) + ")";
        }
        if (!coeff.empty()) {
            vars.insert(vars.begin(), coeff);
        }
        if (out.empty()) {
            out = negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += join(vars, "*");
    }
    return out;
}

} // namespace ts
