#pragma once

// Height-0 reference expansions for the lambda/omega sequences, built without
// the library's derivation.

#include <map>
#include <vector>

#include "ts/series.hpp"

namespace ts::test
{

// (l0 ... lk)^-p
inline Transmonomial ell_product(std::size_t k, long p)
{
    return Transmonomial(LogMonomial(std::vector<Rat>(k + 1, Rat(-p))));
}

// Height-0 series as a map from log-exponent vectors to coefficients; used to
// check the lambda/omega identity without the library's derivation.
using Poly = std::map<std::vector<Rat>, Rat>;

inline void add_to(Poly &p, const std::vector<Rat> &e, const Rat &c)
{
    Rat &slot = p[e];
    slot += c;
    if (slot.is_zero()) {
        p.erase(e);
    }
}

inline Transseries to_series(const Poly &p)
{
    std::vector<Term> terms;
    for (const auto &[e, c] : p) {
        terms.push_back({Transmonomial(LogMonomial(e)), c});
    }
    return Transseries(std::move(terms));
}

// -2 lambda_n' - lambda_n^2 via d/dx (l0...lk)^-1 = -(l0...lk)^-1 sum_{i<=k} (l0...li)^-1
inline Transseries identity_oracle(std::size_t n)
{
    const std::size_t width = n + 1;
    auto vec = [&](std::size_t k, long p) {
        std::vector<Rat> v(width, Rat(0));
        for (std::size_t i = 0; i <= k; ++i) {
            v[i] = Rat(-p);
        }
        return v;
    };
    Poly out;
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            std::vector<Rat> e = vec(k, 1);
            const std::vector<Rat> f = vec(i, 1);
            for (std::size_t j = 0; j < width; ++j) {
                e[j] += f[j];
            }
            add_to(out, e, Rat(2));
        }
    }
    for (std::size_t a = 0; a <= n; ++a) {
        for (std::size_t b = 0; b <= n; ++b) {
            std::vector<Rat> e = vec(a, 1);
            const std::vector<Rat> f = vec(b, 1);
            for (std::size_t j = 0; j < width; ++j) {
                e[j] += f[j];
            }
            add_to(out, e, Rat(-1));
        }
    }
    Poly trimmed;
    for (const auto &[e, c] : out) {
        std::vector<Rat> t = e;
        while (!t.empty() && t.back().is_zero()) {
            t.pop_back();
        }
        add_to(trimmed, t, c);
    }
    return to_series(trimmed);
}

} // namespace ts::test
