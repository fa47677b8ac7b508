#pragma once

#include <string>

#include "ts/diffpoly.hpp"
#include "ts/series.hpp"

namespace ts
{

// Decreasing terms joined by " + " / " - ", e.g. "x^2 - 1", "1/x + 1/(x*l1)",
// "e^(x^2) + 3*x/4 + O(1/x^3)". Exact zero prints as "0".
std::string print_canonical(const Transseries &f);

// The monomial alone, e.g. "e^x*x^(1/2)/l1^2".
std::string print_monomial(const Transmonomial &m);

// Higher-order variables first: "Y'' + (x + 1)*Y' - 2*Y^2".
std::string print_diffpoly(const DiffPolynomial &p);

} // namespace ts
