#pragma once

#include "ts/series.hpp"

namespace ts
{

// Termwise derivative d/dx. A truncated input keeps the bound
// max(lead(bound'), bound).
Transseries derive(const Transseries &f);

// The derivative of a single monomial, as an exact series.
Transseries derive(const Transmonomial &m);

// f o exp: l(i+1) -> l(i), x^r -> e^(r x).
Transseries upward_shift(const Transseries &f);
Transmonomial upward_shift(const Transmonomial &m);

// f o log: l(i) -> l(i+1), with exp(r l(k+1)) folded back into l(k)^r.
Transseries downward_shift(const Transseries &f);
Transmonomial downward_shift(const Transmonomial &m);

} // namespace ts
