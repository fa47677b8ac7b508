#pragma once

#include <cstddef>

#include "ts/series.hpp"

namespace ts
{

// e^f = e^g * sum_{n <= budget} eps^n / n! where f = g + eps. A nonzero
// constant term has no rational exponential and raises NonRationalConstant.
Transseries exp(const Transseries &f, unsigned budget);

// log f = log m + sum_{n <= budget} (-1)^(n+1) eps^n / n for f = m * (1 + eps).
// Requires a positive f with leading coefficient 1.
Transseries log(const Transseries &f, unsigned budget);

/// lambda_n = 1/l0 + 1/(l0 l1) + ... + 1/(l0 ... ln)
Transseries lambda(std::size_t n);
/// omega_n = 1/l0^2 + 1/(l0 l1)^2 + ... + 1/(l0 ... ln)^2
Transseries omega_seq(std::size_t n);

struct PredVerdict {
    enum class Outcome { yes, no, unknown };

    Outcome outcome = Outcome::unknown;
    // Least n with f < lambda_n (resp. omega_n) when outcome is yes.
    std::size_t witness = 0;

    friend bool operator==(const PredVerdict &, const PredVerdict &) = default;
};

// Lambda(f): f < lambda_n for some n. Checks n <= budget, then answers no only
// when f - lambda_budget has a positive leading term above every later
// lambda increment.
PredVerdict lambda_pred(const Transseries &f, std::size_t budget);
PredVerdict omega_pred(const Transseries &f, std::size_t budget);

} // namespace ts
