#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ts/series.hpp"
#include "ts/series_json.hpp"

namespace ts
{

// Bounds for randomly generated exact series. Monomials carry a log-exponent
// vector of length <= max_log_depth + 1 with exponents p/q, |p/q| <= exponent_bound,
// q <= 3, and an exp part of height < max_height with probability 1/3.
struct GenConfig {
    std::uint64_t seed = 1;
    unsigned max_terms = 4;
    unsigned max_height = 1;
    unsigned max_log_depth = 2;
    unsigned exponent_bound = 3;
    unsigned coeff_bound = 9;

    void validate() const;
};

class SeriesGenerator
{
public:
    explicit SeriesGenerator(const GenConfig &config);
    SeriesGenerator(const GenConfig &config, std::uint64_t stream);

    Rat coefficient();
    Rat exponent();
    LogMonomial log_monomial();
    Transmonomial monomial() { return monomial(config_.max_height); }
    Transmonomial monomial(unsigned max_height);
    // Exact series with 0..max_terms terms.
    Transseries series();
    Transseries nonzero_series();
    // Exact, nonzero, all monomials above 1.
    Transseries purely_large(unsigned max_height);

    std::mt19937_64 &engine() { return rng_; }

private:
    std::size_t uniform(std::size_t lo, std::size_t hi);

    GenConfig config_;
    std::mt19937_64 rng_;
};

// iota(f) = 1/f for f != 0, iota(0) = 0.
Transseries iota(const Transseries &f, unsigned budget);

struct ValuationSplit {
    Rat constant;
    Transseries infinitesimal;
};

// f = c + eps with eps < 1. Throws NotBounded when f is not dominated by 1.
ValuationSplit valuation_decompose(const Transseries &f);

struct AxiomTally {
    std::size_t checked = 0;
    std::size_t failed = 0;
};

struct CheckFailure {
    std::size_t case_index = 0;
    std::string axiom;
    std::vector<Json> operands;
};

struct CheckReport {
    std::uint64_t seed = 0;
    std::size_t cases_run = 0;
    std::map<std::string, AxiomTally> tallies;
    std::vector<CheckFailure> failures;

    bool ok() const { return failures.empty(); }
    // Reports from disjoint case ranges combine associatively.
    void merge(const CheckReport &other);
    Json to_json() const;
};

using Derivation = std::function<Transseries(const Transseries &)>;

// Checks on n_cases generated pairs (f, g), case i drawing from stream i of the seed:
//   positivity     f > C  =>  f' > 0
//   small          f < 1  =>  f' < 1
//   dominance      f <= g  <=>  f' <= g'   for nonzero f, g not asymptotic to 1
//   valuation      valuation_decompose succeeds exactly when f <= 1
//   additivity     (f + g)' = f' + g'
//   leibniz        (f g)' = f' g + f g'
//   constants      f' = 0 exactly when f is constant
CheckReport check_axioms(const GenConfig &config, std::size_t n_cases, const Derivation &derivation = {});

// -2 lambda_n' - lambda_n^2 == omega_n, compared exactly.
bool lambda_omega_identity(std::size_t n);

} // namespace ts
