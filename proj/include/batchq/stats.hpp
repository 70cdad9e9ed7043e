#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace batchq {

// log C(n, k) via lgamma; stable for large n.
double log_binomial(long long n, long long k);

// Upper tail of the chi-square distribution with df degrees of freedom.
double chi_square_pvalue(double statistic, double df);

struct ChiSquareResult {
    double statistic = 0.0;
    double df = 0.0;
    double p_value = 1.0;
    std::size_t bins = 0;
};

// Goodness of fit of observed counts against expected probabilities.
// Cells are pooled greedily from the right until every expected count is at
// least min_expected; expected mass beyond the table goes to the last cell.
ChiSquareResult chi_square_gof(std::span<const std::size_t> counts,
                               std::span<const double> expected_probs, std::size_t n_draws,
                               double min_expected = 5.0);

// Two-sample chi-square homogeneity test on count vectors over a shared
// support (same pooling rule applied to the combined counts).
ChiSquareResult chi_square_two_sample(std::span<const std::size_t> counts_a,
                                      std::span<const std::size_t> counts_b,
                                      double min_expected = 5.0);

// Welford-style accumulator for (value, std_error) of a sample mean.
struct MeanAccumulator {
    std::size_t n = 0;
    double sum = 0.0;
    double sum_sq = 0.0;

    void add(double x) {
        ++n;
        sum += x;
        sum_sq += x * x;
    }
    double mean() const;
    double std_error() const;
};

} // namespace batchq
