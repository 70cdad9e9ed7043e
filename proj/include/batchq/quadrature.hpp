#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace batchq {

// PMF on the nonnegative integer lattice with a certified truncation bound:
// masses[k] is the probability of offset + k, and everything outside the
// stored window weighs at most truncation_error.
struct LatticePmf {
    long long offset = 0;
    std::vector<double> masses;
    double truncation_error = 0.0;

    double mass_at(long long k) const {
        if (k < offset || k >= offset + static_cast<long long>(masses.size()))
            return 0.0;
        return masses[static_cast<std::size_t>(k - offset)];
    }
    long long support_end() const { return offset + static_cast<long long>(masses.size()); }
    double total_mass() const;
    double mean() const;
    double variance() const;
};

// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b].
// The interval is pre-split at the supplied breakpoints, then the panel with
// the largest error estimate is bisected until
//   sum(errors) <= tol * max(1, |integral|).
// Throws ConvergenceError (carrying the best estimate) at the panel limit.
double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 std::span<const double> breakpoints = {}, std::size_t max_panels = 4000);

// Poisson(mean) truncated to the smallest window with tail mass <= eps,
// computed by mode-anchored up/down recurrences.
LatticePmf poisson_pmf(double mean, double eps);

// Distribution of sum_i scale_i * N_i for independent N_i ~ Poisson(mean_i),
// by exact lattice convolution of per-term truncations (budget eps split
// uniformly across terms). Scales must be >= 1.
LatticePmf convolve_scaled(std::span<const std::pair<long long, double>> terms, double eps,
                           std::size_t support_cap = 1000000);

} // namespace batchq
