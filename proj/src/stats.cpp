#include "batchq/stats.hpp"

#include "batchq/error.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>

namespace batchq {

double log_binomial(long long n, long long k) {
    if (k < 0 || k > n)
        throw DomainError("log_binomial: k out of range");
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

double chi_square_pvalue(double statistic, double df) {
    if (df <= 0.0)
        return 1.0;
    if (statistic <= 0.0)
        return 1.0;
    return boost::math::gamma_q(df / 2.0, statistic / 2.0);
}

namespace {

// Pool trailing cells so each expected count reaches the floor; returns
// (pooled observed, pooled expected).
void pool_cells(std::vector<double>& observed, std::vector<double>& expected, double min_expected) {
    std::vector<double> obs_out, exp_out;
    double o_acc = 0.0, e_acc = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        o_acc += observed[i];
        e_acc += expected[i];
        if (e_acc >= min_expected) {
            obs_out.push_back(o_acc);
            exp_out.push_back(e_acc);
            o_acc = e_acc = 0.0;
        }
    }
    if (e_acc > 0.0 || o_acc > 0.0) {
        if (!exp_out.empty()) {
            obs_out.back() += o_acc;
            exp_out.back() += e_acc;
        } else {
            obs_out.push_back(o_acc);
            exp_out.push_back(e_acc);
        }
    }
    observed = std::move(obs_out);
    expected = std::move(exp_out);
}

} // namespace

ChiSquareResult chi_square_gof(std::span<const std::size_t> counts,
                               std::span<const double> expected_probs, std::size_t n_draws,
                               double min_expected) {
    std::size_t len = std::max(counts.size(), expected_probs.size());
    std::vector<double> observed(len, 0.0), expected(len, 0.0);
    for (std::size_t i = 0; i < counts.size(); ++i)
        observed[i] = static_cast<double>(counts[i]);
    double prob_mass = 0.0;
    for (std::size_t i = 0; i < expected_probs.size(); ++i) {
        expected[i] = expected_probs[i] * static_cast<double>(n_draws);
        prob_mass += expected_probs[i];
    }
    // Mass the model places beyond the table belongs to the last cell.
    double leftover = std::max(0.0, 1.0 - prob_mass) * static_cast<double>(n_draws);
    expected.back() += leftover;

    pool_cells(observed, expected, min_expected);

    ChiSquareResult r;
    r.bins = observed.size();
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0)
            continue;
        double d = observed[i] - expected[i];
        r.statistic += d * d / expected[i];
    }
    r.df = static_cast<double>(r.bins > 1 ? r.bins - 1 : 0);
    r.p_value = chi_square_pvalue(r.statistic, r.df);
    return r;
}

ChiSquareResult chi_square_two_sample(std::span<const std::size_t> counts_a,
                                      std::span<const std::size_t> counts_b, double min_expected) {
    std::size_t len = std::max(counts_a.size(), counts_b.size());
    std::vector<double> a(len, 0.0), b(len, 0.0);
    double na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < counts_a.size(); ++i) {
        a[i] = static_cast<double>(counts_a[i]);
        na += a[i];
    }
    for (std::size_t i = 0; i < counts_b.size(); ++i) {
        b[i] = static_cast<double>(counts_b[i]);
        nb += b[i];
    }
    if (na == 0.0 || nb == 0.0)
        throw DomainError("chi_square_two_sample: empty sample");

    // Pool on pooled counts so both samples share the binning.
    std::vector<std::size_t> keep_edges;
    {
        double acc = 0.0;
        const double floor_combined = 2.0 * min_expected;
        for (std::size_t i = 0; i < len; ++i) {
            acc += a[i] + b[i];
            if (acc >= floor_combined) {
                keep_edges.push_back(i);
                acc = 0.0;
            }
        }
        if (keep_edges.empty() || keep_edges.back() != len - 1)
            keep_edges.push_back(len - 1);
    }

    ChiSquareResult r;
    r.bins = keep_edges.size();
    std::size_t start = 0;
    for (std::size_t edge : keep_edges) {
        double oa = 0.0, ob = 0.0;
        for (std::size_t i = start; i <= edge; ++i) {
            oa += a[i];
            ob += b[i];
        }
        start = edge + 1;
        double tot = oa + ob;
        if (tot == 0.0)
            continue;
        double ea = tot * na / (na + nb);
        double eb = tot * nb / (na + nb);
        r.statistic += (oa - ea) * (oa - ea) / ea + (ob - eb) * (ob - eb) / eb;
    }
    r.df = static_cast<double>(r.bins > 1 ? r.bins - 1 : 0);
    r.p_value = chi_square_pvalue(r.statistic, r.df);
    return r;
}

double MeanAccumulator::mean() const {
    return n > 0 ? sum / static_cast<double>(n) : 0.0;
}

double MeanAccumulator::std_error() const {
    if (n < 2)
        return 0.0;
    double m = mean();
    double var = std::max(0.0, (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1));
    return std::sqrt(var / static_cast<double>(n));
}

} // namespace batchq
