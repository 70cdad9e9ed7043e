#include "batchq/rng.hpp"

#include "batchq/error.hpp"

#include <cmath>

namespace batchq {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
    // Mixing the stream id through splitmix decorrelates nearby ids.
    std::uint64_t x = seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL);
    for (auto& w : state_)
        w = splitmix64(x);
    // xoshiro must not start from the all-zero state.
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
        state_[0] = 0x1ULL;
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_open_double() {
    return 1.0 - next_double();
}

double RngStream::uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
}

double RngStream::exponential(double rate) {
    if (!(rate > 0.0))
        throw DomainError("exponential rate must be positive");
    return -std::log(next_open_double()) / rate;
}

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
    if (n == 0)
        throw DomainError("uniform_index over empty range");
    // Rejection on the top range keeps the draw unbiased.
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % n;
}

long long RngStream::poisson(double mean) {
    if (mean < 0.0 || !std::isfinite(mean))
        throw DomainError("poisson mean must be finite and nonnegative");
    if (mean == 0.0)
        return 0;
    if (mean < 10.0) {
        // Inversion by sequential search.
        const double l = std::exp(-mean);
        long long k = 0;
        double p = l;
        double u = next_double();
        while (u > p) {
            u -= p;
            ++k;
            p *= mean / static_cast<double>(k);
            if (k > 2000) // unreachable for mean < 10 barring FP pathology
                break;
        }
        return k;
    }
    // PTRS transformed rejection (Hormann 1993).
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);
    for (;;) {
        double u = next_double() - 0.5;
        double v = next_double();
        double us = 0.5 - std::fabs(u);
        double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r)
            return static_cast<long long>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us))
            continue;
        double k = kf;
        if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
            k * log_mean - mean - std::lgamma(k + 1.0))
            return static_cast<long long>(kf);
    }
}

} // namespace batchq
