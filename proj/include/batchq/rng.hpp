#pragma once

#include <cstdint>

namespace batchq {

// Reproducible random stream: the draw sequence depends only on (seed, stream),
// never on thread layout or platform. xoshiro256++ seeded through splitmix64.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();

    // Uniform on [0, 1) with 53 random bits.
    double next_double();

    // Uniform on (0, 1]; safe as a log() argument.
    double next_open_double();

    double uniform(double lo, double hi);
    double exponential(double rate);
    std::uint64_t uniform_index(std::uint64_t n); // [0, n)

    // Exact Poisson variate: sequential inversion for small means,
    // transformed rejection (PTRS) otherwise.
    long long poisson(double mean);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

private:
    std::uint64_t state_[4];
    std::uint64_t seed_;
    std::uint64_t stream_;
};

} // namespace batchq
