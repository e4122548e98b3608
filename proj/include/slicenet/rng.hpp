#pragma once

#include <cstdint>
#include <random>

namespace slicenet {

/// Deterministic 64-bit PRNG. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; all derived samples are computed here
/// rather than through <random> distributions, which vary by library.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform01();

    /// Uniform index in [0, n). n must be > 0.
    std::size_t uniform_index(std::size_t n);

    /// Exponential with the given rate, by inverse transform: -ln(1 - u) / rate.
    double exponential(double rate);

    friend bool operator==(const Rng&, const Rng&) = default;

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for the independent stream `index` under `master`.
std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) noexcept;

}  // namespace slicenet
