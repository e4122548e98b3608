#include "slicenet/rng.hpp"

#include <cmath>

#include "slicenet/error.hpp"

namespace slicenet {

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::uniform_index(std::size_t n) {
    if (n == 0) throw ValidationError("uniform_index over an empty range");
    const auto i = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    return i < n ? i : n - 1;
}

double Rng::exponential(double rate) {
    if (!(rate > 0) || !std::isfinite(rate)) {
        throw ValidationError("exponential rate must be finite and > 0");
    }
    return -std::log1p(-uniform01()) / rate;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace slicenet
