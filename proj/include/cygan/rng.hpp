#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cygan {

/// Seedable generator with independent substreams. Sample i of stream s under
/// seed k always sees the same sequence, regardless of evaluation order or
/// thread count.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

    /// Stable 64-bit id for a stream name (FNV-1a).
    static std::uint64_t stream_id(std::string_view name);

    /// Uniform on [0, 1) with 53 random bits; does not depend on the
    /// standard library's distribution implementations.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    bool bernoulli(double p) { return uniform01() < p; }
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        const auto k = static_cast<std::uint64_t>(uniform01() * static_cast<double>(n));
        return k < n ? k : n - 1;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace cygan
