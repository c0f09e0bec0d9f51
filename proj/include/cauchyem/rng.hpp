#pragma once

#include <cmath>
#include <cstdint>

namespace cauchyem {

// Counter-based uniform generator (splitmix64 output function).
//
// Every draw is a pure function of (seed, counter), so any index of any
// stream can be computed independently: parallel maps over draw indices
// produce the same values as a sequential loop, and regeneration from the
// same seed is bit-for-bit identical on every platform.
namespace rng {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Distinct substream for a purpose tag (pool, data, replication schedule, ...).
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t tag) {
    return mix64(seed ^ mix64(tag));
}

// k-th uniform of the stream, strictly inside (0, 1).
inline double uniform_open(std::uint64_t stream, std::uint64_t k) {
    const std::uint64_t bits = mix64(stream + k * 0x9E3779B97F4A7C15ULL);
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

// Box-Muller pair from two uniforms; both components are standard normal.
struct NormalPair {
    double first;
    double second;
};

inline NormalPair normal_pair(double u1, double u2) {
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

}  // namespace rng
}  // namespace cauchyem
