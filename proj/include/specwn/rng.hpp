#pragma once

#include <cmath>
#include <cstdint>

namespace specwn {

/// Counter-based random streams: every draw is a pure function of
/// (seed, stream, counter...), so parallel Monte Carlo is reproducible
/// independent of scheduling.
namespace rng {

constexpr std::uint64_t stream_increment = 0;
constexpr std::uint64_t stream_symbol    = 1;
constexpr std::uint64_t stream_tau       = 2;
constexpr std::uint64_t stream_bridge    = 3;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) ^ (0x9e3779b97f4a7c15ULL + b));
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix(mix(a, b), c);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    return mix(mix(a, b, c), d);
}

/// Map 64 bits to (0, 1]; never returns 0 so log() below is safe.
inline double uniform01(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 1.0) * 0x1p-53;
}

/// Standard normal via Box-Muller from two hashed uniforms.
inline double gaussian(std::uint64_t u_bits, std::uint64_t v_bits) {
    const double u = uniform01(u_bits);
    const double v = uniform01(v_bits);
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
}

/// N(0,1) draw addressed by (seed, stream, a, b); order-independent.
inline double gaussian_at(std::uint64_t seed, std::uint64_t stream, std::uint64_t a, std::uint64_t b) {
    return gaussian(mix(seed, stream, a, 2 * b), mix(seed, stream, a, 2 * b + 1));
}

/// U(0,1] draw addressed by (seed, stream, a, b).
inline double uniform_at(std::uint64_t seed, std::uint64_t stream, std::uint64_t a, std::uint64_t b) {
    return uniform01(mix(seed, stream, a, b));
}

} // namespace rng
} // namespace specwn
