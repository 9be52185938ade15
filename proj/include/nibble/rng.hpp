#ifndef NIBBLE_RNG_HPP
#define NIBBLE_RNG_HPP

#include <cstdint>

namespace nibble::rng {

// SplitMix64 finalizer. All randomness in the project is counter-based on
// top of this mixer, so draws are keyed by (seed, channel, indices) and do
// not depend on evaluation order.
inline std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

enum class Channel : std::uint64_t {
    Activation = 1,
    Selection = 2,
    QSample = 3,
    Pick = 4,
    Completion = 5,
    GenUniform = 6,
    GenLinear = 7,
    TriangleFree = 8,
};

inline std::uint64_t key(std::uint64_t seed, Channel ch, std::uint64_t a = 0,
                         std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t h = mix(seed ^ 0x6A09E667F3BCC909ull);
    h = mix(h ^ static_cast<std::uint64_t>(ch));
    h = mix(h ^ a);
    h = mix(h ^ b);
    h = mix(h ^ c);
    return h;
}

inline std::uint64_t u64_at(std::uint64_t stream_key, std::uint64_t counter) {
    return mix(stream_key ^ mix(counter));
}

// uniform in [0,1), 53 bits
inline double unit_at(std::uint64_t stream_key, std::uint64_t counter) {
    return static_cast<double>(u64_at(stream_key, counter) >> 11) * 0x1.0p-53;
}

// Sequential counter stream for inherently ordered draws (Monte Carlo
// sampling, resampling loops, generators).
struct Stream {
    std::uint64_t k0;
    std::uint64_t ctr = 0;

    explicit Stream(std::uint64_t stream_key) : k0(stream_key) {}

    std::uint64_t next_u64() { return u64_at(k0, ctr++); }
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return next_unit() < p; }
    // modulo is fine here: n is always tiny compared to 2^64
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }
};

} // namespace nibble::rng

#endif
