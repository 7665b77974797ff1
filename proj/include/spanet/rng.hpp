#pragma once

#include <cstdint>

namespace spanet {

// SplitMix64. Fixed algorithm, no std:: distributions, so that every stream
// is bit-reproducible across compilers and platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1), 53 random bits
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform integer in [0,n), n >= 1; multiply-shift map
    uint64_t next_below(uint64_t n) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * n) >> 64);
    }

private:
    uint64_t state_;
};

// Keyed derivation for counter-based substreams: hash the key chain, then run
// SplitMix64 from the resulting state.
inline uint64_t mix_key(uint64_t a, uint64_t b) {
    uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline Rng substream(uint64_t seed, uint64_t a) { return Rng(mix_key(seed, a)); }

inline Rng substream(uint64_t seed, uint64_t a, uint64_t b) {
    return Rng(mix_key(mix_key(seed, a), b));
}

} // namespace spanet
