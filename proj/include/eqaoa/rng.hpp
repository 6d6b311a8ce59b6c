#pragma once

#include <cstdint>

namespace eqaoa {

// SplitMix64 step. Good enough to whiten seeds for independent streams.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based seed derivation: (base, stream, counter) -> 64-bit seed.
// Streams and counters can be consumed in any order without correlation,
// which keeps concurrent trials replayable.
inline uint64_t derive_seed(uint64_t base, uint64_t stream, uint64_t counter) {
    uint64_t s = base;
    uint64_t a = splitmix64(s);
    s = a ^ (stream * 0x9e3779b97f4a7c15ULL);
    uint64_t b = splitmix64(s);
    s = b ^ (counter * 0xda942042e4dd58b5ULL);
    return splitmix64(s);
}

// Uniform double in [0,1) built from the top 53 bits of the generator output.
// std::uniform_real_distribution is implementation-defined; this is not.
template <class Rng>
double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class Rng>
double uniform_in(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

}  // namespace eqaoa
