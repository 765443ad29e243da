#ifndef R2PENCIL_RNG_HPP
#define R2PENCIL_RNG_HPP

#include <cstdint>

namespace r2pencil {

// splitmix64 (Steele/Lea/Flood finalizer), fixed as the repo's seeded
// generator: 64-bit state, state += 0x9e3779b97f4a7c15 per draw, output
// mixed with the two xor-shift multiplies below.  Reproducible across
// platforms by construction (pure uint64 arithmetic).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] (inclusive), by rejection-free modulo; the tiny
    // modulo bias is irrelevant for instance sampling and keeps the
    // algorithm trivially documentable.
    long long next_in(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(next() % span);
    }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

} // namespace r2pencil

#endif
