#ifndef R2PENCIL_SAMPLING_HPP
#define R2PENCIL_SAMPLING_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "r2pencil/errors.hpp"
#include "r2pencil/rng.hpp"
#include "r2pencil/scalar.hpp"

namespace r2pencil {

// Sample points for residual checks live on the dyadic grid k/8 so the
// same draw is exactly representable in both backends.
template <class S>
S sample_grid_point(SplitMix64& rng) {
    long long a = rng.next_in(-32, 32);
    long long b = rng.next_in(-32, 32);
    return ScalarTraits<S>::from_dyadic(a, b, 8);
}

// Draw `count` points avoiding poles, resampling each point up to
// `max_attempts` times before surfacing PoleHit.
template <class S>
std::vector<S> sample_nonpole_points(std::size_t count, std::uint64_t seed,
                                     const std::function<bool(const S&)>& hits_pole,
                                     int max_attempts = 100) {
    SplitMix64 rng(seed);
    std::vector<S> out;
    out.reserve(count);
    while (out.size() < count) {
        bool placed = false;
        for (int attempt = 0; attempt < max_attempts; ++attempt) {
            S z = sample_grid_point<S>(rng);
            if (!hits_pole(z)) {
                out.push_back(z);
                placed = true;
                break;
            }
        }
        if (!placed) throw PoleHit("could not sample a non-pole point within the attempt budget");
    }
    return out;
}

} // namespace r2pencil

#endif
