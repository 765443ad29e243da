#ifndef R2PENCIL_INSTANCE_HPP
#define R2PENCIL_INSTANCE_HPP

#include <cstdint>
#include <vector>

#include "r2pencil/errors.hpp"
#include "r2pencil/params.hpp"
#include "r2pencil/recurrence.hpp"
#include "r2pencil/rng.hpp"

namespace r2pencil {

// Backend-agnostic integer draws for one instance.  Generic values live
// on the dyadic grid (re + im*i)/16 restricted to the annulus
// 1/4 <= |v|^2 <= 4; unimodular values are Pythagorean points
// sgn * ((1-t^2) + 2t*i)/(1+t^2) with t = k/8.  Acceptance/rejection is
// decided in exact arithmetic on these draws, so every backend sees the
// same instance for a given seed.
struct InstanceDraws {
    struct Annulus {
        long long re, im; // value = (re + im*i)/16
    };
    struct Unimodular {
        long long t;   // tangent half-angle numerator, t/8
        long long sgn; // +1 or -1
    };
    std::vector<Annulus> alpha;
    std::vector<Unimodular> beta; // beta_1.. (beta_0 = 0 implicit)
    std::vector<Annulus> beta_generic;
    std::vector<Annulus> e, d, c;
    bool unimodular = false;
    bool constant_alpha = false;
};

namespace detail {

inline InstanceDraws::Annulus draw_annulus(SplitMix64& rng) {
    for (;;) {
        long long a = rng.next_in(-32, 32);
        long long b = rng.next_in(-32, 32);
        long long n2 = a * a + b * b; // |v|^2 * 256
        if (n2 >= 64 && n2 <= 1024) return {a, b};
    }
}

inline InstanceDraws::Unimodular draw_unimodular(SplitMix64& rng) {
    long long t = rng.next_in(-8, 8);
    long long sgn = (rng.next() & 1) ? 1 : -1;
    return {t, sgn};
}

template <class S>
S annulus_value(const InstanceDraws::Annulus& a) {
    return ScalarTraits<S>::from_dyadic(a.re, a.im, 16);
}

template <class S>
S unimodular_value(const InstanceDraws::Unimodular& u) {
    using traits = ScalarTraits<S>;
    S t = traits::from_dyadic(u.t, 0, 8);
    S one = traits::one();
    S i = traits::from_dyadic(0, 1, 1);
    S v = (one - t * t + (t + t) * i) / (one + t * t);
    return (u.sgn > 0) ? v : -v;
}

} // namespace detail

// Materialize a draw as a parameter sequence in the requested backend.
template <class S>
ParamSeq<S> materialize(const InstanceDraws& draws) {
    using traits = ScalarTraits<S>;
    ParamSeq<S> p;
    if (draws.constant_alpha) {
        S a = detail::annulus_value<S>(draws.alpha.at(0));
        p.alpha.assign(draws.alpha.size(), a);
    } else {
        for (const auto& a : draws.alpha) p.alpha.push_back(detail::annulus_value<S>(a));
    }
    p.beta.push_back(traits::zero());
    if (draws.unimodular) {
        for (const auto& b : draws.beta) p.beta.push_back(detail::unimodular_value<S>(b));
    } else {
        for (const auto& b : draws.beta_generic) p.beta.push_back(detail::annulus_value<S>(b));
    }
    for (const auto& v : draws.e) p.e.push_back(detail::annulus_value<S>(v));
    for (const auto& v : draws.d) p.d.push_back(detail::annulus_value<S>(v));
    for (const auto& v : draws.c) p.c.push_back(detail::annulus_value<S>(v));
    return p;
}

// Rejection-sample an instance supporting numerators r_1..r_N whose full
// regularity report (numbered and auxiliary conditions) passes, decided
// in exact arithmetic.  Same seed, same instance, bit-identically.
inline InstanceDraws gen_instance_draws(std::uint64_t seed, std::size_t N, bool unimodular,
                                        int max_attempts = 100) {
    SplitMix64 rng(seed);
    const std::size_t n_alpha = N / 2 + 1;
    const std::size_t n_beta = N / 2 + 1;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        InstanceDraws draws;
        draws.unimodular = unimodular;
        draws.constant_alpha = unimodular; // the section-4 special case needs a single pole
        for (std::size_t j = 0; j < n_alpha; ++j) draws.alpha.push_back(detail::draw_annulus(rng));
        for (std::size_t j = 0; j < n_beta; ++j) {
            if (unimodular)
                draws.beta.push_back(detail::draw_unimodular(rng));
            else
                draws.beta_generic.push_back(detail::draw_annulus(rng));
        }
        for (std::size_t j = 0; j < N; ++j) {
            draws.e.push_back(detail::draw_annulus(rng));
            draws.d.push_back(detail::draw_annulus(rng));
            draws.c.push_back(detail::draw_annulus(rng));
        }
        try {
            ParamSeq<ExactComplex> probe = materialize<ExactComplex>(draws);
            probe.validate();
            auto rs = gen_numerators(probe, std::min(N, probe.max_numerator_index()));
            if (check_regularity(probe, rs).all_ok) return draws;
        } catch (const Error&) {
            // resample
        }
    }
    throw GenerationFailed("no regular instance found within the attempt budget");
}

template <class S>
ParamSeq<S> gen_instance(std::uint64_t seed, std::size_t N, bool unimodular, int max_attempts = 100) {
    return materialize<S>(gen_instance_draws(seed, N, unimodular, max_attempts));
}

} // namespace r2pencil

#endif
