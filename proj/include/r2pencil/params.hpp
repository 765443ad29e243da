#ifndef R2PENCIL_PARAMS_HPP
#define R2PENCIL_PARAMS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "r2pencil/errors.hpp"
#include "r2pencil/scalar.hpp"

namespace r2pencil {

// The defining data (alpha_j, beta_j, e_j, d_j, c_j).
//
// Storage: alpha[j-1] = alpha_j for j >= 1; beta[j] = beta_j for j >= 0
// with beta_0 = 0 forced; e/d/c[j-1] = e_j/d_j/c_j for j >= 1.  c_1
// multiplies r_{-1} = 0, so it is accepted and ignored (fixtures store a
// placeholder 1).
template <class S>
struct ParamSeq {
    using traits = ScalarTraits<S>;

    std::vector<S> alpha;
    std::vector<S> beta;
    std::vector<S> e;
    std::vector<S> d;
    std::vector<S> c;

    S alpha_(std::size_t j) const {
        if (j < 1 || j > alpha.size()) throw ParamOutOfRange("alpha_" + std::to_string(j) + " not stored");
        return alpha[j - 1];
    }
    S beta_(std::size_t j) const {
        if (j >= beta.size()) throw ParamOutOfRange("beta_" + std::to_string(j) + " not stored");
        return beta[j];
    }
    S e_(std::size_t j) const {
        if (j < 1 || j > e.size()) throw ParamOutOfRange("e_" + std::to_string(j) + " not stored");
        return e[j - 1];
    }
    S d_(std::size_t j) const {
        if (j < 1 || j > d.size()) throw ParamOutOfRange("d_" + std::to_string(j) + " not stored");
        return d[j - 1];
    }
    S c_(std::size_t j) const {
        if (j < 1 || j > c.size()) throw ParamOutOfRange("c_" + std::to_string(j) + " not stored");
        return c[j - 1];
    }
    S alpha_bar(std::size_t j) const { return traits::conj(alpha_(j)); }
    S beta_bar(std::size_t j) const { return traits::conj(beta_(j)); }

    // Largest N such that r_1..r_N are constructible from the stored
    // parameters.  The odd step r_{2n+1} consumes e/d/c_{2n+1}, beta_n
    // and (for n >= 1) alpha_n; the even step r_{2n+2} consumes
    // e/d/c_{2n+2}, alpha_{n+1} and beta_n.
    std::size_t max_numerator_index() const {
        std::size_t coeff_cap = std::min(e.size(), d.size());
        coeff_cap = std::min(coeff_cap, c.size());
        std::size_t best = 0;
        for (std::size_t k = 1; k <= coeff_cap; ++k) {
            if (k % 2 == 1) {
                std::size_t n = (k - 1) / 2;
                if (n >= beta.size()) break;
                if (n >= 1 && n > alpha.size()) break;
            } else {
                std::size_t n = (k - 2) / 2;
                if (n + 1 > alpha.size() || n >= beta.size()) break;
            }
            best = k;
        }
        return best;
    }

    // Validation gate for the whole pipeline.  d_j != 0 is needed by the
    // section-4 reparameterization; relaxed mode drops that requirement
    // for runs that stop at the biorthogonality layer.
    void validate(bool require_d_nonzero = true) const {
        if (beta.empty()) throw ConfigError("beta must contain at least beta_0 = 0");
        if (!traits::is_zero(beta[0])) throw ConfigError("beta[0] must be exactly 0");
        for (std::size_t j = 1; j < beta.size(); ++j)
            if (traits::is_zero(beta[j])) throw ConfigError("beta[" + std::to_string(j) + "] must be nonzero");
        for (std::size_t j = 0; j < alpha.size(); ++j)
            if (traits::is_zero(alpha[j])) throw ConfigError("alpha[" + std::to_string(j + 1) + "] must be nonzero");
        for (std::size_t j = 1; j < c.size(); ++j) // c_1 ignored
            if (traits::is_zero(c[j])) throw ConfigError("c[" + std::to_string(j + 1) + "] must be nonzero");
        if (require_d_nonzero)
            for (std::size_t j = 0; j < d.size(); ++j)
                if (traits::is_zero(d[j])) throw ConfigError("d[" + std::to_string(j + 1) + "] must be nonzero");
        if (e.size() != d.size() || d.size() != c.size())
            throw ConfigError("e, d, c must have equal lengths");
    }
};

namespace detail {
template <class S>
S mk(long re, long im) {
    return ScalarTraits<S>::from_dyadic(re, im, 1);
}
} // namespace detail

// Fixture S1: alpha = (2,3), beta = (0,i,-1), e = (1,1,0), d = (2,1,1),
// c = (., 2, 1).
template <class S>
ParamSeq<S> preset_s1() {
    using detail::mk;
    ParamSeq<S> p;
    p.alpha = {mk<S>(2, 0), mk<S>(3, 0)};
    p.beta = {mk<S>(0, 0), mk<S>(0, 1), mk<S>(-1, 0)};
    p.e = {mk<S>(1, 0), mk<S>(1, 0), mk<S>(0, 0)};
    p.d = {mk<S>(2, 0), mk<S>(1, 0), mk<S>(1, 0)};
    p.c = {mk<S>(1, 0), mk<S>(2, 0), mk<S>(1, 0)};
    return p;
}

// Fixture S2 (section-4 special case): alpha = 2 throughout,
// beta = (0, i, -1, -i), e = (1,1,0,1), d = (2,1,1,1), c = (., 2, 1, 2).
template <class S>
ParamSeq<S> preset_s2() {
    using detail::mk;
    ParamSeq<S> p;
    p.alpha = {mk<S>(2, 0), mk<S>(2, 0)};
    p.beta = {mk<S>(0, 0), mk<S>(0, 1), mk<S>(-1, 0), mk<S>(0, -1)};
    p.e = {mk<S>(1, 0), mk<S>(1, 0), mk<S>(0, 0), mk<S>(1, 0)};
    p.d = {mk<S>(2, 0), mk<S>(1, 0), mk<S>(1, 0), mk<S>(1, 0)};
    p.c = {mk<S>(1, 0), mk<S>(2, 0), mk<S>(1, 0), mk<S>(2, 0)};
    return p;
}

} // namespace r2pencil

#endif
