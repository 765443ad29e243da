#ifndef R2PENCIL_FUNCTIONAL_HPP
#define R2PENCIL_FUNCTIONAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "r2pencil/errors.hpp"
#include "r2pencil/factors.hpp"
#include "r2pencil/params.hpp"
#include "r2pencil/polynomial.hpp"
#include "r2pencil/recurrence.hpp"

namespace r2pencil {

// m_n = N(z^n O_n), kappa_n = leading(r_n), chi_n as in the tilde
// normalization.  The moment recurrences, for n >= 1:
//   m_{2n}   = (c_{2n} m_{2n-2} - d_{2n} conj(alpha_n) m_{2n-1}) / (conj(alpha_n) conj(beta_n))
//   m_{2n+1} = d_{2n+1} m_{2n} + c_{2n+1} m_{2n-1}
//   kappa_{2n}   = c_{2n} kappa_{2n-2} - d_{2n} conj(alpha_n) kappa_{2n-1}
//   kappa_{2n+1} = d_{2n+1} kappa_{2n} + conj(alpha_n) conj(beta_n) c_{2n+1} kappa_{2n-1}
template <class S>
struct MomentTable {
    std::vector<S> m;
    std::vector<S> kappa;
    std::vector<S> chi;
};

template <class S>
MomentTable<S> gen_moments(const ParamSeq<S>& params, const S& m0, const S& m1, std::size_t N) {
    using traits = ScalarTraits<S>;
    if (traits::is_zero(m1 - params.d_(1) * m0))
        throw DegenerateMoments("m1 = d_1 m0 makes every biorthogonality constant vanish");
    MomentTable<S> t;
    t.m.resize(N + 1);
    t.kappa.resize(N + 1);
    t.chi.resize(N + 1);
    t.m[0] = m0;
    t.kappa[0] = traits::one();
    t.chi[0] = traits::one();
    if (N >= 1) {
        t.m[1] = m1;
        t.kappa[1] = params.d_(1);
        t.chi[1] = params.alpha_bar(1);
    }
    for (std::size_t k = 2; k <= N; ++k) {
        if (k % 2 == 0) {
            std::size_t n = k / 2;
            S ab = params.alpha_bar(n);
            S bb = params.beta_bar(n);
            t.m[k] = (params.c_(k) * t.m[k - 2] - params.d_(k) * ab * t.m[k - 1]) / (ab * bb);
            t.kappa[k] = params.c_(k) * t.kappa[k - 2] - params.d_(k) * ab * t.kappa[k - 1];
            t.chi[k] = t.chi[k - 1] / bb;
        } else {
            std::size_t n = (k - 1) / 2;
            t.m[k] = params.d_(k) * t.m[k - 1] + params.c_(k) * t.m[k - 2];
            t.kappa[k] = params.d_(k) * t.kappa[k - 1] + params.alpha_bar(n) * params.beta_bar(n) * params.c_(k) * t.kappa[k - 2];
            t.chi[k] = t.chi[k - 1] * params.alpha_bar(n + 1);
        }
    }
    return t;
}

// Rewrite f as O_N * p with p a polynomial of degree <= N:
//   p = num(f) * expand(den(O_N) \ den(f)) / r_N, exact division required.
// This only succeeds when f was formed as r_N * (rest), which is exactly
// how the proofs reduce products; anything else is NotExpressible.
template <class S>
Polynomial<S> express_in_O(const RationalFn<S>& f, std::size_t N, const std::vector<RationalFn<S>>& Os) {
    using traits = ScalarTraits<S>;
    if (N >= Os.size()) throw ParamOutOfRange("O_" + std::to_string(N) + " not generated");
    FactorBag<S> cof;
    try {
        cof = cofactor_divide(Os[N].den, f.den);
    } catch (const NotDivisible&) {
        throw NotExpressible("den(f) is not a subbag of den(O_N)");
    }
    auto [quot, rem] = Polynomial<S>::div_rem(f.num * cof.expand(), Os[N].num);
    if constexpr (traits::is_exact) {
        if (!rem.is_zero()) throw NotExpressible("numerator division leaves a remainder");
    } else {
        double scale = std::max(1.0, f.num.coeff_mag_max() * std::max(1.0, cof.expand().coeff_mag_max()));
        if (rem.coeff_mag_max() > 1e-8 * scale)
            throw NotExpressible("numerator division leaves a remainder beyond the float tolerance");
    }
    if (quot.degree() > static_cast<int>(N)) throw NotExpressible("reduction degree exceeds N");
    return quot;
}

// N(O_N * p) = coeff_N(p) * m_N: all lower O-moments vanish.
template <class S>
S functional_of_reduction(const Polynomial<S>& p, std::size_t N, const MomentTable<S>& mom) {
    if (N >= mom.m.size()) throw ParamOutOfRange("moments not generated to N");
    return p.coeff(N) * mom.m[N];
}

// N(phi_n * J-tilde_m), reduced against O_{max(n,m)}.
template <class S>
S pair_value(std::size_t n, std::size_t m, const std::vector<RationalFn<S>>& phis,
             const std::vector<RationalFn<S>>& Jts, const std::vector<RationalFn<S>>& Os,
             const MomentTable<S>& mom) {
    std::size_t top = std::max(n, m);
    RationalFn<S> f = multiply(phis[n], Jts[m]);
    Polynomial<S> p = express_in_O(f, top, Os);
    return functional_of_reduction(p, top, mom);
}

// B[n][m] = N(phi_n * psi-tilde_m) via the stored J-tilde combinations.
template <class S>
std::vector<std::vector<S>> biorth_matrix(const std::vector<RationalFn<S>>& phis,
                                          const std::vector<JtCombo<S>>& psis,
                                          const std::vector<RationalFn<S>>& Jts,
                                          const std::vector<RationalFn<S>>& Os,
                                          const MomentTable<S>& mom, std::size_t N) {
    using traits = ScalarTraits<S>;
    std::vector<std::vector<S>> B(N + 1, std::vector<S>(N + 1, traits::zero()));
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t m = 0; m <= N; ++m) {
            S acc = traits::zero();
            for (const auto& [coeff, idx] : psis[m].terms)
                acc += coeff * pair_value(n, idx, phis, Jts, Os, mom);
            B[n][m] = acc;
        }
    return B;
}

// Closed-form diagonal: c_2 ... c_{n+1} (m_1 kappa_0 - m_0 kappa_1) / chi_{n+1}
// (the c-product is empty = 1 for n = 0); covers both parities.
template <class S>
S biorth_closed_diag(const ParamSeq<S>& params, const MomentTable<S>& mom, std::size_t n) {
    using traits = ScalarTraits<S>;
    S prod = traits::one();
    for (std::size_t k = 2; k <= n + 1; ++k) prod = prod * params.c_(k);
    S core = mom.m[1] * mom.kappa[0] - mom.m[0] * mom.kappa[1];
    return prod * core / mom.chi[n + 1];
}

// N(z^k O_n) for k <= n: builds z^k * O_n as a rational function and runs
// it through the same reduction path the pair values use.
template <class S>
S functional_of_zk_O(std::size_t k, std::size_t n, const std::vector<RationalFn<S>>& Os,
                     const MomentTable<S>& mom) {
    RationalFn<S> f = multiply(Os[n], Polynomial<S>::monomial(ScalarTraits<S>::one(), k));
    Polynomial<S> p = express_in_O(f, n, Os);
    return functional_of_reduction(p, n, mom);
}

// All O-indices against which f is expressible, with the reduced value
// for each.  Legal products almost always pin a unique index; when two
// reductions are legal their values must agree exactly (exact backend).
template <class S>
std::vector<std::pair<std::size_t, S>> all_legal_reductions(const RationalFn<S>& f,
                                                            const std::vector<RationalFn<S>>& Os,
                                                            const MomentTable<S>& mom) {
    std::vector<std::pair<std::size_t, S>> out;
    std::size_t cap = std::min(Os.size(), mom.m.size());
    for (std::size_t N = 0; N < cap; ++N) {
        try {
            Polynomial<S> p = express_in_O(f, N, Os);
            out.push_back({N, functional_of_reduction(p, N, mom)});
        } catch (const NotExpressible&) {
        }
    }
    return out;
}

} // namespace r2pencil

#endif
