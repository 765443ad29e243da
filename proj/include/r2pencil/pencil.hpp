#ifndef R2PENCIL_PENCIL_HPP
#define R2PENCIL_PENCIL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "r2pencil/errors.hpp"
#include "r2pencil/factors.hpp"
#include "r2pencil/params.hpp"
#include "r2pencil/polynomial.hpp"

namespace r2pencil {

// The j x j principal minors of the two infinite tridiagonal matrices
// (0-indexed rows/columns):
//   H[2k][2k] = d_{2k+1},          H[2k+1][2k+1] = -d_{2k+2} conj(alpha_{k+1})
//   H[2k][2k+1] = g_{2k+1},        H[2k+1][2k+2] = conj(alpha_{k+1}) g_{2k+2}
//   H[i][i-1] = h_{i,i-1} (free, nonzero)
//   G[2k][2k] = -e_{2k+1} + beta_k d_{2k+1},  G[2k+1][2k+1] = -e_{2k+2} - d_{2k+2}
//   G[2k][2k+1] = alpha_{k+1} g_{2k+1}
//   G[2k+1][2k+2] = conj(alpha_{k+1}) g_{2k+2} / conj(beta_{k+1})
//   G[2k+1][2k] = h_{2k+1,2k} beta_k,         G[2k+2][2k+1] = h_{2k+2,2k+1}/conj(alpha_{k+1})
// with g_{2k+1} = -c_{2k+2}/h_{2k+1,2k} and
//      g_{2k+2} = -c_{2k+3} conj(beta_{k+1})/h_{2k+2,2k+1}.
//
// The odd-row superdiagonal pair differs from the displayed matrices
// (which put g_{2k+2} in H and conj(alpha_{k+1}) g_{2k+2} in G): the
// continuant junction product
//   (G - zH)[2k+1][2k+2] * (G - zH)[2k+2][2k+1]
// must equal -c_{2k+3}(1 - z conj(alpha_{k+1}))(1 - z conj(beta_{k+1}))
// for det(G - zH) = (-1)^j r_j, and the rearranged even recurrence
//   beta_k c_{2k+2} phi_{2k} - (e_{2k+2}+d_{2k+2}) phi_{2k+1} + phi_{2k+2}
//     = z [ c_{2k+2} phi_{2k} - d_{2k+2} conj(alpha_{k+1}) phi_{2k+1}
//           + conj(beta_{k+1}) phi_{2k+2} ]
// forces the (G,H) superdiagonal ratio 1/conj(beta_{k+1}); both pin the
// entries used here, which reduce to G = 1, H = conj(beta_{k+1}) under
// the theorem-default h.  The displayed entries fail both identities
// from j = 3 on; j <= 2 never exercises an odd-row superdiagonal.
template <class S>
struct Pencil {
    std::size_t size = 0;
    // diag[i] = M[i][i]; sub[i] = M[i][i-1] (i >= 1); super[i] = M[i][i+1] (i <= size-2).
    std::vector<S> h_diag, h_sub, h_super;
    std::vector<S> g_diag, g_sub, g_super;
    std::vector<S> h_free; // the h_{i,i-1} actually used, index i = 1..size-1
};

// Theorem-2.4 defaults: h_{2i,2i-1} = -c_{2i+1} conj(alpha_i),
// h_{2i-1,2i-2} = c_{2i}.  Under them g_{2k+1} = -1 and
// g_{2k+2} = conj(beta_{k+1})/conj(alpha_{k+1}).
template <class S>
std::vector<S> theorem_default_h(const ParamSeq<S>& params, std::size_t j) {
    std::vector<S> h(j, ScalarTraits<S>::zero()); // slot 0 unused
    for (std::size_t i = 1; i < j; ++i) {
        if (i % 2 == 1)
            h[i] = params.c_(i + 1);
        else
            h[i] = -params.c_(i + 1) * params.alpha_bar(i / 2);
    }
    return h;
}

template <class S>
Pencil<S> build_pencil(const ParamSeq<S>& params, std::size_t j,
                       const std::optional<std::vector<S>>& h_choice = std::nullopt) {
    using traits = ScalarTraits<S>;
    if (j < 1) throw ParamOutOfRange("pencil size must be >= 1");

    std::vector<S> h(j, traits::zero());
    if (h_choice) {
        if (h_choice->size() != j - 1)
            throw ParamOutOfRange("explicit h list must have size j-1 = " + std::to_string(j - 1));
        for (std::size_t i = 1; i < j; ++i) {
            h[i] = (*h_choice)[i - 1];
            if (traits::is_zero(h[i]))
                throw ZeroFreeVariable("h_{" + std::to_string(i) + "," + std::to_string(i - 1) + "} must be nonzero");
        }
    } else {
        h = theorem_default_h(params, j);
    }

    Pencil<S> p;
    p.size = j;
    p.h_free = h;
    p.h_diag.resize(j);
    p.g_diag.resize(j);
    p.h_sub.assign(j, traits::zero());
    p.g_sub.assign(j, traits::zero());
    p.h_super.assign(j, traits::zero());
    p.g_super.assign(j, traits::zero());

    for (std::size_t i = 0; i < j; ++i) {
        if (i % 2 == 0) {
            std::size_t k = i / 2;
            p.h_diag[i] = params.d_(i + 1);
            p.g_diag[i] = -params.e_(i + 1) + params.beta_(k) * params.d_(i + 1);
        } else {
            std::size_t k = (i - 1) / 2;
            p.h_diag[i] = -params.d_(i + 1) * params.alpha_bar(k + 1);
            p.g_diag[i] = -params.e_(i + 1) - params.d_(i + 1);
        }
    }
    for (std::size_t i = 1; i < j; ++i) {
        // g_i and the row-(i-1) superdiagonals.
        if (i % 2 == 1) {
            S g = -params.c_(i + 1) / h[i];
            p.h_super[i - 1] = g;
            p.g_super[i - 1] = params.alpha_((i + 1) / 2) * g;
        } else {
            S g = -params.c_(i + 1) * params.beta_bar(i / 2) / h[i];
            p.h_super[i - 1] = params.alpha_bar(i / 2) * g;
            p.g_super[i - 1] = params.alpha_bar(i / 2) * g / params.beta_bar(i / 2);
        }
        // subdiagonals at row i
        p.h_sub[i] = h[i];
        if (i % 2 == 1)
            p.g_sub[i] = h[i] * params.beta_((i - 1) / 2);
        else
            p.g_sub[i] = h[i] / params.alpha_bar(i / 2);
    }
    return p;
}

template <class S>
Pencil<S> build_pencil(const ParamSeq<S>& params, std::size_t j, const std::vector<S>& h_choice) {
    return build_pencil(params, j, std::optional<std::vector<S>>(h_choice));
}

// det(G_j - z H_j) by the tridiagonal continuant recurrence
//   D_0 = 1, D_1 = M[0][0], D_k = M[k-1][k-1] D_{k-1} - M[k-1][k-2] M[k-2][k-1] D_{k-2};
// linear in j.
template <class S>
S det_pencil(const Pencil<S>& p, const S& z) {
    using traits = ScalarTraits<S>;
    auto mdiag = [&](std::size_t i) { return p.g_diag[i] - z * p.h_diag[i]; };
    auto msub = [&](std::size_t i) { return p.g_sub[i] - z * p.h_sub[i]; };
    auto msuper = [&](std::size_t i) { return p.g_super[i] - z * p.h_super[i]; };
    S prev = traits::one();    // D_0
    S cur = mdiag(0);          // D_1
    for (std::size_t k = 2; k <= p.size; ++k) {
        S next = mdiag(k - 1) * cur - msub(k - 1) * msuper(k - 2) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Rows of (G - zH) v with v = (phi_0(z), ..., phi_{j-1}(z)).  With the
// theorem-default h choice rows 0..j-2 vanish identically in z; the last
// row equals the correction term -(z-alpha_{n+1}) phi_{2n+1}(z) for odd
// j = 2n+1 and -(1-z*conj(beta_n)) phi_{2n}(z) for even j = 2n, both of
// which vanish exactly at the eigenvalues (roots of r_j).
template <class S>
std::vector<S> pencil_row_values(const Pencil<S>& p, const S& z, const std::vector<RationalFn<S>>& phis) {
    if (phis.size() < p.size) throw ParamOutOfRange("need phi_0..phi_{j-1} for the eigenvector");
    std::vector<S> v(p.size);
    for (std::size_t i = 0; i < p.size; ++i) v[i] = phis[i].eval(z);
    std::vector<S> out(p.size);
    for (std::size_t i = 0; i < p.size; ++i) {
        S acc = (p.g_diag[i] - z * p.h_diag[i]) * v[i];
        if (i >= 1) acc += (p.g_sub[i] - z * p.h_sub[i]) * v[i - 1];
        if (i + 1 < p.size) acc += (p.g_super[i] - z * p.h_super[i]) * v[i + 1];
        out[i] = acc;
    }
    return out;
}

// ||(G - lambda H) v||_inf / (||G - lambda H||_inf ||v||_inf),
// v = (phi_0(lambda), ..., phi_{j-1}(lambda)).
template <class S>
double eig_residual(const Pencil<S>& p, const S& lambda, const std::vector<RationalFn<S>>& phis) {
    using traits = ScalarTraits<S>;
    std::vector<S> rows = pencil_row_values(p, lambda, phis);
    double wnorm = 0.0;
    for (const auto& r : rows) wnorm = std::max(wnorm, traits::mag(r));
    double vnorm = 0.0;
    for (std::size_t i = 0; i < p.size; ++i) vnorm = std::max(vnorm, traits::mag(phis[i].eval(lambda)));
    double mnorm = 0.0;
    for (std::size_t i = 0; i < p.size; ++i) {
        double row = traits::mag(p.g_diag[i] - lambda * p.h_diag[i]);
        if (i >= 1) row += traits::mag(p.g_sub[i] - lambda * p.h_sub[i]);
        if (i + 1 < p.size) row += traits::mag(p.g_super[i] - lambda * p.h_super[i]);
        mnorm = std::max(mnorm, row);
    }
    if (mnorm == 0.0 || vnorm == 0.0) return 0.0;
    return wnorm / (mnorm * vnorm);
}

} // namespace r2pencil

#endif
