#ifndef R2PENCIL_ROOTS_HPP
#define R2PENCIL_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "r2pencil/errors.hpp"
#include "r2pencil/polynomial.hpp"

namespace r2pencil {

// Aberth-Ehrlich simultaneous iteration with Newton polishing, float
// backend only.  Deterministic: roots are seeded on a circle of radius
// 1 + max|coeff|/|leading| (Cauchy-bound heuristic) with a fixed angular
// offset, no randomness.  Each returned root satisfies
//   |p(root)| <= tol * (sum |coeff|) * max(1,|root|)^deg.
inline std::vector<std::complex<double>> aberth_roots(const Polynomial<std::complex<double>>& poly,
                                                      double tol = 1e-10, int max_iter = 200) {
    using C = std::complex<double>;
    std::vector<C> roots;
    if (poly.degree() <= 0) return roots;

    std::vector<C> c = poly.coeffs();
    // Exact zero constant terms peel off roots at the origin.
    std::size_t zero_roots = 0;
    while (zero_roots + 1 < c.size() && c[zero_roots] == C(0.0, 0.0)) ++zero_roots;
    if (zero_roots > 0) c.erase(c.begin(), c.begin() + static_cast<long>(zero_roots));
    roots.assign(zero_roots, C(0.0, 0.0));

    const std::size_t deg = c.size() - 1;
    const double coeff_sum = [&] {
        double s = 0.0;
        for (const auto& v : c) s += std::abs(v);
        return s;
    }();
    auto residual_bound = [&](const C& x) {
        return tol * coeff_sum * std::pow(std::max(1.0, std::abs(x)), static_cast<double>(deg));
    };
    auto eval_both = [&](const C& x, C& p, C& dp) {
        p = c[deg];
        dp = C(0.0, 0.0);
        for (std::size_t i = deg; i-- > 0;) {
            dp = dp * x + p;
            p = p * x + c[i];
        }
    };

    if (deg == 0) return roots;
    if (deg == 1) {
        roots.push_back(-c[0] / c[1]);
        std::sort(roots.begin(), roots.end(), [](const C& a, const C& b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        return roots;
    }

    double cmax = 0.0;
    for (std::size_t i = 0; i < deg; ++i) cmax = std::max(cmax, std::abs(c[i]));
    const double radius = 1.0 + cmax / std::abs(c[deg]);
    std::vector<C> x(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(deg) + 0.35;
        x[k] = radius * C(std::cos(angle), std::sin(angle));
    }

    bool converged = false;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
        converged = true;
        for (std::size_t i = 0; i < deg; ++i) {
            C p, dp;
            eval_both(x[i], p, dp);
            if (std::abs(p) <= residual_bound(x[i])) continue;
            converged = false;
            if (std::abs(dp) == 0.0) { // stationary start point: nudge off
                x[i] *= C(1.0 + 1e-8, 1e-8);
                continue;
            }
            C w = p / dp;
            C sum(0.0, 0.0);
            for (std::size_t j = 0; j < deg; ++j) {
                if (j == i) continue;
                C diff = x[i] - x[j];
                if (std::abs(diff) < 1e-14) diff = C(1e-14, 1e-14);
                sum += C(1.0, 0.0) / diff;
            }
            C denom = C(1.0, 0.0) - w * sum;
            if (std::abs(denom) < 1e-14) denom = C(1e-14, 0.0);
            x[i] -= w / denom;
        }
    }

    // Newton polishing sharpens each root a few steps.
    for (auto& xi : x) {
        for (int k = 0; k < 3; ++k) {
            C p, dp;
            eval_both(xi, p, dp);
            if (std::abs(dp) == 0.0) break;
            xi -= p / dp;
        }
    }

    double worst_final = 0.0;
    for (const auto& xi : x) {
        C p, dp;
        eval_both(xi, p, dp);
        worst_final = std::max(worst_final, std::abs(p) / residual_bound(xi));
    }
    if (worst_final > 1.0)
        throw NoConvergence("root finder did not reach the residual bound", worst_final);

    roots.insert(roots.end(), x.begin(), x.end());
    std::sort(roots.begin(), roots.end(), [](const C& a, const C& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

} // namespace r2pencil

#endif
