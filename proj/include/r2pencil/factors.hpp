#ifndef R2PENCIL_FACTORS_HPP
#define R2PENCIL_FACTORS_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "r2pencil/errors.hpp"
#include "r2pencil/polynomial.hpp"
#include "r2pencil/scalar.hpp"

namespace r2pencil {

enum class FactorKind { ZMinus, OneMinusZ };

// Denominator atom: (z - a) or (1 - z*b).  For the (1 - z*b) shape the
// stored param is already the conjugated quantity, i.e. building the
// atom (1 - z*conj(beta)) stores param = conj(beta).
template <class S>
struct LinearFactor {
    using traits = ScalarTraits<S>;

    FactorKind kind;
    S param;

    S eval(const S& z) const {
        if (kind == FactorKind::ZMinus) return z - param;
        return traits::one() - z * param;
    }

    Polynomial<S> to_poly() const {
        if (kind == FactorKind::ZMinus)
            return Polynomial<S>(std::vector<S>{-param, traits::one()});
        return Polynomial<S>(std::vector<S>{traits::one(), -param});
    }

    static bool equal(const LinearFactor& a, const LinearFactor& b) {
        return a.kind == b.kind && traits::param_equal(a.param, b.param);
    }
};

template <class S>
LinearFactor<S> z_minus(const S& a) {
    return {FactorKind::ZMinus, a};
}

// one_minus_z(c) is the atom (1 - z*c); pass the conjugated parameter.
template <class S>
LinearFactor<S> one_minus_z(const S& c) {
    return {FactorKind::OneMinusZ, c};
}

// Multiset of linear factors.  Repeated factors (e.g. (z-alpha)^{n+1})
// carry multiplicity; no ordering is significant.
template <class S>
struct FactorBag {
    using traits = ScalarTraits<S>;

    std::vector<LinearFactor<S>> factors;

    std::size_t size() const { return factors.size(); }
    bool empty() const { return factors.empty(); }

    void push(LinearFactor<S> f) { factors.push_back(std::move(f)); }

    FactorBag merged(const FactorBag& other) const {
        FactorBag out = *this;
        out.factors.insert(out.factors.end(), other.factors.begin(), other.factors.end());
        return out;
    }

    // Denominator product; PoleHit if any atom evaluates to zero
    // (exactly in the exact backend, below 1e-300 in float).
    S eval(const S& z) const {
        S acc = traits::one();
        for (const auto& f : factors) {
            S v = f.eval(z);
            if (traits::pole_zero(v)) throw PoleHit("denominator factor vanishes at sample point");
            acc = acc * v;
        }
        return acc;
    }

    bool hits_pole(const S& z) const {
        for (const auto& f : factors)
            if (traits::pole_zero(f.eval(z))) return true;
        return false;
    }

    Polynomial<S> expand() const {
        Polynomial<S> p = Polynomial<S>::one();
        for (const auto& f : factors) p = p * f.to_poly();
        return p;
    }

    bool is_subbag_of(const FactorBag& big) const {
        std::vector<bool> used(big.factors.size(), false);
        for (const auto& f : factors) {
            bool found = false;
            for (std::size_t i = 0; i < big.factors.size(); ++i) {
                if (!used[i] && LinearFactor<S>::equal(f, big.factors[i])) {
                    used[i] = true;
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    }
};

template <class S>
bool subbag(const FactorBag<S>& part, const FactorBag<S>& target) {
    return part.is_subbag_of(target);
}

// Multiset difference target \ part; NotDivisible if part is not a
// subbag of target.
template <class S>
FactorBag<S> cofactor_divide(const FactorBag<S>& target, const FactorBag<S>& part) {
    std::vector<bool> used(target.factors.size(), false);
    for (const auto& f : part.factors) {
        bool found = false;
        for (std::size_t i = 0; i < target.factors.size(); ++i) {
            if (!used[i] && LinearFactor<S>::equal(f, target.factors[i])) {
                used[i] = true;
                found = true;
                break;
            }
        }
        if (!found) throw NotDivisible("factor bag is not a subbag of the target");
    }
    FactorBag<S> out;
    for (std::size_t i = 0; i < target.factors.size(); ++i)
        if (!used[i]) out.push(target.factors[i]);
    return out;
}

// Quotient num / prod(den).  The denominator is kept structural (the
// factored products the formulas name); no cancellation is attempted.
template <class S>
struct RationalFn {
    Polynomial<S> num;
    FactorBag<S> den;

    static RationalFn one() { return {Polynomial<S>::one(), FactorBag<S>{}}; }

    S eval(const S& z) const {
        S d = den.eval(z); // PoleHit surfaces from here
        return num.eval(z) / d;
    }

    RationalFn scaled(const S& k) const { return {num.scaled(k), den}; }
};

template <class S>
RationalFn<S> multiply(const RationalFn<S>& a, const RationalFn<S>& b) {
    return {a.num * b.num, a.den.merged(b.den)};
}

template <class S>
RationalFn<S> multiply(const RationalFn<S>& a, const Polynomial<S>& p) {
    return {a.num * p, a.den};
}

} // namespace r2pencil

#endif
