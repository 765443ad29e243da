#ifndef R2PENCIL_POLYNOMIAL_HPP
#define R2PENCIL_POLYNOMIAL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "r2pencil/errors.hpp"
#include "r2pencil/scalar.hpp"

namespace r2pencil {

// Dense polynomial, coeffs[k] = coefficient of z^k, trailing zeros trimmed.
// The zero polynomial has an empty coefficient list and degree() == -1
// (the sentinel standing in for degree -inf).
template <class S>
class Polynomial {
public:
    using traits = ScalarTraits<S>;

    Polynomial() = default;
    explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return {}; }
    static Polynomial constant(const S& v) { return Polynomial(std::vector<S>{v}); }
    static Polynomial one() { return constant(traits::one()); }
    static Polynomial monomial(const S& v, std::size_t k) {
        std::vector<S> c(k + 1, traits::zero());
        c[k] = v;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<S>& coeffs() const { return c_; }

    S coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : traits::zero();
    }
    S leading() const {
        if (c_.empty()) return traits::zero();
        return c_.back();
    }

    S eval(const S& z) const {
        S acc = traits::zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), traits::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), traits::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<S> c = a.c_;
        for (auto& v : c) v = -v;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, traits::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    Polynomial scaled(const S& k) const {
        std::vector<S> c = c_;
        for (auto& v : c) v = v * k;
        return Polynomial(std::move(c));
    }

    // Multiply by z^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<S> c(c_.size() + k, traits::zero());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return Polynomial(std::move(c));
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<S> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * traits::from_int(static_cast<long>(i));
        return Polynomial(std::move(c));
    }

    // Long division; the divisor's leading coefficient must be nonzero
    // (guaranteed by trimming for nonzero divisors).
    static std::pair<Polynomial, Polynomial> div_rem(const Polynomial& num, const Polynomial& den) {
        if (den.is_zero()) throw Error("polynomial division by zero");
        if (num.degree() < den.degree()) return {Polynomial{}, num};
        std::vector<S> rem = num.c_;
        std::vector<S> quot(num.c_.size() - den.c_.size() + 1, traits::zero());
        const S lead = den.c_.back();
        for (std::size_t i = quot.size(); i-- > 0;) {
            S q = rem[i + den.c_.size() - 1] / lead;
            quot[i] = q;
            for (std::size_t j = 0; j < den.c_.size(); ++j)
                rem[i + j] = rem[i + j] - q * den.c_[j];
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    // Largest coefficient magnitude; 0 for the zero polynomial.
    double coeff_mag_max() const {
        double m = 0.0;
        for (const auto& v : c_) m = std::max(m, traits::mag(v));
        return m;
    }
    double coeff_mag_sum() const {
        double m = 0.0;
        for (const auto& v : c_) m += traits::mag(v);
        return m;
    }

private:
    void trim() {
        while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<S> c_;
};

enum class PolyOp { add, sub, mul, scale };

// Spec surface for the four basic coefficient operations; `scale` uses
// q's constant term as the scalar.
template <class S>
Polynomial<S> poly_arith(const Polynomial<S>& p, const Polynomial<S>& q, PolyOp op) {
    switch (op) {
        case PolyOp::add: return p + q;
        case PolyOp::sub: return p - q;
        case PolyOp::mul: return p * q;
        case PolyOp::scale: return p.scaled(q.coeff(0));
    }
    throw Error("unreachable poly op");
}

} // namespace r2pencil

#endif
