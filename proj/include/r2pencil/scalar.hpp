#ifndef R2PENCIL_SCALAR_HPP
#define R2PENCIL_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "r2pencil/errors.hpp"

namespace r2pencil {

using Rational = boost::multiprecision::cpp_rational;

// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw Error("cannot convert non-finite double to rational");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp); // x = m * 2^exp, 0.5 <= |m| < 1
    // 53 doublings make the mantissa integral.
    long long mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mant);
    if (exp > 0) {
        r *= Rational(boost::multiprecision::cpp_int(1) << exp);
    } else if (exp < 0) {
        r /= Rational(boost::multiprecision::cpp_int(1) << (-exp));
    }
    return r;
}

namespace detail {
// cpp_int's string constructor treats a leading 0 as octal; decimal
// literals like "025" (from "0.25") must not.
inline boost::multiprecision::cpp_int parse_decimal_int(std::string s) {
    std::string sign;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        if (s[0] == '-') sign = "-";
        s.erase(s.begin());
    }
    std::size_t nz = 0;
    while (nz + 1 < s.size() && s[nz] == '0') ++nz;
    s.erase(0, nz);
    if (s.empty()) throw ConfigError("empty integer literal");
    for (char ch : s)
        if (ch < '0' || ch > '9') throw ConfigError("bad digit in integer literal");
    return boost::multiprecision::cpp_int(sign + s);
}
} // namespace detail

// Accepts "p/q", plain integers, and decimal strings like "-1.25".
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ConfigError("empty rational literal");
    try {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            return Rational(detail::parse_decimal_int(text.substr(0, slash)),
                            detail::parse_decimal_int(text.substr(slash + 1)));
        }
        auto dot = text.find('.');
        std::string digits = text;
        std::size_t frac_len = 0;
        if (dot != std::string::npos) {
            frac_len = text.size() - dot - 1;
            digits = text.substr(0, dot) + text.substr(dot + 1);
            if (digits.empty() || digits == "-" || digits == "+") throw ConfigError("bad literal");
        }
        Rational r{detail::parse_decimal_int(digits)};
        for (std::size_t i = 0; i < frac_len; ++i) r /= 10;
        return r;
    } catch (const ConfigError&) {
        throw ConfigError("bad rational literal: " + text);
    } catch (const std::exception&) {
        throw ConfigError("bad rational literal: " + text);
    }
}

inline std::string rational_to_string(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Gaussian rational: exact complex arithmetic, the oracle backend.
struct ExactComplex {
    Rational re{0};
    Rational im{0};

    ExactComplex() = default;
    ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit ExactComplex(long n) : re(n), im(0) {}

    friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
    friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw Error("exact division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    ExactComplex& operator+=(const ExactComplex& b) { return *this = *this + b; }
    ExactComplex& operator-=(const ExactComplex& b) { return *this = *this - b; }
    ExactComplex& operator*=(const ExactComplex& b) { return *this = *this * b; }
    ExactComplex& operator/=(const ExactComplex& b) { return *this = *this / b; }

    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

    Rational norm2() const { return re * re + im * im; }
};

inline ExactComplex conj(const ExactComplex& s) { return {s.re, -s.im}; }

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Backend policy: everything above scalar level is generic over S.
// S is either std::complex<double> (float product) or ExactComplex (oracle).
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<std::complex<double>> {
    using scalar = std::complex<double>;
    static constexpr bool is_exact = false;
    static const char* backend_name() { return "float"; }

    static scalar zero() { return {0.0, 0.0}; }
    static scalar one() { return {1.0, 0.0}; }
    static scalar from_int(long n) { return {static_cast<double>(n), 0.0}; }
    static scalar from_ratio(long p, long q) { return {static_cast<double>(p) / static_cast<double>(q), 0.0}; }
    static scalar conj(const scalar& s) { return std::conj(s); }
    static bool is_zero(const scalar& s) { return s.real() == 0.0 && s.imag() == 0.0; }
    // Parameters are inputs, not computed quantities: 1e-12 matching is
    // effectively exact for them.
    static bool param_equal(const scalar& a, const scalar& b) { return std::abs(a - b) <= 1e-12; }
    static bool pole_zero(const scalar& s) { return std::abs(s) < 1e-300; }
    static double mag(const scalar& s) { return std::abs(s); }
    static std::complex<double> to_cd(const scalar& s) { return s; }
    static bool is_unimodular(const scalar& s) { return std::abs(std::abs(s) - 1.0) <= 1e-12; }
    static std::string re_string(const scalar& s) { return format_double(s.real()); }
    static std::string im_string(const scalar& s) { return format_double(s.imag()); }
    static scalar parse_part_pair(const std::string& re, const std::string& im) {
        return {std::stod(re), std::stod(im)};
    }
    static scalar from_dyadic(long long p_re, long long p_im, long denom) {
        // Dyadic grid values are exactly representable in double, so the
        // float and exact backends see bit-identical instances.
        return {static_cast<double>(p_re) / static_cast<double>(denom),
                static_cast<double>(p_im) / static_cast<double>(denom)};
    }
};

template <>
struct ScalarTraits<ExactComplex> {
    using scalar = ExactComplex;
    static constexpr bool is_exact = true;
    static const char* backend_name() { return "exact"; }

    static scalar zero() { return ExactComplex(0); }
    static scalar one() { return ExactComplex(1); }
    static scalar from_int(long n) { return ExactComplex(n); }
    static scalar from_ratio(long p, long q) { return {Rational(p, q), Rational(0)}; }
    static scalar conj(const scalar& s) { return r2pencil::conj(s); }
    static bool is_zero(const scalar& s) { return s.re == 0 && s.im == 0; }
    static bool param_equal(const scalar& a, const scalar& b) { return a == b; }
    static bool pole_zero(const scalar& s) { return is_zero(s); }
    static double mag(const scalar& s) {
        return std::sqrt(s.norm2().convert_to<double>());
    }
    static std::complex<double> to_cd(const scalar& s) {
        return {s.re.convert_to<double>(), s.im.convert_to<double>()};
    }
    static bool is_unimodular(const scalar& s) { return s.norm2() == 1; }
    static std::string re_string(const scalar& s) { return rational_to_string(s.re); }
    static std::string im_string(const scalar& s) { return rational_to_string(s.im); }
    static scalar parse_part_pair(const std::string& re, const std::string& im) {
        return {parse_rational(re), parse_rational(im)};
    }
    static scalar from_dyadic(long long p_re, long long p_im, long denom) {
        return {Rational(p_re, denom), Rational(p_im, denom)};
    }
};

} // namespace r2pencil

#endif
