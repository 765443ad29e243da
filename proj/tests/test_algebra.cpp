#include <catch2/catch_amalgamated.hpp>

#include "r2pencil/factors.hpp"
#include "r2pencil/polynomial.hpp"
#include "r2pencil/rng.hpp"
#include "r2pencil/sampling.hpp"

using namespace r2pencil;
using EC = ExactComplex;
using CD = std::complex<double>;

namespace {
EC ec(long re, long im) { return ScalarTraits<EC>::from_dyadic(re, im, 1); }

template <class S>
Polynomial<S> poly(std::initializer_list<std::pair<long, long>> coeffs) {
    std::vector<S> c;
    for (auto [re, im] : coeffs) c.push_back(ScalarTraits<S>::from_dyadic(re, im, 1));
    return Polynomial<S>(std::move(c));
}
} // namespace

TEST_CASE("polynomial arithmetic matches the worked products") {
    // (1+2z)(2-2z) = 2+2z-4z^2
    auto p = poly<EC>({{1, 0}, {2, 0}});
    auto q = poly<EC>({{2, 0}, {-2, 0}});
    CHECK(poly_arith(p, q, PolyOp::mul) == poly<EC>({{2, 0}, {2, 0}, {-4, 0}}));

    CHECK(poly_arith(p, Polynomial<EC>::zero(), PolyOp::add) == p);

    // (z-i)(-2z^2-2z+2) = -2z^3 + (-2+2i)z^2 + (2+2i)z - 2i
    auto zi = poly<EC>({{0, -1}, {1, 0}});
    auto r2 = poly<EC>({{2, 0}, {-2, 0}, {-2, 0}});
    CHECK(zi * r2 == poly<EC>({{0, -2}, {2, 2}, {-2, 2}, {-2, 0}}));
}

TEST_CASE("degree bookkeeping and trimming") {
    CHECK(Polynomial<EC>::zero().degree() == -1);
    CHECK(Polynomial<EC>(std::vector<EC>{ec(0, 0), ec(0, 0)}).degree() == -1);
    auto p = poly<EC>({{1, 0}, {5, 0}});
    CHECK((p - p).degree() == -1);
    CHECK(p.leading() == ec(5, 0));
    CHECK(p.shifted(2).degree() == 3);
    CHECK(p.shifted(2).coeff(0) == ec(0, 0));
}

TEST_CASE("evaluation, poles included") {
    auto p = poly<EC>({{1, 0}, {2, 0}});
    CHECK(p.eval(ec(0, 0)) == ec(1, 0));

    RationalFn<EC> f{p, {}};
    f.den.push(z_minus(ec(2, 0)));
    CHECK(f.eval(ec(1, 0)) == ec(-3, 0)); // 3/(1-2)
    CHECK_THROWS_AS(f.eval(ec(2, 0)), PoleHit);

    RationalFn<CD> g{poly<CD>({{1, 0}, {2, 0}}), {}};
    g.den.push(z_minus(CD(2.0, 0.0)));
    CHECK_THROWS_AS(g.eval(CD(2.0, 0.0)), PoleHit);
}

TEST_CASE("cofactor division is multiset difference") {
    FactorBag<EC> target;
    target.push(z_minus(ec(2, 0)));
    target.push(z_minus(ec(0, 0)));
    FactorBag<EC> part;
    part.push(z_minus(ec(0, 0)));
    auto rest = cofactor_divide(target, part);
    REQUIRE(rest.size() == 1);
    CHECK(rest.factors[0].param == ec(2, 0));

    // multiplicity: {(z-a)^2} \ {(z-a)} = {(z-a)}
    FactorBag<EC> twice;
    twice.push(z_minus(ec(1, 1)));
    twice.push(z_minus(ec(1, 1)));
    FactorBag<EC> once;
    once.push(z_minus(ec(1, 1)));
    CHECK(cofactor_divide(twice, once).size() == 1);

    // shape mismatch: {(z-2)} is not divisible by {(1-2z)}
    FactorBag<EC> wrong;
    wrong.push(one_minus_z(ec(2, 0)));
    CHECK_THROWS_AS(cofactor_divide(target, wrong), NotDivisible);
}

TEST_CASE("product evaluation is multiplicative at random exact points") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<EC> pc, qc;
        for (int i = 0; i <= 3; ++i)
            pc.push_back(ScalarTraits<EC>::from_dyadic(rng.next_in(-8, 8), rng.next_in(-8, 8), 4));
        for (int i = 0; i <= 2; ++i)
            qc.push_back(ScalarTraits<EC>::from_dyadic(rng.next_in(-8, 8), rng.next_in(-8, 8), 4));
        Polynomial<EC> p(pc), q(qc);
        EC z = ScalarTraits<EC>::from_dyadic(rng.next_in(-16, 16), rng.next_in(-16, 16), 8);
        CHECK((p * q).eval(z) == p.eval(z) * q.eval(z));
    }
}

TEST_CASE("expand(cofactor) * expand(part) = expand(target) exactly") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        FactorBag<EC> target;
        for (int i = 0; i < 5; ++i) {
            EC a = ScalarTraits<EC>::from_dyadic(rng.next_in(-6, 6), rng.next_in(-6, 6), 2);
            if (rng.next() % 2)
                target.push(z_minus(a));
            else
                target.push(one_minus_z(a));
        }
        FactorBag<EC> part;
        part.push(target.factors[1]);
        part.push(target.factors[3]);
        auto rest = cofactor_divide(target, part);
        CHECK(rest.expand() * part.expand() == target.expand());
    }
}

TEST_CASE("float backend shadows the exact backend") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<EC> ec_coeffs;
        std::vector<CD> cd_coeffs;
        for (int i = 0; i <= 4; ++i) {
            long long a = rng.next_in(-16, 16), b = rng.next_in(-16, 16);
            ec_coeffs.push_back(ScalarTraits<EC>::from_dyadic(a, b, 4));
            cd_coeffs.push_back(ScalarTraits<CD>::from_dyadic(a, b, 4));
        }
        Polynomial<EC> pe(ec_coeffs);
        Polynomial<CD> pf(cd_coeffs);
        long long zr = rng.next_in(-8, 8), zi = rng.next_in(-8, 8);
        EC ze = ScalarTraits<EC>::from_dyadic(zr, zi, 4);
        CD zf = ScalarTraits<CD>::from_dyadic(zr, zi, 4);
        CD exact = ScalarTraits<EC>::to_cd(pe.eval(ze));
        CHECK(std::abs(pf.eval(zf) - exact) <= 1e-10 * (1.0 + std::abs(exact)));
    }
}
