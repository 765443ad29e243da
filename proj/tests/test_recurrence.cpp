#include <catch2/catch_amalgamated.hpp>

#include "r2pencil/recurrence.hpp"

using namespace r2pencil;
using EC = ExactComplex;
using CD = std::complex<double>;

namespace {
EC ec(long re, long im) { return ScalarTraits<EC>::from_dyadic(re, im, 1); }
EC ec2(long re_num, long im_num, long den) { return ScalarTraits<EC>::from_dyadic(re_num, im_num, den); }
} // namespace

TEST_CASE("S1 numerator polynomials match the worked expansions") {
    auto params = preset_s1<EC>();
    params.validate();
    auto rs = gen_numerators(params, 3);
    REQUIRE(rs.size() == 4);
    CHECK(rs[0] == Polynomial<EC>::one());
    CHECK(rs[1] == Polynomial<EC>(std::vector<EC>{ec(1, 0), ec(2, 0)}));
    CHECK(rs[1].leading() == params.d_(1)); // kappa_1 = d_1
    CHECK(rs[2] == Polynomial<EC>(std::vector<EC>{ec(2, 0), ec(-2, 0), ec(-2, 0)}));
    CHECK(rs[3] == Polynomial<EC>(std::vector<EC>{ec(1, -2), ec(2, 3), ec(-6, 2), ec(-2, -4)}));
}

TEST_CASE("numerator degree grows by one per step under regularity") {
    auto params = preset_s1<EC>();
    auto rs = gen_numerators(params, 3);
    for (std::size_t n = 0; n < rs.size(); ++n) CHECK(rs[n].degree() == static_cast<int>(n));
    CHECK_THROWS_AS(gen_numerators(params, 9), ParamOutOfRange);
}

TEST_CASE("S1 regularity report passes with the expected witnesses") {
    auto params = preset_s1<EC>();
    auto rs = gen_numerators(params, 3);
    auto rep = check_regularity(params, rs);
    // The numbered conditions hold through r_2; at r_3 the preset is
    // degenerate: e_3 = 0 and |beta_1| = 1 force r_3(beta_1) = r_3(i) = 0,
    // and 1/conj(beta_1) = beta_1 makes the main condition fail there too.
    CHECK(check_regularity(params, rs, 2).all_ok);
    CHECK_FALSE(rep.main_ok);
    REQUIRE(rep.first_main_failure() != nullptr);
    CHECK(rep.first_main_failure()->r_index == 3);
    CHECK(rs[3].eval(ec(0, 1)) == ec(0, 0));
    // r_2(alpha_1) = r_2(2) = -10 and r_1(alpha_1) = 5
    CHECK(rs[2].eval(ec(2, 0)) == ec(-10, 0));
    CHECK(rs[1].eval(ec(2, 0)) == ec(5, 0));
}

TEST_CASE("a forced regularity failure is flagged with its witness") {
    // alpha_1 = -1/2 makes r_1(alpha_1) = 1 + 2*(-1/2) = 0.
    auto params = preset_s1<EC>();
    params.alpha[0] = ec2(-1, 0, 2);
    auto rs = gen_numerators(params, 1);
    auto rep = check_regularity(params, rs);
    CHECK_FALSE(rep.all_ok);
    REQUIRE(rep.first_failure() != nullptr);
    CHECK(rep.first_failure()->condition == "r_{2n+1}(alpha_{n+1})");
    CHECK_THROWS_AS(gen_phi(params, rs, 1), RegularityViolation);
}

TEST_CASE("S1 phi family matches the definition") {
    auto params = preset_s1<EC>();
    auto rs = gen_numerators(params, 3);
    auto phis = gen_phi(params, rs, 3, RegularityGate::report_only);
    CHECK(phis[0].eval(ec(5, 7)) == ec(1, 0)); // phi_0 = 1
    CHECK_THROWS_AS(gen_phi(params, rs, 3), RegularityViolation); // r_3 degeneracy gates by default
    CHECK_NOTHROW(gen_phi(params, rs, 2)); // fine through depth 2

    // phi_1 = (1+2z)/(z-2) at z=1: 3/(-1) = -3
    CHECK(phis[1].eval(ec(1, 0)) == ec(-3, 0));
    // phi_2 = r_2/((z-2)(1+iz)) at z=1: -2/((-1)(1+i)) = 1-i
    CHECK(phis[2].eval(ec(1, 0)) == ec(1, -1));
    CHECK_THROWS_AS(phis[1].eval(ec(2, 0)), PoleHit);
}

TEST_CASE("S1 O family matches the definition") {
    auto params = preset_s1<EC>();
    auto rs = gen_numerators(params, 3);
    auto Os = gen_O(params, rs, 3, RegularityGate::report_only);
    CHECK(Os[0].eval(ec(3, 3)) == ec(1, 0));
    // O_1 = (1+2z)/((z-2) z) at z=1: 3/(-1) = -3
    CHECK(Os[1].eval(ec(1, 0)) == ec(-3, 0));
    // O_2 = r_2/((z-2)(1-2z) z (1+iz)) at z=1: -2/((-1)(-1)(1)(1+i)) = -1+i
    CHECK(Os[2].eval(ec(1, 0)) == ec(-1, 1));
}

TEST_CASE("O and phi recurrences hold exactly in the exact backend") {
    auto params = preset_s1<EC>();
    auto rs = gen_numerators(params, 3);
    auto Os = gen_O(params, rs, 3, RegularityGate::report_only);
    auto phis = gen_phi(params, rs, 3, RegularityGate::report_only);
    CHECK(check_O_recurrence(params, Os, 3) == 0.0);
    CHECK(check_phi_recurrence(params, phis, 3) == 0.0);
    CHECK(check_O_recurrence(params, Os, 1) == 0.0); // N < 2: empty check
}

TEST_CASE("O and phi recurrences hold to 1e-10 in float") {
    auto params = preset_s1<CD>();
    auto rs = gen_numerators(params, 3);
    auto Os = gen_O(params, rs, 3, RegularityGate::report_only);
    auto phis = gen_phi(params, rs, 3, RegularityGate::report_only);
    CHECK(check_O_recurrence(params, Os, 3) <= 1e-10);
    CHECK(check_phi_recurrence(params, phis, 3) <= 1e-10);
}

TEST_CASE("S1 tilde families: chi, J-tilde, psi-tilde") {
    auto params = preset_s1<EC>();
    auto rs = gen_numerators(params, 3);
    auto fam = gen_tilde_families(params, rs, 3, PsiVariant::definition_s2, false,
                                  RegularityGate::report_only);

    CHECK(fam.chi[1] == ec(2, 0));  // conj(alpha_1) = 2
    CHECK(fam.chi[2] == ec(0, 2));  // 2/conj(beta_1) = 2/(-i) = 2i

    // J-tilde_1 = (1+2z)/(2z) at z=1: 3/2
    CHECK(fam.Jt[1].eval(ec(1, 0)) == ec2(3, 0, 2));

    // psi-tilde_0 = -(d_1/conj(alpha_1)) J_0 + J_1 evaluates to 1/(2z)
    REQUIRE(fam.psi.size() >= 1);
    const auto& psi0 = fam.psi[0];
    REQUIRE(psi0.terms.size() == 2);
    CHECK(psi0.terms[0].first == ec(-1, 0));
    CHECK(psi0.terms[0].second == 0);
    CHECK(psi0.terms[1].first == ec(1, 0));
    CHECK(psi0.terms[1].second == 1);
    EC z = ec(1, 0);
    EC val = psi0.terms[0].first * fam.Jt[0].eval(z) + psi0.terms[1].first * fam.Jt[1].eval(z);
    CHECK(val == ec2(1, 0, 2)); // 1/(2*1)

    // every psi-tilde is a combination of at most three J-tilde terms
    for (const auto& combo : fam.psi) CHECK(combo.terms.size() <= 3);

    // the literal psi_0 := 1 variant stays available for documentation
    auto lit = gen_tilde_families(params, rs, 3, PsiVariant::definition_s2, true,
                                  RegularityGate::report_only);
    REQUIRE(lit.psi[0].terms.size() == 1);
    CHECK(lit.psi[0].terms[0].second == 0);
}
