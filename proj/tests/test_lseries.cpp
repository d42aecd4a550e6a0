#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "charvar/fp.hpp"
#include "charvar/lseries.hpp"

using namespace charvar;

// independent modular inverse, so the lift oracle does not lean on ZpnElem
static int64_t inv_mod(int64_t a, int64_t m) {
    int64_t r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    REQUIRE(r0 == 1);
    return ((s0 % m) + m) % m;
}

static int gram_rank(int64_t c20, int64_t c11, int64_t c02, int64_t p) {
    int64_t g11 = 2 * c20 % p, g12 = c11 % p, g22 = 2 * c02 % p;
    if (g11 == 0 && g12 == 0 && g22 == 0) return 0;
    if ((g11 * g22 - g12 * g12) % p != 0) return 2;
    return 1;
}

static FpPoint census_point(int n, int64_t p, int64_t a, int64_t b, int64_t c) {
    auto pts = find_points(n, p);
    for (const auto& pt : pts)
        if (pt.a == a && pt.b == b && pt.c == c) return pt;
    REQUIRE(false);
    return FpPoint{};
}

TEST_CASE("series ring arithmetic and inversion") {
    const int64_t p = 5;
    PSeries2 one = PSeries2::constant(ZpnElem(1, p, 2), 3, 0, 0);
    PSeries2 s = one;
    s.set_coeff(1, 0, ZpnElem(1, p, 2));

    PSeries2 g = s.inverse();
    CHECK(g.coeff(0, 0).residue() == 1);
    CHECK(g.coeff(1, 0).residue() == 24);
    CHECK(g.coeff(2, 0).residue() == 1);
    CHECK(g.coeff(3, 0).residue() == 24);
    CHECK(s * g == one);

    PSeries2 u(p, 2, 3, 0, 0);
    u.set_coeff(3, 0, ZpnElem(1, p, 2));
    CHECK((u * s).coeff(3, 0).residue() == 1);
    // the degree-4 part of u*s falls off the truncation
    CHECK((u * u).is_zero());

    CHECK_THROWS_AS(u.set_coeff(2, 2, ZpnElem(1, p, 2)), error);
    PSeries2 other(7, 2, 3, 0, 0);
    CHECK_THROWS_AS(s + other, mixed_rings);

    PSeries2 nonunit = PSeries2::constant(ZpnElem(5, p, 2), 3, 0, 0);
    CHECK_THROWS_AS(nonunit.inverse(), not_a_unit);

    CHECK_THROWS_AS(g.truncate(3, 3), error);
    PSeries2 gt = g.truncate(1, 1);
    CHECK(gt.coeff(1, 0).residue() == 4);
    CHECK(gt.coeff(0, 0).residue() == 1);
}

TEST_CASE("seven-adic square root via the implicit lift") {
    const int64_t p = 7, m = 343;
    QPoly z = qvar(kXYZ, "z"), x = qvar(kXYZ, "x");
    QPoly f = z * z - x;

    PSeries2 w = newton_lift(f, p, {1, 0, 1}, 3, 3);
    CHECK(w.coeff(0, 0).mod_p() == 1);

    // binomial expansion of sqrt(1+t): 1, 1/2, -1/8, 1/16
    int64_t i2 = inv_mod(2, m), i8 = inv_mod(8, m), i16 = inv_mod(16, m);
    CHECK(i2 == 172);
    CHECK(w.coeff(0, 0).residue() == 1);
    CHECK(w.coeff(1, 0).residue() == i2);
    CHECK(w.coeff(2, 0).residue() == m - i8);
    CHECK(w.coeff(2, 0).residue() == 300);
    CHECK(w.coeff(3, 0).residue() == i16);
    CHECK(w.coeff(3, 0).residue() == 193);
    for (int i = 0; i <= 3; ++i)
        for (int j = 1; i + j <= 3; ++j) CHECK(w.coeff(i, j).is_zero());

    // the other square root is the negative branch
    PSeries2 wneg = newton_lift(f, p, {1, 0, 6}, 3, 3);
    CHECK(wneg.coeff(0, 0).residue() == 342);
    CHECK((w + wneg).is_zero());

    // solving for x instead recovers x = z^2 as a series in z - 1
    PSeries2 wx = newton_lift(f, p, {1, 0, 1}, 3, 3, 0);
    CHECK(wx.coeff(0, 0).residue() == 1);
    CHECK(wx.coeff(0, 1).residue() == 2);
    CHECK(wx.coeff(0, 2).residue() == 1);
    CHECK(wx.coeff(1, 0).is_zero());

    CHECK_THROWS_AS(newton_lift(f, p, {0, 0, 0}, 2, 2), newton_stall);
    CHECK_THROWS_AS(newton_lift(f, p, {2, 0, 1}, 2, 2), error);
}

TEST_CASE("point census freezes flags and the cap") {
    auto pts = find_points(1, 5);
    CHECK(pts.size() == 37);
    CHECK(std::is_sorted(pts.begin(), pts.end()));

    std::vector<FpPoint> study;
    for (const auto& pt : pts)
        if (pt.in_study_set()) study.push_back(pt);
    REQUIRE(study.size() == 3);
    CHECK(study[0].a == 0);
    CHECK(study[0].b == 1);
    CHECK(study[0].c == 4);
    CHECK(study[1].a == 1);
    CHECK(study[1].b == 0);
    CHECK(study[1].c == 4);
    CHECK(study[2].a == 3);
    CHECK(study[2].b == 3);
    CHECK(study[2].c == 4);

    // trace x = 2 forces a reducible character even where the torsion dies
    FpPoint red = census_point(1, 5, 2, 4, 4);
    CHECK(red.nonacyclic);
    CHECK(!red.abs_irreducible);

    // every flag is recomputable from the point alone
    FamilyPolys F = family_polys(1);
    QPoly dz = F.f_exp.derivative("z");
    for (const auto& pt : pts) {
        std::vector<FpElem> P = {FpElem(pt.a, 5), FpElem(pt.b, 5),
                                 FpElem(pt.c, 5)};
        CHECK(eval_fp(F.f_exp, P, 5).is_zero());
        CHECK(pt.nonacyclic == eval_fp(F.tau_exp, P, 5).is_zero());
        CHECK(pt.abs_irreducible == !eval_fp(F.reducible, P, 5).is_zero());
        CHECK(pt.dz_nonzero == !eval_fp(dz, P, 5).is_zero());
    }

    CHECK_THROWS_AS(find_points(1, 4), error);
    CHECK_THROWS_AS(find_points(1, 127), cap_exceeded);
}

TEST_CASE("torsion expansion at study points") {
    FpPoint pt = census_point(1, 5, 3, 3, 4);
    REQUIRE(pt.in_study_set());

    LReport rep = l_function(pt, 4, 3);
    CHECK(rep.verdict == "pass");
    CHECK(rep.const_val == 0);
    CHECK(rep.lin_x == 0);
    CHECK(rep.lin_y == 0);
    CHECK(rep.monotonic);
    CHECK(rep.solved_for == "z");
    CHECK(rep.quad_rank == gram_rank(rep.L.coeff(2, 0).mod_p(),
                                     rep.L.coeff(1, 1).mod_p(),
                                     rep.L.coeff(0, 2).mod_p(), 5));

    auto j = rep.to_json();
    CHECK(j["verdict"] == "pass");
    CHECK(j["taylor_mod_p"].size() == 10);
    CHECK(j["L"]["center"][0] == 3);

    // acyclic control: expansion is a unit, verdict does not apply
    FpPoint ctl = census_point(1, 5, 0, 0, 0);
    REQUIRE(!ctl.nonacyclic);
    LReport crep = l_function(ctl, 4, 3);
    CHECK(crep.verdict == "not-applicable");
    CHECK(crep.const_val == 2);
}

TEST_CASE("verdict data is invariant under unit changes") {
    FpPoint pt = census_point(1, 5, 1, 0, 4);
    LReport rep = l_function(pt, 4, 3);
    REQUIRE(rep.verdict == "pass");

    // multiplying by a unit series fixes the vanishing of the 1-jet
    PSeries2 unit = PSeries2::constant(ZpnElem(3, 5, 4), 3, 1, 0);
    unit.set_coeff(1, 0, ZpnElem(2, 5, 4));
    PSeries2 L2 = rep.L * unit;
    CHECK(L2.coeff(0, 0).mod_p() == 0);
    CHECK(L2.coeff(1, 0).mod_p() == 0);
    CHECK(L2.coeff(0, 1).mod_p() == 0);
    CHECK(gram_rank(L2.coeff(2, 0).mod_p(), L2.coeff(1, 1).mod_p(),
                    L2.coeff(0, 2).mod_p(), 5) == rep.quad_rank);

    // and a unimodular substitution moves the Gram matrix by congruence
    int64_t c20 = rep.L.coeff(2, 0).mod_p(), c11 = rep.L.coeff(1, 1).mod_p(),
            c02 = rep.L.coeff(0, 2).mod_p();
    // (u, v) -> (u, u + v)
    int64_t d20 = (c20 + c11 + c02) % 5, d11 = (c11 + 2 * c02) % 5, d02 = c02;
    CHECK(gram_rank(d20, d11, d02, 5) == rep.quad_rank);
}

TEST_CASE("deeper truncations agree with coarse ones") {
    FpPoint pt = census_point(1, 5, 3, 3, 4);
    PSeries2 coarse = hensel_implicit(pt, 3, 2);
    PSeries2 fine = hensel_implicit(pt, 6, 4);
    CHECK(fine.truncate(3, 2) == coarse);
}

TEST_CASE("survey partitions the census") {
    SurveyReport S = l_survey(1, 5, 4, 3);
    CHECK(S.points_on_component == 37);
    CHECK(S.study_set_size == 3);
    CHECK(S.excluded_acyclic == 25);
    CHECK(S.excluded_reducible == 9);
    CHECK(S.excluded_dz_zero == 0);
    CHECK(S.permuted_lifts == 0);
    CHECK(S.singular_points == 0);
    CHECK(S.reports.size() == 3);
    CHECK(S.all_pass);
    for (size_t i = 1; i < S.reports.size(); ++i)
        CHECK(S.reports[i - 1].point < S.reports[i].point);

    SurveyReport again = l_survey(1, 5, 4, 3);
    CHECK(S.to_json().dump() == again.to_json().dump());
}

TEST_CASE("a dead z-derivative falls back to another coordinate") {
    SurveyReport S = l_survey(2, 11, 3, 2);
    CHECK(S.study_set_size == 7);
    CHECK(S.permuted_lifts == 1);
    CHECK(S.singular_points == 0);
    CHECK(S.reports.size() == 8);
    CHECK(S.all_pass);

    FpPoint pt = census_point(2, 11, 5, 5, 3);
    REQUIRE(!pt.dz_nonzero);
    LReport rep = l_function(pt, 3, 2);
    CHECK(rep.solved_for != "z");
    CHECK(rep.verdict == "pass");
}
