#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "charvar/mpoly.hpp"

using namespace charvar;

static const std::vector<std::string> XYZ = {"x", "y", "z"};

// f = xyz^2 - z(x^2+y^2+z^2) + xy + 2z, the geometric component at the base
// of the family.
static QPoly whitehead_f() {
    QPoly x = qvar(XYZ, "x"), y = qvar(XYZ, "y"), z = qvar(XYZ, "z");
    return x * y * z * z - z * (x * x + y * y + z * z) + x * y + qconst(XYZ, 2) * z;
}

TEST_CASE("basic arithmetic") {
    QPoly x = qvar(XYZ, "x"), y = qvar(XYZ, "y");
    QPoly p = (x + y) * (x + y);
    QPoly q = x * x + qconst(XYZ, 2) * x * y + y * y;
    CHECK(p == q);
    CHECK((p - q).is_zero());
    CHECK(p.term_count() == 3);
    CHECK(p.total_degree() == 2);
    CHECK((x - x).is_zero());
    CHECK(whitehead_f().term_count() == 6);
}

TEST_CASE("mixed variable lists are rejected") {
    QPoly x = qvar(XYZ, "x");
    QPoly a = qvar({"a"}, "a");
    CHECK_THROWS_AS(x + a, mixed_rings);
}

TEST_CASE("derivative of the component polynomial") {
    QPoly f = whitehead_f();
    QPoly x = qvar(XYZ, "x"), y = qvar(XYZ, "y"), z = qvar(XYZ, "z");
    QPoly expect = qconst(XYZ, 2) * x * y * z - x * x - y * y -
                   qconst(XYZ, 3) * z * z + qconst(XYZ, 2);
    CHECK(f.derivative("z") == expect);
}

TEST_CASE("derivative satisfies the Leibniz rule, randomized") {
    std::mt19937_64 rng(20260822);
    std::uniform_int_distribution<long> d(-4, 4);
    std::uniform_int_distribution<uint32_t> e(0, 3);
    auto rand_poly = [&] {
        QPoly p(XYZ);
        for (int t = 0; t < 5; ++t) {
            p += qconst(XYZ, d(rng)) * qvar(XYZ, "x").pow(e(rng)) *
                 qvar(XYZ, "y").pow(e(rng)) * qvar(XYZ, "z").pow(e(rng));
        }
        return p;
    };
    for (int i = 0; i < 60; ++i) {
        QPoly p = rand_poly(), q = rand_poly();
        CHECK((p * q).derivative("y") ==
              p.derivative("y") * q + p * q.derivative("y"));
    }
}

TEST_CASE("substitution: the divisor identity section") {
    QPoly f = whitehead_f();
    QPoly x = qvar(XYZ, "x"), y = qvar(XYZ, "y");
    QPoly sub = f.substitute("z", x + y - qconst(XYZ, 2));
    QPoly expect = (x + y - qconst(XYZ, 1)) * (x + y - qconst(XYZ, 1)) *
                   (x - qconst(XYZ, 2)) * (y - qconst(XYZ, 2));
    CHECK(sub == expect);
}

TEST_CASE("substitution is a ring homomorphism, randomized") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-3, 3);
    std::uniform_int_distribution<uint32_t> e(0, 2);
    auto rand_poly = [&] {
        QPoly p(XYZ);
        for (int t = 0; t < 4; ++t) {
            p += qconst(XYZ, d(rng)) * qvar(XYZ, "x").pow(e(rng)) *
                 qvar(XYZ, "y").pow(e(rng)) * qvar(XYZ, "z").pow(e(rng));
        }
        return p;
    };
    QPoly repl = qvar(XYZ, "x") - qvar(XYZ, "y") + qconst(XYZ, 1);
    for (int i = 0; i < 40; ++i) {
        QPoly p = rand_poly(), q = rand_poly();
        CHECK((p * q).substitute("z", repl) ==
              p.substitute("z", repl) * q.substitute("z", repl));
        CHECK((p + q).substitute("z", repl) ==
              p.substitute("z", repl) + q.substitute("z", repl));
    }
}

TEST_CASE("evaluation over a prime field") {
    QPoly f = whitehead_f();
    std::vector<FpElem> pt = {FpElem(3, 5), FpElem(3, 5), FpElem(4, 5)};
    CHECK(eval_fp(f, pt, 5).is_zero());
    CHECK(eval_fp(f.derivative("z"), pt, 5).residue() == 3);  // 8 mod 5
    std::vector<Rational> qt = {Rational(3), Rational(3), Rational(4)};
    CHECK(eval_q(f, qt) == Rational(25));
    CHECK(eval_q(f.derivative("z"), qt) == Rational(8));
}

TEST_CASE("evaluation rejects denominators divisible by p") {
    QPoly p = qconst(XYZ, Rational(1, 5)) * qvar(XYZ, "x");
    std::vector<FpElem> pt = {FpElem(1, 5), FpElem(0, 5), FpElem(0, 5)};
    CHECK_THROWS_AS(eval_fp(p, pt, 5), bad_denominator);
}

TEST_CASE("univariate gcd inside the multivariate ring") {
    // S4 - S2 = v^4 - 4v^2 + 2, which is separable
    std::vector<std::string> V = {"v"};
    QPoly v = qvar(V, "v");
    QPoly s4s2 = v.pow(4) - qconst(V, 4) * v * v + qconst(V, 2);
    QPoly g = univariate_gcd(s4s2, s4s2.derivative("v"), "v");
    CHECK(g == qconst(V, 1));
    QPoly sq = (v - qconst(V, 1)) * (v - qconst(V, 1)) * (v + qconst(V, 2));
    CHECK(univariate_gcd(sq, sq.derivative("v"), "v") == v - qconst(V, 1));
    CHECK_THROWS_AS((qvar(XYZ, "x") * qvar(XYZ, "y")).to_unipoly("x"), error);
}

TEST_CASE("json round trip is bit exact") {
    QPoly f = whitehead_f() * qconst(XYZ, Rational(-1, 2));
    auto j = poly_to_json(f);
    QPoly back = poly_from_json(j);
    CHECK(back == f);
    CHECK(poly_to_json(back).dump() == j.dump());
    CHECK(j["vars"] == nlohmann::json(XYZ));
    // leading term of -1/2 f is -1/2 x y z^2
    CHECK(j["terms"][0]["c"] == "-1/2");
    std::vector<uint32_t> exps = j["terms"][0]["e"].get<std::vector<uint32_t>>();
    CHECK(exps == std::vector<uint32_t>{1, 1, 2});
}

TEST_CASE("json parse validates arity") {
    nlohmann::json j = {{"vars", {"x", "y"}}, {"terms", {{{"c", "1"}, {"e", {1}}}}}};
    CHECK_THROWS_AS(poly_from_json(j), error);
}

TEST_CASE("variable transport") {
    std::vector<std::string> XYZV = {"x", "y", "z", "v"};
    QPoly f = whitehead_f();
    QPoly lifted = f.on_vars(XYZV);
    CHECK(lifted.vars() == XYZV);
    CHECK(lifted.on_vars(XYZ) == f);
    QPoly v = qvar(XYZV, "v");
    CHECK_THROWS_AS(v.on_vars(XYZ), error);
}

TEST_CASE("content and primitive part") {
    QPoly x = qvar(XYZ, "x"), y = qvar(XYZ, "y");
    QPoly p = qconst(XYZ, Rational(2, 3)) * x - qconst(XYZ, Rational(4, 3)) * y;
    CHECK(content(p) == Rational(2, 3));
    CHECK(primitive_part(p) == x - qconst(XYZ, 2) * y);
    CHECK(primitive_part(-p) == x - qconst(XYZ, 2) * y);
    CHECK(canonical_monic(p) == x - qconst(XYZ, 2) * y);
}

TEST_CASE("monomial order comparisons") {
    std::vector<std::string> XY = {"x", "y"};
    QPoly x = qvar(XY, "x"), y = qvar(XY, "y");
    // grevlex: x^2 y > x y^2 ; lex y > x: y beats any power of x
    MonomialOrder grl = MonomialOrder::grevlex(2);
    auto lead = [](const QPoly& p) { return p.terms().begin()->first; };
    CHECK(grl.cmp(lead(x * x * y), lead(x * y * y)) > 0);
    MonomialOrder lx = MonomialOrder::lex({1, 0});
    CHECK(lx.cmp(lead(y), lead(x * x * x)) > 0);
    MonomialOrder elim = MonomialOrder::elimination({0}, 2);
    CHECK(elim.cmp(lead(x), lead(y * y * y)) > 0);
}
