#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "genusq/errors.hpp"
#include "genusq/field_model.hpp"
#include "genusq/quadfield.hpp"

using namespace genusq;

TEST_CASE("split prime with the full bundle: (17, 13)") {
    FieldContext c = build_field(17, 13);
    CHECK(c.n == 1);
    CHECK(c.m == 1);
    CHECK(c.h == 1);
    CHECK(c.lambda == 1);
    CHECK(c.b == 4);
    CHECK(c.c == 1);
    CHECK(quad_str(c.eps) == "4+sqrt(17)");
    CHECK_FALSE(c.i0.has_value());
    REQUIRE(c.j0.has_value());
    CHECK(*c.j0 == 1);
    const PrimeInfo& q1 = c.at(1);
    CHECK(q1.q == 13);
    CHECK(q1.splits);
    REQUIRE(q1.alpha.has_value());
    CHECK(quad_str(*q1.alpha) == "9+2*sqrt(17)");
    CHECK(q1.alpha_mod4 == Mod4Tag::MINUS_ONE);
    CHECK(norm(*q1.alpha) == 13);
}

TEST_CASE("ordering puts split primes first: (17, 65)") {
    FieldContext c = build_field(17, 65);
    CHECK(c.n == 2);
    CHECK(c.m == 1);
    CHECK(c.at(1).q == 13);
    CHECK(c.at(1).splits);
    CHECK(c.at(2).q == 5);
    CHECK_FALSE(c.at(2).splits);
    CHECK_FALSE(c.at(2).alpha.has_value());
    CHECK_THROWS_AS(c.at(3), IndexError);
    CHECK_THROWS_AS(c.at(0), IndexError);
}

TEST_CASE("split q = 3 mod 4 carries the sqrt(p) factor: (5, 11)") {
    FieldContext c = build_field(5, 11);
    CHECK(c.lambda == 3);
    CHECK(quad_str(c.eps) == "(1+sqrt(5))/2");
    REQUIRE(c.i0.has_value());
    CHECK(*c.i0 == 1);
    const PrimeInfo& q1 = c.at(1);
    REQUIRE(q1.alpha.has_value());
    CHECK(quad_str(*q1.alpha) == "55+44*sqrt(5)");
    CHECK(q1.alpha_mod4 == Mod4Tag::MINUS_ONE);
    // N(alpha) = -p q^(lambda h) in the split 3 mod 4 case.
    CHECK(norm(*q1.alpha) == -5 * cpp_int(11) * 11 * 11);
}

TEST_CASE("p = 2 basics: (2, 7)") {
    FieldContext c = build_field(2, 7);
    CHECK(c.b == 0);
    CHECK(c.c == 0);
    CHECK(quad_str(c.eps) == "1+sqrt(2)");
    CHECK(c.at(1).alpha_mod4 == Mod4Tag::OTHER);  // 3+sqrt(2), q = 7 mod 8
    CHECK(quad_str(*c.at(1).alpha) == "3+sqrt(2)");
    CHECK_FALSE(c.j0.has_value());
    REQUIRE(c.i0.has_value());
}

TEST_CASE("j0 skips classes that are neither +-1 mod 4: (2, 119)") {
    FieldContext c = build_field(2, 119);
    CHECK(c.n == 2);
    CHECK(c.m == 2);
    CHECK(c.at(1).q == 7);
    CHECK(c.at(2).q == 17);
    CHECK(c.at(2).alpha_mod4 == Mod4Tag::MINUS_ONE);
    REQUIRE(c.j0.has_value());
    CHECK(*c.j0 == 2);
}

TEST_CASE("all-plus split classes leave j0 empty: (41, 138)") {
    FieldContext c = build_field(41, 138);
    CHECK(c.a_even);
    CHECK(c.a_odd == 69);
    CHECK(c.n == 2);
    CHECK(c.m == 1);
    CHECK(quad_str(c.eps) == "32+5*sqrt(41)");
    CHECK(c.at(1).q == 23);
    CHECK(c.at(1).alpha_mod4 == Mod4Tag::PLUS_ONE);
    CHECK(quad_str(*c.at(1).alpha) == "41+8*sqrt(41)");
    CHECK_FALSE(c.j0.has_value());
    REQUIRE(c.i0.has_value());
    CHECK(*c.i0 == 1);  // the split 23 = 3 mod 4 serves as i0
}

TEST_CASE("starred primes and alphas") {
    FieldContext c = build_field(17, 65);
    // 5 = 1 mod 4 keeps itself; there is no prime = 3 mod 4 here.
    CHECK(q_star(c, 2) == 5);

    FieldContext d = build_field(5, 33);  // 3 inert, 11 split
    REQUIRE(d.i0.has_value());
    const PrimeInfo& inert = d.at(d.m + 1);
    CHECK(inert.q == 3);
    if (*d.i0 != d.m + 1) CHECK(q_star(d, d.m + 1) == 11 * 3);

    FieldContext e = build_field(17, 13);
    CHECK_THROWS_AS(alpha_star(e, 1), IndexError);  // j0 = 1 is excluded
}

TEST_CASE("beta twists by the unit when needed: (2, 119)") {
    FieldContext c = build_field(2, 119);
    BetaResult b1 = beta(c, 1);
    CHECK(quad_str(b1.value) == "5+4*sqrt(2)");
    CHECK_FALSE(b1.twisted);
    CHECK(b1.note.find("unit_twist") != std::string::npos);
    CHECK(mod4_class(b1.value).tag == Mod4Tag::PLUS_ONE);
}

TEST_CASE("discriminant anchors") {
    DiscriminantInfo d1 = discriminant(build_field(17, 13));
    CHECK(d1.abs_disc == 830297);  // 13^2 17^3
    REQUIRE(d1.abs_factors.size() == 2);
    CHECK(d1.abs_factors[0] == std::pair<u64, int>{13, 2});
    CHECK(d1.abs_factors[1] == std::pair<u64, int>{17, 3});
    CHECK(d1.rel_coeff == 13);
    CHECK_FALSE(d1.dyadic_ramified);
    CHECK(d1.t == 3);
    CHECK(d1.ramified == std::vector<std::pair<u64, int>>{{13, 2}, {17, 4}});

    DiscriminantInfo d2 = discriminant(build_field(2, 7));
    CHECK(d2.abs_disc == 100352);  // 2^11 7^2
    CHECK(d2.rel_coeff == 28);
    CHECK(d2.t == 3);

    DiscriminantInfo d3 = discriminant(build_field(13, 17));
    CHECK(d3.abs_disc == 10158928);  // 2^4 13^3 17^2
    CHECK(d3.dyadic_ramified);
    CHECK(d3.t == 4);
    CHECK(d3.rel_coeff == 68);

    DiscriminantInfo d4 = discriminant(build_field(5, 1));
    CHECK(d4.abs_disc == 2000);  // 2^4 5^3
    CHECK(d4.dyadic_ramified);
    CHECK(d4.t == 2);

    DiscriminantInfo d5 = discriminant(build_field(17, 3));
    CHECK(d5.abs_disc == 707472);  // 2^4 3^2 17^3
    CHECK(d5.dyadic_ramified);
    CHECK(d5.t == 4);
}

TEST_CASE("input validation lists every violation") {
    CHECK_THROWS_AS(build_field(7, 3), InvalidInput);   // p = 3 mod 4
    CHECK_THROWS_AS(build_field(4, 3), InvalidInput);   // p not prime
    CHECK_THROWS_AS(build_field(5, 0), InvalidInput);   // a = 0
    CHECK_THROWS_AS(build_field(5, 10), InvalidInput);  // gcd(a, p) > 1
    CHECK_THROWS_AS(build_field(5, 12), InvalidInput);  // a not squarefree
    try {
        build_field(9, 18);
    } catch (const InvalidInput& e) {
        std::string msg = e.what();
        CHECK(msg.find("prime") != std::string::npos);
        CHECK(msg.find("coprime") != std::string::npos);
        CHECK(msg.find("squarefree") != std::string::npos);
    }
}

TEST_CASE("norm shape holds across a small sweep") {
    for (u64 p : {u64(2), u64(5), u64(13), u64(17), u64(29), u64(37), u64(41)}) {
        for (u64 a = 1; a <= 60; ++a) {
            if (a % p == 0) continue;
            FieldContext c;
            try {
                c = build_field(p, a);
            } catch (const InvalidInput&) {
                continue;  // not squarefree
            }
            for (int j = 1; j <= c.m; ++j) {
                const PrimeInfo& pi = c.at(j);
                cpp_int qe = pow_int(cpp_int(pi.q), c.lambda * static_cast<int>(c.h));
                // Only the even/odd form for odd p, q = 3 mod 4 picks up -p;
                // for p = 2 the q = 7 mod 8 solutions stay in x^2 - 2y^2 = q.
                bool twisted = pi.pell && pi.pell->form == SolutionForm::F3;
                cpp_int want = twisted ? -cpp_int(p) * qe : qe;
                CHECK(norm(*pi.alpha) == want);
            }
        }
    }
}
