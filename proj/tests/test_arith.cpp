#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genusq/arith.hpp"
#include "genusq/errors.hpp"

using namespace genusq;

TEST_CASE("primality over small and 64-bit inputs") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(5));
    CHECK(is_prime(97));
    CHECK(is_prime(229));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91));          // 7 * 13
    CHECK_FALSE(is_prime(3215031751));  // strong pseudoprime to 2,3,5,7
    CHECK(is_prime(18446744073709551557ULL));
    CHECK_FALSE(is_prime(18446744073709551556ULL));
}

TEST_CASE("squarefree factorization") {
    auto f = factor_squarefree(30);
    CHECK(f.has_two);
    CHECK(f.odd_primes == std::vector<u64>{3, 5});
    auto g = factor_squarefree(119);
    CHECK_FALSE(g.has_two);
    CHECK(g.odd_primes == std::vector<u64>{7, 17});
    CHECK(factor_squarefree(1).odd_primes.empty());
    CHECK_THROWS_AS(factor_squarefree(12), NotSquarefree);
    CHECK_THROWS_AS(factor_squarefree(75), NotSquarefree);
}

TEST_CASE("legendre symbol against small tables and Euler criterion") {
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(3, 7) == -1);
    CHECK(legendre(13, 17) == 1);
    CHECK(legendre(5, 7) == -1);
    CHECK(legendre(14, 7) == 0);
    CHECK(legendre(-1, 13) == 1);
    CHECK(legendre(-1, 7) == -1);
    for (u64 p : std::vector<u64>{5, 13, 41, 97}) {
        for (u64 a = 1; a < p; ++a) {
            u64 e = pow_mod(a, (p - 1) / 2, p);
            int expected = e == 1 ? 1 : -1;
            CHECK(legendre(static_cast<i64>(a), p) == expected);
        }
    }
}

TEST_CASE("jacobi symbol multiplicativity and reciprocity") {
    CHECK(jacobi(2, 15) == 1);
    CHECK(jacobi(7, 15) == -1);
    // Multiplicativity in the modulus over odd factors (holds by definition,
    // zeros included).
    for (u64 m : std::vector<u64>{9, 15, 21, 35})
        for (u64 n : std::vector<u64>{11, 13, 25})
            for (u64 a : std::vector<u64>{2, 5, 8, 17})
                CHECK(jacobi(a, cpp_int(m) * n) ==
                      jacobi(a, m) * jacobi(a, n));
    // Quadratic reciprocity for odd primes.
    std::vector<u64> ps = {3, 5, 7, 11, 13, 17, 19, 23, 29};
    for (u64 pp : ps)
        for (u64 qq : ps) {
            if (pp == qq) continue;
            int sign = (pp % 4 == 3 && qq % 4 == 3) ? -1 : 1;
            CHECK(legendre(static_cast<i64>(pp), qq) *
                      legendre(static_cast<i64>(qq), pp) ==
                  sign);
        }
}

TEST_CASE("square roots mod p") {
    for (u64 p : std::vector<u64>{13, 17, 41, 73, 97, 193}) {
        for (u64 a = 1; a < p; ++a) {
            if (legendre(static_cast<i64>(a), p) != 1) continue;
            u64 r = sqrt_mod_prime(a, p);
            CHECK(r * r % p == a);
        }
    }
    CHECK_THROWS_AS(sqrt_mod_prime(3, 7), NotQuadraticResidue);
}

TEST_CASE("two-squares decomposition with requested parity") {
    for (u64 p : std::vector<u64>{5, 13, 17, 29, 41, 97, 113, 197}) {
        auto [b, c] = two_squares(p, true);
        CHECK(b * b + c * c == p);
        CHECK(b % 2 == 0);
        CHECK(c % 2 == 1);
        auto [d, e] = two_squares(p, false);
        CHECK(d * d + e * e == p);
        CHECK(d % 2 == 1);
    }
}

TEST_CASE("quartic residue symbol mod p") {
    // 2^((17-1)/4) = 16 = -1 mod 17; 13 is a fourth power mod 17 (4^4 = 256).
    CHECK(quartic_symbol_mod_p(2, 17) == -1);
    CHECK(quartic_symbol_mod_p(13, 17) == 1);
    for (u64 p : std::vector<u64>{13, 17, 29, 41, 73, 89}) {
        for (u64 a = 2; a < p; ++a) {
            if (legendre(static_cast<i64>(a), p) != 1) continue;
            int s = quartic_symbol_mod_p(a, p);
            CHECK((s == 1 || s == -1));
            // A fourth power iff the symbol is +1.
            u64 e = pow_mod(a, (p - 1) / 4, p);
            CHECK(s == (e == 1 ? 1 : -1));
        }
        for (u64 a = 2; a < p; ++a)
            if (legendre(static_cast<i64>(a), p) == -1) {
                CHECK_THROWS_AS(quartic_symbol_mod_p(a, p), NotQuadraticResidue);
                break;
            }
    }
}

TEST_CASE("quartic residue symbol mod 2 keyed on the class mod 16") {
    CHECK(quartic_symbol_mod_2(17) == 1);  // 17 = 1 mod 16
    CHECK(quartic_symbol_mod_2(9) == -1);  // 9 mod 16
    CHECK(quartic_symbol_mod_2(1) == 1);
    CHECK(quartic_symbol_mod_2(25) == -1);  // 25 = 9 mod 16
    CHECK(quartic_symbol_mod_2(33) == 1);
    CHECK_THROWS_AS(quartic_symbol_mod_2(3), SymbolUndefined);
    CHECK_THROWS_AS(quartic_symbol_mod_2(5), SymbolUndefined);
}

TEST_CASE("pow_mod basics") {
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(7, 0, 13) == 1);
    CHECK(pow_mod(5, 117, 19) == pow_mod(5, 117 % 18, 19));
}
