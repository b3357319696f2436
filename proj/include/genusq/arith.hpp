#pragma once

#include <utility>
#include <vector>

#include "genusq/int_types.hpp"

namespace genusq {

// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime(u64 n);

struct SquarefreeFactorization {
    u64 value = 1;
    std::vector<u64> odd_primes;  // ascending, distinct
    bool has_two = false;
};

// Trial division; throws NotSquarefree if a prime divides n twice.
SquarefreeFactorization factor_squarefree(u64 n);

// a^e mod m, m > 1.
u64 pow_mod(u64 a, u64 e, u64 m);

// Legendre symbol (a/p) in {-1, 0, +1}, p an odd prime.
int legendre(const cpp_int& a, u64 p);
int legendre(i64 a, u64 p);

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(cpp_int a, cpp_int n);

// Rational biquadratic residue symbol (a/p)_4 for p ≡ 1 (mod 4) prime;
// requires a to be a quadratic residue mod p.
int quartic_symbol_mod_p(const cpp_int& a, u64 p);

// (a/2)_4 for a ≡ 1 (mod 8): +1 iff a ≡ 1 (mod 16).
int quartic_symbol_mod_2(const cpp_int& a);

// p = b^2 + c^2 with the requested parity of b; p ≡ 1 (mod 4) prime.
std::pair<u64, u64> two_squares(u64 p, bool want_even_b);

// Square root of a mod odd prime p (Tonelli-Shanks); requires (a/p) = 1.
u64 sqrt_mod_prime(u64 a, u64 p);

}  // namespace genusq
