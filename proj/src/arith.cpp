#include "genusq/arith.hpp"

#include <cassert>

#include "genusq/errors.hpp"

namespace genusq {

namespace {

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

}  // namespace

u64 pow_mod(u64 a, u64 e, u64 m) {
    assert(m > 1);
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

SquarefreeFactorization factor_squarefree(u64 n) {
    if (n < 1) throw InvalidInput("factor_squarefree: n must be positive");
    SquarefreeFactorization f;
    f.value = n;
    u64 m = n;
    if (m % 2 == 0) {
        m /= 2;
        if (m % 2 == 0)
            throw NotSquarefree("factor_squarefree: 4 divides " +
                                std::to_string(n));
        f.has_two = true;
    }
    for (u64 d = 3; d * d <= m; d += 2) {
        if (m % d) continue;
        m /= d;
        if (m % d == 0)
            throw NotSquarefree("factor_squarefree: " + std::to_string(d) +
                                "^2 divides " + std::to_string(n));
        f.odd_primes.push_back(d);
    }
    if (m > 1) f.odd_primes.push_back(m);
    // Trial division up to sqrt leaves a prime cofactor; certify anyway.
    for (u64 q : f.odd_primes) assert(is_prime(q));
    return f;
}

int legendre(const cpp_int& a, u64 p) {
    assert(p > 2 && is_prime(p));
    u64 r = static_cast<u64>(mod_floor(a, cpp_int(p)));
    if (r == 0) return 0;
    u64 t = pow_mod(r, (p - 1) / 2, p);
    assert(t == 1 || t == p - 1);
    return t == 1 ? 1 : -1;
}

int legendre(i64 a, u64 p) { return legendre(cpp_int(a), p); }

int jacobi(cpp_int a, cpp_int n) {
    assert(n > 0 && (n & 1) == 1);
    a = mod_floor(a, n);
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            u64 r = static_cast<u64>(n & 7);
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) t = -t;
        a = a % n;
    }
    return n == 1 ? t : 0;
}

int quartic_symbol_mod_p(const cpp_int& a, u64 p) {
    if (p % 4 != 1 || !is_prime(p))
        throw InvalidPrime("quartic_symbol_mod_p: p must be prime ≡ 1 mod 4");
    if (legendre(a, p) != 1)
        throw NotQuadraticResidue("quartic_symbol_mod_p: " + a.str() +
                                  " is not a quadratic residue mod " +
                                  std::to_string(p));
    u64 r = static_cast<u64>(mod_floor(a, cpp_int(p)));
    u64 t = pow_mod(r, (p - 1) / 4, p);
    assert(t == 1 || t == p - 1);
    return t == 1 ? 1 : -1;
}

int quartic_symbol_mod_2(const cpp_int& a) {
    cpp_int r8 = mod_floor(a, cpp_int(8));
    if (r8 != 1)
        throw SymbolUndefined("quartic_symbol_mod_2: argument " + a.str() +
                              " is not ≡ 1 mod 8");
    return mod_floor(a, cpp_int(16)) == 1 ? 1 : -1;
}

std::pair<u64, u64> two_squares(u64 p, bool want_even_b) {
    if (p % 4 != 1 || !is_prime(p))
        throw InvalidPrime("two_squares: p must be prime ≡ 1 mod 4");
    for (u64 b = 1; b * b < p; ++b) {
        u64 c2 = p - b * b;
        u64 c = isqrt_u64(c2);
        if (c * c != c2) continue;
        // Exactly one of b, c is even.
        if ((b % 2 == 0) == want_even_b) return {b, c};
        return {c, b};
    }
    throw Error("two_squares: no decomposition found for " +
                std::to_string(p));
}

u64 sqrt_mod_prime(u64 a, u64 p) {
    assert(is_prime(p));
    a %= p;
    if (p == 2) return a;
    if (a == 0) return 0;
    if (legendre(cpp_int(a), p) != 1)
        throw NotQuadraticResidue("sqrt_mod_prime: " + std::to_string(a) +
                                  " mod " + std::to_string(p));
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
    // Tonelli-Shanks.
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (legendre(cpp_int(z), p) != -1) ++z;
    u64 m = s;
    u64 c = pow_mod(z, q, p);
    u64 t = pow_mod(a, q, p);
    u64 r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 t2 = t;
        u64 i = 0;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, p);
            ++i;
            assert(i < m);
        }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    assert(mul_mod(r, r, p) == a);
    return r;
}

}  // namespace genusq
