#include "genusq/int_types.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace genusq {

cpp_int isqrt(const cpp_int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

u64 isqrt_u64(u64 n) {
    // sqrtl is exact enough to seed; fix up to the true floor.
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n && (r + 1) != 0) ++r;
    return r;
}

bool is_perfect_square(const cpp_int& n, cpp_int& root) {
    if (n < 0) return false;
    // Cheap residue filter: squares mod 64 hit only 12 classes.
    static const bool kSquareMod64[64] = {
        true,  true,  false, false, true,  false, false, false,
        false, true,  false, false, false, false, false, false,
        true,  true,  false, false, false, false, false, false,
        false, true,  false, false, false, false, false, false,
        false, true,  false, false, true,  false, false, false,
        false, true,  false, false, false, false, false, false,
        false, true,  false, false, false, false, false, false,
        false, false, false, false, false, false, false, false};
    if (!kSquareMod64[static_cast<unsigned>(n & 63)]) return false;
    cpp_int r = boost::multiprecision::sqrt(n);
    if (r * r == n) {
        root = r;
        return true;
    }
    return false;
}

bool is_perfect_square(const cpp_int& n) {
    cpp_int r;
    return is_perfect_square(n, r);
}

cpp_int mod_floor(const cpp_int& a, const cpp_int& m) {
    assert(m > 0);
    cpp_int r = a % m;
    if (r < 0) r += m;
    return r;
}

i64 mod_floor(i64 a, i64 m) {
    assert(m > 0);
    i64 r = a % m;
    if (r < 0) r += m;
    return r;
}

cpp_int div_floor(const cpp_int& a, const cpp_int& b) {
    assert(b != 0);
    cpp_int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

cpp_int pow_int(const cpp_int& base, int exp) {
    assert(exp >= 0);
    cpp_int r = 1, b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

int val2(const cpp_int& n) {
    assert(n != 0);
    cpp_int m = n;
    int v = 0;
    while ((m & 1) == 0) {
        m >>= 1;
        ++v;
    }
    return v;
}

int valp(cpp_int n, const cpp_int& q) {
    assert(n != 0 && q >= 2);
    int v = 0;
    while (n % q == 0) {
        n /= q;
        ++v;
    }
    return v;
}

std::string to_string(const cpp_int& n) { return n.str(); }

}  // namespace genusq
