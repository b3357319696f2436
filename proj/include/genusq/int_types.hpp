#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace genusq {

using boost::multiprecision::cpp_int;
using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Floor square root, exact. boost::multiprecision::sqrt already returns the
// integer square root for cpp_int; this wrapper adds the negativity guard.
cpp_int isqrt(const cpp_int& n);
u64 isqrt_u64(u64 n);

bool is_perfect_square(const cpp_int& n);
// Returns true and sets root when n is a perfect square.
bool is_perfect_square(const cpp_int& n, cpp_int& root);

// Nonnegative remainder, |m| > 0.
cpp_int mod_floor(const cpp_int& a, const cpp_int& m);
i64 mod_floor(i64 a, i64 m);

// Floor division (rounds toward negative infinity).
cpp_int div_floor(const cpp_int& a, const cpp_int& b);

// base^exp for exp >= 0.
cpp_int pow_int(const cpp_int& base, int exp);

// 2-adic valuation of a nonzero integer.
int val2(const cpp_int& n);
// q-adic valuation, q >= 2.
int valp(cpp_int n, const cpp_int& q);

std::string to_string(const cpp_int& n);

}  // namespace genusq
