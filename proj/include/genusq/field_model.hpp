#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genusq/int_types.hpp"
#include "genusq/norm_eq.hpp"
#include "genusq/quadfield.hpp"

namespace genusq {

struct PrimeInfo {
    u64 q = 0;
    bool splits = false;  // (p/q) = +1
    // Split primes only: minimal solution of x^2 - p y^2 = q^(lambda h),
    // the attached quadratic integer alpha, and its class mod 4.
    std::optional<PellSolution> pell;
    std::optional<QuadElem> alpha;
    Mod4Tag alpha_mod4 = Mod4Tag::OTHER;
};

// K = Q(sqrt(a * eps_p * sqrt(p))), p = 2 or p = 1 mod 4 prime, a > 0
// squarefree and coprime to p.
struct FieldContext {
    u64 p = 0;
    u64 a = 0;
    bool a_even = false;
    u64 a_odd = 0;  // odd part of a
    // Odd prime factors of a: the m split ones first, then the inert ones,
    // each group ascending. All 1-based indices below refer to this order.
    std::vector<PrimeInfo> primes;
    int n = 0;
    int m = 0;
    std::optional<int> i0;  // first i with q_i = 3 mod 4
    std::optional<int> j0;  // first split j with alpha_j = -1 mod 4
    u64 h = 1;
    int lambda = 1;
    QuadElem eps;
    u64 b = 0, c = 0;  // p = b^2 + c^2 with b even (p odd only)

    const PrimeInfo& at(int i) const;  // 1-based
};

FieldContext build_field(u64 p, u64 a);

// q_i^* = q_i when q_i = 1 mod 4, else q_{i0} * q_i.
u64 q_star(const FieldContext& ctx, int i);

// alpha_j^* = alpha_j when alpha_j = +1 mod 4, else alpha_{j0} * alpha_j.
QuadElem alpha_star(const FieldContext& ctx, int j);

struct BetaResult {
    QuadElem value;
    bool twisted = false;  // multiplied by q_{i0}
    // Set when a unit multiple decided the class (p = 2, q_j = 7 mod 8).
    std::string note;
};

// beta_j: alpha_j or q_{i0} * alpha_j, keyed on the class of alpha_j mod 4
// (p odd), on quartic symbols (p = 2, q_j = 1 mod 8), or on the class of
// eps_2 * alpha_j mod 4 (p = 2, q_j = 7 mod 8).
BetaResult beta(const FieldContext& ctx, int j);

struct DiscriminantInfo {
    cpp_int abs_disc;
    std::vector<std::pair<u64, int>> abs_factors;  // ascending primes
    // delta_{K/k0} = rel_coeff * sqrt(p)
    cpp_int rel_coeff;
    bool dyadic_ramified = false;  // 2 ramifies in K/k0 (p odd only)
    int t = 0;  // places of k0 ramified in K/k0 (all finite; K totally real)
    // Rational primes ramified in K/Q with their ramification indices.
    std::vector<std::pair<u64, int>> ramified;
};

DiscriminantInfo discriminant(const FieldContext& ctx);

}  // namespace genusq
