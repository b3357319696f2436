#include "genusq/field_model.hpp"

#include <algorithm>

#include "genusq/arith.hpp"
#include "genusq/errors.hpp"

namespace genusq {

const PrimeInfo& FieldContext::at(int i) const {
    if (i < 1 || i > n) throw IndexError("prime index out of range");
    return primes[static_cast<size_t>(i - 1)];
}

FieldContext build_field(u64 p, u64 a) {
    std::vector<std::string> violations;
    if (!is_prime(p) || (p != 2 && p % 4 != 1))
        violations.push_back("p must be 2 or a prime = 1 mod 4, got " +
                             std::to_string(p));
    if (a == 0) violations.push_back("a must be positive");
    if (a != 0 && p != 0 && a % p == 0)
        violations.push_back("a must be coprime to p");
    SquarefreeFactorization fac;
    bool have_fac = false;
    if (a != 0) {
        try {
            fac = factor_squarefree(a);
            have_fac = true;
        } catch (const NotSquarefree& e) {
            violations.push_back(e.what());
        }
    }
    if (!violations.empty()) {
        std::string msg = "invalid field input:";
        for (const auto& v : violations) msg += " [" + v + "]";
        throw InvalidInput(msg);
    }
    (void)have_fac;

    FieldContext ctx;
    ctx.p = p;
    ctx.a = a;
    ctx.a_even = fac.has_two;
    ctx.a_odd = fac.has_two ? a / 2 : a;
    ctx.h = class_number(p);
    ctx.lambda = lambda_for(p);
    ctx.eps = fundamental_unit(p);
    if (p != 2) {
        auto [b, c] = two_squares(p, /*want_even_b=*/true);
        ctx.b = b;
        ctx.c = c;
    }

    std::vector<u64> split, inert;
    for (u64 q : fac.odd_primes) {
        int chi = (p == 2) ? ((q % 8 == 1 || q % 8 == 7) ? 1 : -1)
                           : legendre(cpp_int(p), q);
        (chi == 1 ? split : inert).push_back(q);
    }
    std::sort(split.begin(), split.end());
    std::sort(inert.begin(), inert.end());
    ctx.m = static_cast<int>(split.size());
    ctx.n = static_cast<int>(split.size() + inert.size());

    for (u64 q : split) {
        PrimeInfo info;
        info.q = q;
        info.splits = true;
        info.pell = solve_norm_equation(p, q);
        const PellSolution& s = *info.pell;
        if (p != 2 && q % 4 == 3) {
            // (x + y sqrt(p)) sqrt(p) = y p + x sqrt(p)
            info.alpha = QuadElem(s.y * p, s.x, 1, p);
        } else {
            info.alpha = QuadElem(s.x, s.y, 1, p);
        }
        info.alpha_mod4 = mod4_class(*info.alpha).tag;
        ctx.primes.push_back(std::move(info));
    }
    for (u64 q : inert) {
        PrimeInfo info;
        info.q = q;
        ctx.primes.push_back(std::move(info));
    }

    for (int i = 1; i <= ctx.n; ++i) {
        if (ctx.at(i).q % 4 == 3) {
            ctx.i0 = i;
            break;
        }
    }
    for (int j = 1; j <= ctx.m; ++j) {
        if (ctx.at(j).alpha_mod4 == Mod4Tag::MINUS_ONE) {
            ctx.j0 = j;
            break;
        }
    }
    return ctx;
}

u64 q_star(const FieldContext& ctx, int i) {
    if (ctx.i0 && i == *ctx.i0) throw IndexError("q* is defined for i != i0");
    const PrimeInfo& info = ctx.at(i);
    if (info.q % 4 == 1) return info.q;
    if (!ctx.i0) throw IndexError("q* needs a prime = 3 mod 4");
    return ctx.at(*ctx.i0).q * info.q;
}

QuadElem alpha_star(const FieldContext& ctx, int j) {
    if (!ctx.j0) throw IndexError("alpha* needs an alpha = -1 mod 4");
    if (j == *ctx.j0) throw IndexError("alpha* is defined for j != j0");
    if (j < 1 || j > ctx.m) throw IndexError("alpha index out of range");
    const PrimeInfo& info = ctx.at(j);
    if (info.alpha_mod4 == Mod4Tag::PLUS_ONE) return *info.alpha;
    if (info.alpha_mod4 != Mod4Tag::MINUS_ONE)
        throw UnhandledCase("alpha* is defined for alpha = +-1 mod 4 only");
    return quad_mul(*ctx.at(*ctx.j0).alpha, *info.alpha);
}

BetaResult beta(const FieldContext& ctx, int j) {
    if (j < 1 || j > ctx.m) throw IndexError("beta index out of range");
    if (!ctx.i0) throw IndexError("beta needs a prime = 3 mod 4");
    const PrimeInfo& info = ctx.at(j);
    u64 qi0 = ctx.at(*ctx.i0).q;

    BetaResult res;
    if (ctx.p != 2) {
        // Keyed on the class of alpha_j mod 4.
        if (info.alpha_mod4 == Mod4Tag::PLUS_ONE) {
            res.value = *info.alpha;
        } else if (info.alpha_mod4 == Mod4Tag::MINUS_ONE) {
            res.value = quad_scale(qi0, *info.alpha);
            res.twisted = true;
        } else {
            throw UnhandledCase("beta needs alpha = +-1 mod 4 for odd p");
        }
        return res;
    }

    if (info.q % 8 == 1) {
        bool sym_eq =
            quartic_symbol_mod_p(2, info.q) == quartic_symbol_mod_2(info.q);
        // The symbol comparison and the class of alpha_j mod 4 express the
        // same dichotomy; disagreement would invalidate the construction.
        bool plus = (info.alpha_mod4 == Mod4Tag::PLUS_ONE);
        if (sym_eq != plus)
            throw DualEvaluationMismatch(
                "symbol test and mod-4 class disagree for q=" +
                std::to_string(info.q));
        res.value = sym_eq ? *info.alpha : quad_scale(qi0, *info.alpha);
        res.twisted = !sym_eq;
        return res;
    }

    // q_j = 7 mod 8: classify among {+-1, +-(1+sqrt 2)^2} mod 4. With x_j,
    // y_j both odd the bare solution x_j + y_j sqrt(2) never lands in one of
    // the four classes; the unit multiple eps_2 * (x_j + y_j sqrt(2)) always
    // does and is the element the construction actually adjoins (only it can
    // satisfy the square congruence mod 4).
    QuadElem base = *info.alpha;
    Mod4Tag tag = mod4_class(base).tag;
    bool via_unit = false;
    if (tag == Mod4Tag::OTHER) {
        base = quad_mul(ctx.eps, base);
        tag = mod4_class(base).tag;
        via_unit = true;
    }
    switch (tag) {
        case Mod4Tag::PLUS_ONE:
        case Mod4Tag::UNIT_SQUARE:
            res.value = base;
            res.twisted = false;
            break;
        case Mod4Tag::MINUS_ONE:
        case Mod4Tag::MINUS_UNIT_SQUARE:
            res.value = quad_scale(qi0, base);
            res.twisted = true;
            break;
        default:
            throw UnhandledCase("alpha_j has no class mod 4 even after a unit twist");
    }
    if (via_unit)
        res.note = std::string("unit_twist: eps*alpha = ") + mod4_tag_name(tag) +
                   " mod 4";
    return res;
}

DiscriminantInfo discriminant(const FieldContext& ctx) {
    DiscriminantInfo d;
    cpp_int a2 = cpp_int(ctx.a_odd) * ctx.a_odd;
    cpp_int p3 = pow_int(cpp_int(ctx.p), 3);

    int pow2 = 0;
    if (ctx.p == 2) {
        // d = 2: delta = 2^8 a^2 d^3 = 2^11 a^2, relative part 4a.
        d.abs_disc = pow_int(cpp_int(2), 11) * a2;
        d.rel_coeff = 4 * cpp_int(ctx.a);
        pow2 = 11;
    } else if (ctx.a_even) {
        d.abs_disc = 64 * a2 * p3;
        d.rel_coeff = 8 * cpp_int(ctx.a_odd);
        d.dyadic_ramified = true;
        pow2 = 6;
    } else if ((ctx.a + ctx.b) % 4 == 1) {
        d.abs_disc = a2 * p3;
        d.rel_coeff = cpp_int(ctx.a);
    } else {
        d.abs_disc = 16 * a2 * p3;
        d.rel_coeff = 4 * cpp_int(ctx.a);
        d.dyadic_ramified = true;
        pow2 = 4;
    }

    if (pow2 > 0) d.abs_factors.push_back({2, pow2});
    std::vector<u64> qs;
    for (const auto& info : ctx.primes) qs.push_back(info.q);
    std::sort(qs.begin(), qs.end());
    for (u64 q : qs) {
        if (q < ctx.p) d.abs_factors.push_back({q, 2});
    }
    if (ctx.p != 2) d.abs_factors.push_back({ctx.p, 3});
    for (u64 q : qs) {
        if (q > ctx.p) d.abs_factors.push_back({q, 2});
    }

    d.t = 1;  // the prime (sqrt(p)) always ramifies in K/k0
    for (const auto& info : ctx.primes) d.t += info.splits ? 2 : 1;
    if (ctx.p != 2 && d.dyadic_ramified) d.t += (ctx.p % 8 == 1) ? 2 : 1;

    // Rational ramification: e_p = 4, e_q = 2 for q | a odd, e_2 = 2 when 2
    // divides the absolute discriminant (a even or a+b = 3 mod 4).
    if (ctx.p != 2 && d.dyadic_ramified) d.ramified.push_back({2, 2});
    for (u64 q : qs) {
        if (q < ctx.p) d.ramified.push_back({q, 2});
    }
    d.ramified.push_back({ctx.p, 4});
    for (u64 q : qs) {
        if (q > ctx.p) d.ramified.push_back({q, 2});
    }
    return d;
}

}  // namespace genusq
