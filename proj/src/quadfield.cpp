#include "genusq/quadfield.hpp"

#include <cassert>
#include <map>
#include <set>
#include <vector>

#include "genusq/arith.hpp"
#include "genusq/errors.hpp"

namespace genusq {

namespace {

void check_admissible(u64 p) {
    if (!(p == 2 || (p % 4 == 1 && is_prime(p))))
        throw InvalidPrime("p must be 2 or a prime ≡ 1 mod 4, got " +
                           std::to_string(p));
}

}  // namespace

QuadElem::QuadElem(cpp_int u_, cpp_int v_, int den_, u64 p_)
    : u(std::move(u_)), v(std::move(v_)), den(den_), p(p_) {
    assert(den == 1 || den == 2);
    if (den == 2 && u % 2 == 0 && v % 2 == 0) {
        u >>= 1;
        v >>= 1;
        den = 1;
    }
    if (den == 2) {
        if (mod_floor(u - v, cpp_int(2)) != 0 || p % 4 != 1)
            throw NotIntegral("half-integral coordinates invalid for p = " +
                              std::to_string(p) + ": (" + u.str() + "+" +
                              v.str() + "√p)/2");
    }
}

std::string QuadElem::str() const { return quad_str(*this); }

QuadElem quad_mul(const QuadElem& x, const QuadElem& y) {
    if (x.p != y.p)
        throw MixedField("quad_mul across Q(√" + std::to_string(x.p) +
                         ") and Q(√" + std::to_string(y.p) + ")");
    cpp_int u = x.u * y.u + cpp_int(x.p) * x.v * y.v;
    cpp_int v = x.u * y.v + x.v * y.u;
    int den = x.den * y.den;
    while (den > 1 && u % 2 == 0 && v % 2 == 0) {
        u >>= 1;
        v >>= 1;
        den >>= 1;
    }
    // Maximal orders are closed under multiplication, so den 4 cannot
    // survive reduction.
    assert(den == 1 || den == 2);
    return QuadElem(std::move(u), std::move(v), den, x.p);
}

QuadElem quad_conj(const QuadElem& x) {
    return QuadElem(x.u, -x.v, x.den, x.p);
}

QuadElem quad_neg(const QuadElem& x) {
    return QuadElem(-x.u, -x.v, x.den, x.p);
}

QuadElem quad_scale(const cpp_int& n, const QuadElem& x) {
    return quad_mul(QuadElem::integer(n, x.p), x);
}

cpp_int norm(const QuadElem& x) {
    cpp_int n = x.u * x.u - cpp_int(x.p) * x.v * x.v;
    if (x.den == 2) {
        assert(n % 4 == 0);
        n /= 4;
    }
    return n;
}

bool is_integral(const QuadElem& x) {
    // The constructor normalizes, so den 2 elements are the genuine
    // half-integral ones.
    return x.den == 1 || (x.den == 2 && x.p % 4 == 1);
}

std::pair<cpp_int, cpp_int> omega_coords(const QuadElem& x) {
    if (x.p == 2) {
        if (x.den != 1) throw NotIntegral("non-integral element in Z[√2]");
        return {x.u, x.v};
    }
    // u + v√p = (u - v) + 2v·w,  (u + v√p)/2 = (u-v)/2 + v·w.
    if (x.den == 1) return {x.u - x.v, 2 * x.v};
    return {(x.u - x.v) / 2, x.v};
}

// --- fundamental unit -------------------------------------------------------
//
// PQa recurrence on alpha0 = (P0 + sqrt(D))/Q0 with the standard identity
// G_i^2 - D*B_i^2 = (-1)^{i+1} Q_{i+1} Q_0. For the maximal order we expand
// w = (1+sqrt(p))/2 (P0 = 1, Q0 = 2) when p ≡ 1 (mod 4) and sqrt(2)
// (P0 = 0, Q0 = 1) when p = 2; the unit appears at the first return of
// (P, Q) to its value at index 1.

QuadElem fundamental_unit(u64 p) {
    check_admissible(p);
    const cpp_int D = p;
    const cpp_int s = isqrt(D);
    cpp_int P = (p == 2) ? 0 : 1;
    cpp_int Q0 = (p == 2) ? 1 : 2;
    cpp_int Q = Q0;
    cpp_int Gm1 = Q0, Gm2 = -P;  // G_{-1} = Q0, G_{-2} = -P0
    cpp_int Bm1 = 0, Bm2 = 1;    // B_{-1} = 0,  B_{-2} = 1
    cpp_int P1 = 0, Q1 = 0;
    for (int i = 0;; ++i) {
        cpp_int a = div_floor(P + s, Q);  // Q > 0 throughout this expansion
        cpp_int G = a * Gm1 + Gm2;
        cpp_int B = a * Bm1 + Bm2;
        cpp_int Pn = a * Q - P;
        cpp_int Qn = (D - Pn * Pn) / Q;
        if (i == 0) {
            P1 = Pn;
            Q1 = Qn;
        } else if (Pn == P1 && Qn == Q1) {
            // Period closed at index i; (G_{i-1}, B_{i-1}) give the unit.
            QuadElem eps(Gm1, Bm1, p == 2 ? 1 : 2, p);
            cpp_int n = norm(eps);
            if (n != -1)
                throw Error("fundamental_unit: norm " + n.str() + " for p = " +
                            std::to_string(p) + " (expected -1)");
            return eps;
        }
        Gm2 = Gm1;
        Gm1 = G;
        Bm2 = Bm1;
        Bm1 = B;
        P = Pn;
        Q = Qn;
    }
}

// --- class number -----------------------------------------------------------
//
// Reduced indefinite form (A, B, C) of discriminant D: 0 < B < sqrt(D) and
// sqrt(D) - 2|A| < B. All comparisons below are exact via squaring.

namespace {

struct Form {
    i64 A, B, C;
    auto operator<=>(const Form&) const = default;
};

bool lt_sqrt(i64 x, i64 D) {
    // x < sqrt(D), D not a square
    if (x < 0) return true;
    return x * x < D;
}

bool is_reduced(i64 A, i64 B, i64 D) {
    if (B <= 0 || !lt_sqrt(B, D)) return false;
    // |sqrt(D) - 2|A|| < B
    i64 tw = 2 * (A < 0 ? -A : A);
    if (!lt_sqrt(tw - B, D)) return false;  // 2|A| - B < sqrt(D)
    return (tw + B) * (tw + B) > D;         // sqrt(D) - 2|A| < B
}

Form rho(const Form& f, i64 D, i64 sD) {
    i64 c = f.C;
    i64 twoc = 2 * (c < 0 ? -c : c);
    i64 r = mod_floor(static_cast<i64>(-f.B), twoc);
    // b' ≡ -B (mod 2|C|) in the window (sD - 2|C|, sD]
    i64 b = sD - mod_floor(sD - r, twoc);
    i64 cn = (b * b - D) / (4 * c);
    return Form{c, b, cn};
}

}  // namespace

u64 class_number(u64 p) {
    check_admissible(p);
    const i64 D = (p == 2) ? 8 : static_cast<i64>(p);
    const i64 sD = static_cast<i64>(isqrt_u64(static_cast<u64>(D)));
    std::set<Form> reduced;
    for (i64 B = (D % 2 == 0) ? 2 : 1; B <= sD; B += 2) {
        i64 ac4 = B * B - D;
        if (ac4 % 4) continue;
        i64 ac = ac4 / 4;  // negative
        for (i64 A = 1; A * A <= -ac; ++A) {
            if (ac % A) continue;
            i64 C = ac / A;
            for (auto [a, c] : {std::pair<i64, i64>{A, C},
                                std::pair<i64, i64>{-A, -C},
                                std::pair<i64, i64>{C, A},
                                std::pair<i64, i64>{-C, -A}}) {
                if (is_reduced(a, B, D)) reduced.insert(Form{a, B, c});
            }
        }
    }
    // Count rho-orbits.
    std::set<Form> seen;
    u64 cycles = 0;
    for (const Form& f : reduced) {
        if (seen.count(f)) continue;
        ++cycles;
        Form g = f;
        do {
            assert(reduced.count(g));
            seen.insert(g);
            g = rho(g, D, sD);
        } while (!(g == f));
    }
    if (cycles % 2 == 0)
        throw Error("class_number: computed even h = " +
                    std::to_string(cycles) + " for p = " + std::to_string(p));
    return cycles;
}

// --- residue classes mod 4 --------------------------------------------------

const char* mod4_tag_name(Mod4Tag t) {
    switch (t) {
        case Mod4Tag::PLUS_ONE: return "PLUS_ONE";
        case Mod4Tag::MINUS_ONE: return "MINUS_ONE";
        case Mod4Tag::UNIT_SQUARE: return "UNIT_SQUARE";
        case Mod4Tag::MINUS_UNIT_SQUARE: return "MINUS_UNIT_SQUARE";
        case Mod4Tag::OTHER: return "OTHER";
    }
    return "?";
}

Mod4Class mod4_class(const QuadElem& x) {
    if (!is_integral(x)) throw NotIntegral("mod4_class: " + x.str());
    auto [c0, c1] = omega_coords(x);
    Mod4Class cls;
    cls.c0 = mod_floor(c0, cpp_int(4));
    cls.c1 = mod_floor(c1, cpp_int(4));
    if (x.p == 2) {
        // Basis {1, √2}: (1+√2)^2 = 3 + 2√2.
        if (cls.c0 == 1 && cls.c1 == 0) cls.tag = Mod4Tag::PLUS_ONE;
        else if (cls.c0 == 3 && cls.c1 == 0) cls.tag = Mod4Tag::MINUS_ONE;
        else if (cls.c0 == 3 && cls.c1 == 2) cls.tag = Mod4Tag::UNIT_SQUARE;
        else if (cls.c0 == 1 && cls.c1 == 2)
            cls.tag = Mod4Tag::MINUS_UNIT_SQUARE;
        else cls.tag = Mod4Tag::OTHER;
        return cls;
    }
    if (cls.c1 == 0 && cls.c0 == 1) cls.tag = Mod4Tag::PLUS_ONE;
    else if (cls.c1 == 0 && cls.c0 == 3) cls.tag = Mod4Tag::MINUS_ONE;
    else cls.tag = Mod4Tag::OTHER;
    return cls;
}

std::string quad_str(const QuadElem& x) {
    std::string root = "sqrt(" + std::to_string(x.p) + ")";
    std::string core;
    if (x.v == 0) core = x.u.str();
    else if (x.u == 0)
        core = (x.v == 1 ? root : (x.v == -1 ? "-" + root
                                             : x.v.str() + "*" + root));
    else {
        core = x.u.str();
        if (x.v > 0) core += "+";
        if (x.v == 1) core += root;
        else if (x.v == -1) core += "-" + root;
        else core += x.v.str() + "*" + root;
    }
    if (x.den == 2) return "(" + core + ")/2";
    return core;
}

}  // namespace genusq
