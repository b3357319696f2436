#pragma once

#include <string>

#include "genusq/int_types.hpp"

namespace genusq {

// Element (u + v*sqrt(p))/den of Q(sqrt(p)), den in {1, 2}.
// den = 2 requires u ≡ v (mod 2) with u, v odd (membership in Z[(1+√p)/2]),
// which exists only for p ≡ 1 (mod 4).
struct QuadElem {
    cpp_int u;
    cpp_int v;
    int den = 1;
    u64 p = 0;

    QuadElem() = default;
    QuadElem(cpp_int u_, cpp_int v_, int den_, u64 p_);
    static QuadElem integer(cpp_int n, u64 p) {
        return QuadElem(std::move(n), 0, 1, p);
    }

    bool operator==(const QuadElem& o) const = default;
    bool is_zero() const { return u == 0 && v == 0; }
    std::string str() const;
};

QuadElem quad_mul(const QuadElem& x, const QuadElem& y);
QuadElem quad_conj(const QuadElem& x);
QuadElem quad_neg(const QuadElem& x);
QuadElem quad_scale(const cpp_int& n, const QuadElem& x);

// Field norm u^2 - p*v^2 over den^2; always an integer for maximal-order
// elements, asserted.
cpp_int norm(const QuadElem& x);

// Trace-free exactness helper: true if x = (u+v√p)/den has den | both coords
// after reduction, i.e. x lies in the maximal order.
bool is_integral(const QuadElem& x);

// Coordinates of an integral x in the integral basis {1, w}, where
// w = (1+√p)/2 for p ≡ 1 (mod 4) and w = √2 for p = 2.
std::pair<cpp_int, cpp_int> omega_coords(const QuadElem& x);

// Fundamental unit > 1 of the maximal order, continued-fraction expansion.
// Norm is -1 for every admissible p here; asserted.
QuadElem fundamental_unit(u64 p);

// Class number of Q(sqrt(p)) by counting rho-cycles of reduced indefinite
// forms of the field discriminant; equals the narrow class number since the
// fundamental unit has norm -1. Asserted odd.
u64 class_number(u64 p);

enum class Mod4Tag {
    PLUS_ONE,
    MINUS_ONE,
    UNIT_SQUARE,        // ≡ (1+√2)^2 mod 4, p = 2 only
    MINUS_UNIT_SQUARE,  // ≡ -(1+√2)^2 mod 4, p = 2 only
    OTHER,
};

struct Mod4Class {
    Mod4Tag tag = Mod4Tag::OTHER;
    // Canonical coordinates of the class in (maximal order)/4 on the
    // integral basis {1, w}.
    cpp_int c0;
    cpp_int c1;
};

const char* mod4_tag_name(Mod4Tag t);

// Class of an integral element in (maximal order)/4.
Mod4Class mod4_class(const QuadElem& x);

std::string quad_str(const QuadElem& x);

}  // namespace genusq
