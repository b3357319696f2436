#pragma once

#include <string>
#include <utility>
#include <vector>

#include "genusq/field_model.hpp"
#include "genusq/quadfield.hpp"

namespace genusq {

// One square-root generator adjoined to K. Three shapes cover everything the
// construction produces:
//   Rational      sqrt(r) for a squarefree rational integer r,
//   QuadInt       sqrt(alpha) for a quadratic integer alpha of k0 = Q(sqrt p),
//   UnitMonomial  sqrt(c * eps^s * sqrt(p)^t) with c a positive rational
//                 integer and eps the fundamental unit of k0.
// sign = -1 occurs only among narrow-product factors (e.g. sqrt(-3)).
struct Radicand {
    enum class Kind { Rational, QuadInt, UnitMonomial };

    Kind kind = Kind::Rational;
    int sign = 1;
    cpp_int value;                // Kind::Rational
    QuadElem alpha;               // Kind::QuadInt
    u64 coeff = 1;                // Kind::UnitMonomial: c
    int eps_exp = 0;              //                     s
    int sqrtp_exp = 0;            //                     t (s + t >= 1)
    u64 p = 0;

    static Radicand rational(cpp_int r, u64 p, int sign = 1);
    static Radicand quad(QuadElem a);
    static Radicand unit_monomial(u64 c, int s, int t, u64 p, int sign = 1);

    bool operator==(const Radicand& o) const = default;
    bool is_one() const;
    // Inner value only, e.g. "13", "-3", "9+2*sqrt(17)", "11*eps*sqrt(5)".
    std::string str() const;
};

// The radicand as an element of k0. eps must be the fundamental unit of the
// same field whenever eps_exp > 0.
QuadElem radicand_element(const Radicand& r, const QuadElem& eps);

// Audit record of one decision-table dispatch: which row fired, every
// condition the row required, the norm-equation solutions backing the split
// primes, and free-form notes (unit twists, clause caveats).
struct CaseTrace {
    std::string clause;
    std::vector<std::pair<std::string, bool>> conditions;
    std::vector<std::pair<u64, std::pair<cpp_int, cpp_int>>> chosen_pell;
    std::vector<std::string> notes;
};

struct GeneratorSet {
    std::vector<Radicand> radicands;
    CaseTrace trace;
};

// Generators of the genus field K^(*) over K (unramified everywhere,
// including the infinite places).
GeneratorSet genus_field(const FieldContext& ctx);

// Factors of the narrow genus field K_(*) over K: one signed rational per odd
// prime q | a (q when q = 1 mod 4, -q otherwise) plus, for odd p, the signed
// quartic factor (2|p) * eps * sqrt(p). For p = 2 the dyadic cyclotomic
// factor is excluded from the product and nothing replaces it.
GeneratorSet narrow_genus_product(const FieldContext& ctx);

}  // namespace genusq
