#include "genusq/genus.hpp"

#include <algorithm>

#include "genusq/arith.hpp"
#include "genusq/decision_table.hpp"
#include "genusq/errors.hpp"

namespace genusq {

Radicand Radicand::rational(cpp_int r, u64 p, int sign) {
    Radicand rad;
    rad.kind = Kind::Rational;
    rad.sign = sign;
    rad.value = std::move(r);
    rad.p = p;
    return rad;
}

Radicand Radicand::quad(QuadElem a) {
    Radicand rad;
    rad.kind = Kind::QuadInt;
    rad.p = a.p;
    rad.alpha = std::move(a);
    return rad;
}

Radicand Radicand::unit_monomial(u64 c, int s, int t, u64 p, int sign) {
    Radicand rad;
    rad.kind = Kind::UnitMonomial;
    rad.sign = sign;
    rad.coeff = c;
    rad.eps_exp = s;
    rad.sqrtp_exp = t;
    rad.p = p;
    return rad;
}

bool Radicand::is_one() const {
    switch (kind) {
        case Kind::Rational:
            return sign == 1 && value == 1;
        case Kind::QuadInt:
            return alpha == QuadElem::integer(1, alpha.p);
        case Kind::UnitMonomial:
            return sign == 1 && coeff == 1 && eps_exp == 0 && sqrtp_exp == 0;
    }
    return false;
}

std::string Radicand::str() const {
    switch (kind) {
        case Kind::Rational:
            return (sign < 0 ? "-" : "") + value.str();
        case Kind::QuadInt:
            return quad_str(alpha);
        case Kind::UnitMonomial: {
            std::string out = sign < 0 ? "-" : "";
            bool lead = true;
            if (coeff != 1) {
                out += std::to_string(coeff);
                lead = false;
            }
            for (int i = 0; i < eps_exp; ++i) {
                if (!lead) out += "*";
                out += "eps";
                lead = false;
            }
            for (int i = 0; i < sqrtp_exp; ++i) {
                if (!lead) out += "*";
                out += "sqrt(" + std::to_string(p) + ")";
                lead = false;
            }
            if (lead) out += "1";
            return out;
        }
    }
    return "?";
}

QuadElem radicand_element(const Radicand& r, const QuadElem& eps) {
    switch (r.kind) {
        case Radicand::Kind::Rational:
            return QuadElem::integer(cpp_int(r.sign) * r.value, r.p);
        case Radicand::Kind::QuadInt:
            return r.sign < 0 ? quad_neg(r.alpha) : r.alpha;
        case Radicand::Kind::UnitMonomial: {
            if (r.eps_exp > 0 && eps.p != r.p)
                throw MixedField("unit monomial needs the fundamental unit of Q(sqrt " +
                                 std::to_string(r.p) + ")");
            QuadElem out = QuadElem::integer(cpp_int(r.sign) * r.coeff, r.p);
            for (int i = 0; i < r.eps_exp; ++i) out = quad_mul(out, eps);
            for (int i = 0; i < r.sqrtp_exp; ++i)
                out = quad_mul(out, QuadElem(0, 1, 1, r.p));
            return out;
        }
    }
    throw Error("unreachable radicand kind");
}

namespace {

void emit_all_q(const FieldContext& ctx, GeneratorSet& out) {
    for (int i = 1; i <= ctx.n; ++i)
        out.radicands.push_back(Radicand::rational(ctx.at(i).q, ctx.p));
}

void emit_q_star(const FieldContext& ctx, GeneratorSet& out) {
    for (int i = 1; i <= ctx.n; ++i) {
        if (i == *ctx.i0) continue;
        out.radicands.push_back(Radicand::rational(q_star(ctx, i), ctx.p));
    }
}

void emit_sqrt2(const FieldContext& ctx, GeneratorSet& out) {
    out.radicands.push_back(Radicand::rational(2, ctx.p));
}

void emit_eps_sqrtp(const FieldContext& ctx, GeneratorSet& out) {
    out.radicands.push_back(Radicand::unit_monomial(1, 1, 1, ctx.p));
}

void emit_qi0_eps_sqrtp(const FieldContext& ctx, GeneratorSet& out) {
    out.radicands.push_back(
        Radicand::unit_monomial(ctx.at(*ctx.i0).q, 1, 1, ctx.p));
}

const std::vector<ClauseRow>& genus_rows() {
    using R = ClauseRow;
    static const std::vector<ClauseRow> rows = {
        R{"g1",
          {{"p_1_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", false}},
          emit_all_q},
        R{"g2",
          {{"p_1_mod_8", true},
           {"a_even", false},
           {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}},
          emit_q_star},
        R{"g3",
          {{"p_1_mod_8", true},
           {"a_even", false},
           {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", false}},
          emit_all_q},
        R{"g4",
          {{"p_1_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", false}},
          [](const FieldContext& ctx, GeneratorSet& out) {
              emit_sqrt2(ctx, out);
              emit_all_q(ctx, out);
          }},
        R{"g5",
          {{"p_1_mod_8", true},
           {"a_even", true},
           {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}},
          [](const FieldContext& ctx, GeneratorSet& out) {
              emit_sqrt2(ctx, out);
              emit_q_star(ctx, out);
          }},
        R{"g6",
          {{"p_1_mod_8", true},
           {"a_even", true},
           {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", false}},
          [](const FieldContext& ctx, GeneratorSet& out) {
              emit_q_star(ctx, out);
              emit_eps_sqrtp(ctx, out);
          }},
        R{"g7",
          {{"p_5_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", false}},
          emit_all_q},
        R{"g8",
          {{"p_5_mod_8", true},
           {"a_even", false},
           {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}},
          [](const FieldContext& ctx, GeneratorSet& out) {
              emit_q_star(ctx, out);
              emit_qi0_eps_sqrtp(ctx, out);
          }},
        R{"g9",
          {{"p_5_mod_8", true},
           {"a_even", false},
           {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", false}},
          emit_q_star},
        R{"g10",
          {{"p_5_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", false}},
          emit_all_q},
        // For p = 5 mod 8 and a even the two residue classes of the odd part
        // produce the same generator set, so one row covers both.
        R{"g11",
          {{"p_5_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", true}},
          [](const FieldContext& ctx, GeneratorSet& out) {
              emit_q_star(ctx, out);
              emit_qi0_eps_sqrtp(ctx, out);
          }},
        R{"g13", {{"p_eq_2", true}, {"exists_q_3_mod_4", false}}, emit_all_q},
        R{"g14", {{"p_eq_2", true}, {"exists_q_3_mod_4", true}}, emit_q_star},
    };
    return rows;
}

}  // namespace

GeneratorSet genus_field(const FieldContext& ctx) {
    return run_decision_table(ctx, genus_rows(), field_predicates());
}

GeneratorSet narrow_genus_product(const FieldContext& ctx) {
    GeneratorSet out;
    out.trace.clause = "narrow_product";

    std::vector<u64> qs;
    for (const auto& pi : ctx.primes) qs.push_back(pi.q);
    std::sort(qs.begin(), qs.end());
    for (u64 q : qs)
        out.radicands.push_back(
            Radicand::rational(q, ctx.p, q % 4 == 1 ? 1 : -1));

    if (ctx.p != 2) {
        // Quartic factor (2|p) * eps * sqrt(p); negative for p = 5 mod 8,
        // matching the imaginary quartic subfield of the p-th cyclotomic
        // field.
        int sign = legendre(cpp_int(2), ctx.p);
        out.radicands.push_back(Radicand::unit_monomial(1, 1, 1, ctx.p, sign));
    } else {
        out.trace.notes.push_back(
            "p=2: the dyadic cyclotomic factor is excluded from the product");
    }
    return out;
}

}  // namespace genusq
