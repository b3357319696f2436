#include "genusq/hilbert.hpp"

#include <string>

#include "genusq/arith.hpp"
#include "genusq/decision_table.hpp"
#include "genusq/errors.hpp"

namespace genusq {

namespace {

// Classification of a split prime must agree along both routes: the quartic
// symbols and the class of alpha_j mod 4. For p odd with q_j = 3 mod 4 the
// symbol route compares (q_j/p)_4 against the Legendre classes of the
// q-primitive parts of (x_j, y_j). Split q_j = 7 mod 8 over p = 2 has no
// symbol route and is classified through unit twisting instead.
void dual_evaluation_check(const FieldContext& ctx) {
    for (int j = 1; j <= ctx.m; ++j) {
        const PrimeInfo& pi = ctx.at(j);
        const PellSolution& sol = *pi.pell;
        if (ctx.p == 2 && pi.q % 8 == 7) continue;

        Mod4Tag tag = pi.alpha_mod4;
        if (tag != Mod4Tag::PLUS_ONE && tag != Mod4Tag::MINUS_ONE)
            throw DualEvaluationMismatch(
                "alpha_" + std::to_string(j) + " = " + pi.alpha->str() +
                " is not +-1 mod 4 (class " + mod4_tag_name(tag) + ")");
        bool tag_plus = tag == Mod4Tag::PLUS_ONE;

        bool sym_plus;
        if (ctx.p == 2) {
            sym_plus = quartic_symbol_mod_p(2, pi.q) ==
                       quartic_symbol_mod_2(cpp_int(pi.q));
        } else if (pi.q % 4 == 1) {
            sym_plus = quartic_symbol_mod_p(cpp_int(ctx.p), pi.q) ==
                       quartic_symbol_mod_p(cpp_int(pi.q), ctx.p);
        } else {
            // The symbol route classifies the q-primitive part (x1, y1) of
            // the solution; alpha_j carries the full (x, y) = q^w (x1, y1),
            // and q^w = 3^w mod 4 flips the class when w is odd.
            cpp_int q(pi.q);
            int w = std::min(valp(sol.x, q), valp(sol.y, q));
            cpp_int x1 = sol.x / pow_int(q, w);
            cpp_int y1 = sol.y / pow_int(q, w);
            bool same_class = legendre(x1, pi.q) == legendre(y1, pi.q);
            int qp4 = quartic_symbol_mod_p(cpp_int(pi.q), ctx.p);
            sym_plus = same_class ? qp4 == 1 : qp4 == -1;
            if (w % 2 == 1) sym_plus = !sym_plus;
        }

        if (sym_plus != tag_plus)
            throw DualEvaluationMismatch(
                "split prime q_" + std::to_string(j) + " = " +
                std::to_string(pi.q) + ": symbol route says " +
                (sym_plus ? "+1" : "-1") + " but alpha_" + std::to_string(j) +
                " = " + pi.alpha->str() + " is " + (tag_plus ? "+1" : "-1") +
                " mod 4");
    }
}

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

// count = m, or m - 1 to omit the final split index.
void emit_alphas(const FieldContext& ctx, GeneratorSet& out, int count) {
    for (int j = 1; j <= count; ++j)
        out.radicands.push_back(Radicand::quad(*ctx.at(j).alpha));
}

void emit_alpha_star(const FieldContext& ctx, GeneratorSet& out) {
    for (int j = 1; j <= ctx.m; ++j) {
        if (j == *ctx.j0) continue;
        out.radicands.push_back(Radicand::quad(alpha_star(ctx, j)));
    }
}

void emit_betas(const FieldContext& ctx, GeneratorSet& out, int count) {
    for (int j = 1; j <= count; ++j) {
        BetaResult br = beta(ctx, j);
        out.radicands.push_back(Radicand::quad(br.value));
        if (br.twisted)
            out.trace.notes.push_back("beta_" + std::to_string(j) + " = " +
                                      std::to_string(ctx.at(*ctx.i0).q) +
                                      " * alpha_" + std::to_string(j));
        if (!br.note.empty())
            out.trace.notes.push_back("beta_" + std::to_string(j) + ": " +
                                      br.note);
    }
}

void emit_eps(const FieldContext& ctx, GeneratorSet& out) {
    out.radicands.push_back(Radicand::unit_monomial(1, 1, 0, ctx.p));
}

void emit_eps_sqrtp(const FieldContext& ctx, GeneratorSet& out) {
    out.radicands.push_back(Radicand::unit_monomial(1, 1, 1, ctx.p));
}

void emit_qi0_eps_sqrtp(const FieldContext& ctx, GeneratorSet& out) {
    out.radicands.push_back(
        Radicand::unit_monomial(ctx.at(*ctx.i0).q, 1, 1, ctx.p));
}

void note_eps_variant(GeneratorSet& out) {
    out.trace.notes.push_back(
        "variant_clause: an alternative derivation of this row also lists "
        "sqrt(eps)");
}

const std::vector<ClauseRow>& hilbert_rows() {
    using R = ClauseRow;
    using GS = GeneratorSet;
    using FC = FieldContext;
    static const std::vector<ClauseRow> rows = {
        // ---- p = 1 mod 8, a odd -------------------------------------
        R{"h1o_1a",
          {{"p_1_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", false},
           {"m_eq_0", true}},
          emit_all_q},
        R{"h1o_1b",
          {{"p_1_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", false},
           {"m_eq_0", false}, {"all_split_sym_eq", true}},
          [](const FC& c, GS& o) { emit_all_q(c, o); emit_alphas(c, o, c.m); }},
        R{"h1o_1c",
          {{"p_1_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", false},
           {"m_eq_0", false}, {"all_split_sym_eq", false}},
          [](const FC& c, GS& o) { emit_all_q(c, o); emit_alpha_star(c, o); }},
        R{"h1o_2a",
          {{"p_1_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}, {"m_eq_0", true}},
          emit_q_star},
        R{"h1o_2b",
          {{"p_1_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", true}, {"all_alpha_plus", true}},
          [](const FC& c, GS& o) { emit_q_star(c, o); emit_alphas(c, o, c.m); }},
        R{"h1o_2c",
          {{"p_1_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", true}, {"all_alpha_plus", false}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_alpha_star(c, o);
              emit_eps(c, o);
          }},
        R{"h1o_2d",
          {{"p_1_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", false}, {"all_alpha_plus", true}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_alphas(c, o, c.m - 1);
          }},
        R{"h1o_2e",
          {{"p_1_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", false}, {"all_alpha_plus", false}},
          [](const FC& c, GS& o) { emit_q_star(c, o); emit_alpha_star(c, o); }},
        R{"h1o_3a",
          {{"p_1_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", false}, {"m_eq_0", true}},
          emit_all_q},
        R{"h1o_3b",
          {{"p_1_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", false}, {"m_eq_0", false},
           {"all_alpha_plus", true}},
          [](const FC& c, GS& o) {
              emit_all_q(c, o);
              emit_alphas(c, o, c.m);
              note_eps_variant(o);
          }},
        R{"h1o_3c",
          {{"p_1_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", false}, {"m_eq_0", false},
           {"all_alpha_plus", false}},
          [](const FC& c, GS& o) {
              emit_all_q(c, o);
              emit_alpha_star(c, o);
              emit_eps(c, o);
              note_eps_variant(o);
          }},
        // ---- p = 1 mod 8, a even ------------------------------------
        R{"h1e_1a",
          {{"p_1_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", false},
           {"m_eq_0", true}, {"sym2_eq", true}},
          [](const FC& c, GS& o) {
              emit_sqrt2(c, o);
              emit_all_q(c, o);
              emit_eps(c, o);
          }},
        R{"h1e_1b",
          {{"p_1_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", false},
           {"m_eq_0", true}, {"sym2_eq", false}},
          [](const FC& c, GS& o) { emit_sqrt2(c, o); emit_all_q(c, o); }},
        R{"h1e_1c",
          {{"p_1_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", false},
           {"m_eq_0", false}, {"all_split_sym_eq", true}, {"sym2_eq", true}},
          [](const FC& c, GS& o) {
              emit_sqrt2(c, o);
              emit_all_q(c, o);
              emit_alphas(c, o, c.m);
              emit_eps(c, o);
          }},
        R{"h1e_1d",
          {{"p_1_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", false},
           {"m_eq_0", false}, {"all_split_sym_eq", true}, {"sym2_eq", false}},
          [](const FC& c, GS& o) {
              emit_sqrt2(c, o);
              emit_all_q(c, o);
              emit_alphas(c, o, c.m);
          }},
        R{"h1e_1e",
          {{"p_1_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", false},
           {"m_eq_0", false}, {"all_split_sym_eq", false}},
          [](const FC& c, GS& o) {
              emit_sqrt2(c, o);
              emit_all_q(c, o);
              emit_alpha_star(c, o);
              emit_eps(c, o);
          }},
        R{"h1e_2a",
          {{"p_1_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}, {"m_eq_0", true}},
          [](const FC& c, GS& o) {
              emit_sqrt2(c, o);
              emit_q_star(c, o);
              emit_eps(c, o);
          }},
        R{"h1e_2b",
          {{"p_1_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", true}, {"all_alpha_plus", true}},
          [](const FC& c, GS& o) {
              emit_sqrt2(c, o);
              emit_q_star(c, o);
              emit_alphas(c, o, c.m);
              emit_eps(c, o);
          }},
        R{"h1e_2c",
          {{"p_1_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", true}, {"all_alpha_plus", false}},
          [](const FC& c, GS& o) {
              emit_sqrt2(c, o);
              emit_q_star(c, o);
              emit_betas(c, o, c.m);
              emit_eps(c, o);
          }},
        R{"h1e_2d",
          {{"p_1_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", false}, {"all_alpha_plus", true}},
          // All m split solutions enter: with every alpha_j = +1 mod 4 there
          // is no j0 to omit, and the unit-norm index pins the generator
          // count at n + m for this shape.
          [](const FC& c, GS& o) {
              emit_sqrt2(c, o);
              emit_q_star(c, o);
              emit_alphas(c, o, c.m);
          }},
        R{"h1e_2e",
          {{"p_1_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", false}, {"all_alpha_plus", false}},
          [](const FC& c, GS& o) {
              emit_sqrt2(c, o);
              emit_q_star(c, o);
              emit_alpha_star(c, o);
              emit_eps(c, o);
          }},
        R{"h1e_3a",
          {{"p_1_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", false}, {"m_eq_0", true}},
          [](const FC& c, GS& o) { emit_q_star(c, o); emit_eps_sqrtp(c, o); }},
        R{"h1e_3b",
          {{"p_1_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", false}, {"m_eq_0", false},
           {"all_alpha_plus", true}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_alphas(c, o, c.m);
              emit_eps_sqrtp(c, o);
          }},
        R{"h1e_3c",
          {{"p_1_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", false}, {"m_eq_0", false},
           {"all_alpha_plus", false}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_alpha_star(c, o);
              emit_eps(c, o);
              emit_eps_sqrtp(c, o);
          }},
        // ---- p = 5 mod 8, a odd -------------------------------------
        R{"h5o_1a",
          {{"p_5_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", false},
           {"m_eq_0", true}},
          emit_all_q},
        R{"h5o_1b",
          {{"p_5_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", false},
           {"m_eq_0", false}, {"all_split_sym_eq", true}},
          [](const FC& c, GS& o) { emit_all_q(c, o); emit_alphas(c, o, c.m); }},
        R{"h5o_1c",
          {{"p_5_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", false},
           {"m_eq_0", false}, {"all_split_sym_eq", false}},
          [](const FC& c, GS& o) {
              emit_all_q(c, o);
              emit_alpha_star(c, o);
              emit_eps(c, o);
          }},
        R{"h5o_2a",
          {{"p_5_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}, {"m_eq_0", true}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_qi0_eps_sqrtp(c, o);
          }},
        R{"h5o_2b",
          {{"p_5_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", true}, {"all_alpha_plus", true}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_alphas(c, o, c.m);
              emit_qi0_eps_sqrtp(c, o);
          }},
        R{"h5o_2c",
          {{"p_5_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", true}, {"all_alpha_plus", false}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_alpha_star(c, o);
              emit_eps(c, o);
              emit_qi0_eps_sqrtp(c, o);
          }},
        R{"h5o_2d",
          {{"p_5_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", false}, {"all_alpha_plus", true}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_alphas(c, o, c.m - 1);
              emit_qi0_eps_sqrtp(c, o);
          }},
        R{"h5o_2e",
          {{"p_5_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", true}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", false}, {"all_alpha_plus", false}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_alpha_star(c, o);
              emit_qi0_eps_sqrtp(c, o);
          }},
        R{"h5o_3a",
          {{"p_5_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", false}, {"m_eq_0", true}},
          emit_q_star},
        R{"h5o_3b",
          {{"p_5_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", false}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", true}, {"all_alpha_plus", true}},
          [](const FC& c, GS& o) { emit_q_star(c, o); emit_alphas(c, o, c.m); }},
        R{"h5o_3c",
          {{"p_5_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", false}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", true}, {"all_alpha_plus", false}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_alpha_star(c, o);
              emit_eps(c, o);
          }},
        R{"h5o_3d",
          {{"p_5_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", false}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", false}, {"all_alpha_plus", true}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_alphas(c, o, c.m - 1);
          }},
        R{"h5o_3e",
          {{"p_5_mod_8", true}, {"a_even", false}, {"exists_q_3_mod_4", true},
           {"a_tilde_1_mod_4", false}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", false}, {"all_alpha_plus", false}},
          [](const FC& c, GS& o) { emit_q_star(c, o); emit_alpha_star(c, o); }},
        // ---- p = 5 mod 8, a even ------------------------------------
        R{"h5e_1a",
          {{"p_5_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", false},
           {"m_eq_0", true}},
          emit_all_q},
        R{"h5e_1b",
          {{"p_5_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", false},
           {"m_eq_0", false}, {"all_split_sym_eq", true}},
          [](const FC& c, GS& o) { emit_all_q(c, o); emit_alphas(c, o, c.m); }},
        R{"h5e_1c",
          {{"p_5_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", false},
           {"m_eq_0", false}, {"all_split_sym_eq", false}},
          [](const FC& c, GS& o) {
              emit_all_q(c, o);
              emit_alpha_star(c, o);
              emit_eps(c, o);
          }},
        // Both residue classes of the odd part produce the same sets here,
        // so one block covers what would otherwise be two.
        R{"h5e_2a",
          {{"p_5_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", true},
           {"m_eq_0", true}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_qi0_eps_sqrtp(c, o);
          }},
        R{"h5e_2b",
          {{"p_5_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", true},
           {"m_eq_0", false}, {"all_split_q_1_mod_4", true},
           {"all_alpha_plus", true}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_alphas(c, o, c.m);
              emit_qi0_eps_sqrtp(c, o);
          }},
        R{"h5e_2c",
          {{"p_5_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", true},
           {"m_eq_0", false}, {"all_split_q_1_mod_4", true},
           {"all_alpha_plus", false}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_alpha_star(c, o);
              emit_eps(c, o);
              emit_qi0_eps_sqrtp(c, o);
          }},
        R{"h5e_2d",
          {{"p_5_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", true},
           {"m_eq_0", false}, {"all_split_q_1_mod_4", false},
           {"all_alpha_plus", true}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_alphas(c, o, c.m - 1);
              emit_qi0_eps_sqrtp(c, o);
          }},
        R{"h5e_2e",
          {{"p_5_mod_8", true}, {"a_even", true}, {"exists_q_3_mod_4", true},
           {"m_eq_0", false}, {"all_split_q_1_mod_4", false},
           {"all_alpha_plus", false}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_alpha_star(c, o);
              emit_qi0_eps_sqrtp(c, o);
          }},
        // ---- p = 2 ---------------------------------------------------
        R{"h2_1a",
          {{"p_eq_2", true}, {"exists_q_3_mod_4", false}, {"m_eq_0", true}},
          emit_all_q},
        R{"h2_1b",
          {{"p_eq_2", true}, {"exists_q_3_mod_4", false}, {"m_eq_0", false},
           {"all_split_sym_eq", true}},
          [](const FC& c, GS& o) { emit_all_q(c, o); emit_alphas(c, o, c.m); }},
        R{"h2_1c",
          {{"p_eq_2", true}, {"exists_q_3_mod_4", false}, {"m_eq_0", false},
           {"all_split_sym_eq", false}},
          [](const FC& c, GS& o) { emit_all_q(c, o); emit_alpha_star(c, o); }},
        R{"h2_2a",
          {{"p_eq_2", true}, {"exists_q_3_mod_4", true}, {"m_eq_0", true}},
          emit_q_star},
        R{"h2_2b",
          {{"p_eq_2", true}, {"exists_q_3_mod_4", true}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", true}, {"all_split_sym_eq", true}},
          [](const FC& c, GS& o) { emit_q_star(c, o); emit_alphas(c, o, c.m); }},
        R{"h2_2c",
          {{"p_eq_2", true}, {"exists_q_3_mod_4", true}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", true}, {"all_split_sym_eq", false}},
          [](const FC& c, GS& o) { emit_q_star(c, o); emit_betas(c, o, c.m); }},
        R{"h2_2d",
          {{"p_eq_2", true}, {"exists_q_3_mod_4", true}, {"m_eq_0", false},
           {"all_split_q_1_mod_4", false}},
          [](const FC& c, GS& o) {
              emit_q_star(c, o);
              emit_betas(c, o, c.m - 1);
          }},
    };
    return rows;
}

}  // namespace

GeneratorSet hilbert_genus_field(const FieldContext& ctx) {
    dual_evaluation_check(ctx);
    GeneratorSet out = run_decision_table(ctx, hilbert_rows(), field_predicates());
    if (out.radicands.empty()) out.trace.notes.push_back("E(K) = K");
    return out;
}

int rank(const GeneratorSet& gens) {
    return static_cast<int>(gens.radicands.size());
}

}  // namespace genusq
