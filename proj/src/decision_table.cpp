#include "genusq/decision_table.hpp"

#include <algorithm>

#include "genusq/arith.hpp"
#include "genusq/errors.hpp"

namespace genusq {

const PredicateMap& field_predicates() {
    static const PredicateMap preds = {
        {"p_eq_2", [](const FieldContext& c) { return c.p == 2; }},
        {"p_1_mod_8", [](const FieldContext& c) { return c.p % 8 == 1; }},
        {"p_5_mod_8", [](const FieldContext& c) { return c.p % 8 == 5; }},
        {"a_even", [](const FieldContext& c) { return c.a_even; }},
        {"exists_q_3_mod_4",
         [](const FieldContext& c) {
             return std::any_of(
                 c.primes.begin(), c.primes.end(),
                 [](const PrimeInfo& pi) { return pi.q % 4 == 3; });
         }},
        {"a_tilde_1_mod_4",
         [](const FieldContext& c) { return c.a_odd % 4 == 1; }},
        {"m_eq_0", [](const FieldContext& c) { return c.m == 0; }},
        {"all_split_q_1_mod_4",
         [](const FieldContext& c) {
             for (int j = 1; j <= c.m; ++j)
                 if (c.at(j).q % 4 == 3) return false;
             return true;
         }},
        {"all_alpha_plus",
         [](const FieldContext& c) {
             for (int j = 1; j <= c.m; ++j)
                 if (c.at(j).alpha_mod4 != Mod4Tag::PLUS_ONE) return false;
             return true;
         }},
        // (p/q_j)_4 = (q_j/p)_4 for every split q_j; for p = 2 this reads
        // (2/q_j)_4 = (q_j/2)_4. Evaluated only behind guards that make the
        // symbols defined (split q_j = 1 mod 4, hence q_j = 1 mod 8 when
        // p = 2).
        {"all_split_sym_eq",
         [](const FieldContext& c) {
             for (int j = 1; j <= c.m; ++j) {
                 u64 q = c.at(j).q;
                 int lhs, rhs;
                 if (c.p == 2) {
                     lhs = quartic_symbol_mod_p(2, q);
                     rhs = quartic_symbol_mod_2(cpp_int(q));
                 } else {
                     lhs = quartic_symbol_mod_p(cpp_int(c.p), q);
                     rhs = quartic_symbol_mod_p(cpp_int(q), c.p);
                 }
                 if (lhs != rhs) return false;
             }
             return true;
         }},
        // (2/p)_4 = (p/2)_4, defined for p = 1 mod 8.
        {"sym2_eq",
         [](const FieldContext& c) {
             return quartic_symbol_mod_p(2, c.p) ==
                    quartic_symbol_mod_2(cpp_int(c.p));
         }},
    };
    return preds;
}

GeneratorSet run_decision_table(const FieldContext& ctx,
                                const std::vector<ClauseRow>& rows,
                                const PredicateMap& preds) {
    // satisfied-condition counts for the UnhandledCase diagnostic
    std::vector<std::pair<int, const ClauseRow*>> near;
    near.reserve(rows.size());

    for (const auto& row : rows) {
        bool all = true;
        int hit = 0;
        for (const auto& [name, want] : row.when) {
            if (preds.at(name)(ctx) != want) {
                all = false;
                break;
            }
            ++hit;
        }
        if (!all) {
            near.emplace_back(hit, &row);
            continue;
        }

        GeneratorSet out;
        out.trace.clause = row.id;
        out.trace.conditions = row.when;
        for (int j = 1; j <= ctx.m; ++j) {
            const auto& s = *ctx.at(j).pell;
            out.trace.chosen_pell.emplace_back(s.q, std::make_pair(s.x, s.y));
        }
        row.emit(ctx, out);

        for (std::size_t i = 0; i < out.radicands.size(); ++i) {
            if (out.radicands[i].is_one())
                throw Error("row " + row.id + " emitted the generator 1");
            for (std::size_t k = i + 1; k < out.radicands.size(); ++k)
                if (out.radicands[i] == out.radicands[k])
                    throw Error("row " + row.id + " emitted duplicate generator " +
                                out.radicands[i].str());
        }
        return out;
    }

    std::stable_sort(near.begin(), near.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::string msg = "no decision-table row matches p=" + std::to_string(ctx.p) +
                      " a=" + std::to_string(ctx.a) + "; closest rows:";
    for (std::size_t i = 0; i < near.size() && i < 3; ++i) {
        const ClauseRow& row = *near[i].second;
        msg += " " + row.id + " (" + std::to_string(near[i].first) + "/" +
               std::to_string(row.when.size()) + ")";
    }
    throw UnhandledCase(msg);
}

}  // namespace genusq
