#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "genusq/field_model.hpp"
#include "genusq/genus.hpp"

namespace genusq {

using Predicate = std::function<bool(const FieldContext&)>;
using PredicateMap = std::map<std::string, Predicate>;

// One row of an ordered decision table. Conditions are evaluated left to
// right with short-circuiting, so a row may guard a partially defined
// predicate (e.g. a quartic symbol) behind the conditions that make it
// well defined.
struct ClauseRow {
    std::string id;
    std::vector<std::pair<std::string, bool>> when;
    std::function<void(const FieldContext&, GeneratorSet&)> emit;
};

// First matching row wins. The returned trace lists the fired row's full
// condition vector and the minimal norm-equation solution for every split
// prime. Throws UnhandledCase naming the closest rows when nothing fires,
// and Error if a row emits a duplicate generator or the generator 1.
GeneratorSet run_decision_table(const FieldContext& ctx,
                                const std::vector<ClauseRow>& rows,
                                const PredicateMap& preds);

// Predicate vocabulary shared by the genus and Hilbert tables. Names appear
// verbatim in CaseTrace.conditions:
//   p_eq_2, p_1_mod_8, p_5_mod_8, a_even, exists_q_3_mod_4, a_tilde_1_mod_4,
//   m_eq_0, all_split_q_1_mod_4, all_alpha_plus, all_split_sym_eq, sym2_eq.
// The quartic-symbol predicates are partial and must stay guarded by the
// conditions that make them defined.
const PredicateMap& field_predicates();

}  // namespace genusq
