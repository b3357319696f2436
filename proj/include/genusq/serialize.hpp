#pragma once

#include <string>
#include <vector>

#include "genusq/field_model.hpp"
#include "genusq/genus.hpp"
#include "genusq/hilbert.hpp"
#include "genusq/verify.hpp"

namespace genusq {

// Verification outcome for one adjoined square root. sqrt(2) (p = 1 mod 8,
// a even) is not an odd radicand; the two-clause criterion does not apply to
// it and the construction itself accounts for the dyadic generator, so it is
// reported as not applicable rather than pass/fail.
struct RadicandCheck {
    Radicand r;
    bool applicable = true;
    UnramifiedReport report;
    std::string note;
    bool ok() const { return applicable ? report.ok() : true; }
};

// Everything a single-field query produces: the context, both generator
// sets, the narrow product, and the verification verdicts.
struct ComputeResult {
    FieldContext ctx;
    DiscriminantInfo disc;
    GeneratorSet genus;
    GeneratorSet narrow;
    GeneratorSet hilbert;
    std::vector<RadicandCheck> unramified;
    bool independent = false;
    RankCheck rank_check;
    bool genus_in_hilbert = false;
    bool narrow_span_ok = false;

    bool all_ok() const;
};

ComputeResult compute_all(u64 p, u64 a);

// "sqrt(13)", "sqrt(-3)", "sqrt(9+2*sqrt(17))", "sqrt(11*eps*sqrt(5))".
std::string radicand_display(const Radicand& r);

// Human-readable report; the final line is "E(K) = K(...)" or "E(K) = K".
std::string render_text(const ComputeResult& r);

// Machine-readable document. Stable key order, no floating point; unbounded
// integers are decimal strings, structural counts and flags are plain JSON
// scalars. Parsing and re-rendering is byte-identical.
std::string render_json(const ComputeResult& r);

}  // namespace genusq
