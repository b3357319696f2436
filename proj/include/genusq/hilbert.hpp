#pragma once

#include "genusq/field_model.hpp"
#include "genusq/genus.hpp"

namespace genusq {

// Generators of the Hilbert genus field E(K) over K: the maximal unramified
// (at all finite places) extension of K obtained by adjoining square roots
// of elements of k0. An empty radicand list means E(K) = K.
//
// Before dispatching, every split prime's classification is cross-checked
// through both available routes (quartic symbols and the class of alpha_j
// mod 4); a disagreement throws DualEvaluationMismatch.
GeneratorSet hilbert_genus_field(const FieldContext& ctx);

// rank_2 Gal(E(K)/K) as produced by the construction: the number of adjoined
// generators. Cross-checked elsewhere against t - e - 1.
int rank(const GeneratorSet& gens);

}  // namespace genusq
