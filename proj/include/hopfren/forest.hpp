#pragma once

#include "hopfren/regvalue.hpp"
#include "hopfren/toymodel.hpp"
#include "hopfren/word.hpp"

namespace hopfren {

/// Counter term of an irreducible word from the BPHZ recursion over forests:
///
///   Γ̄ = φ(Γ) + Σ_γ Π_{g∈γ} Z_g · φ(Γ/γ),   Z_Γ = -R[Γ̄]
///
/// where γ runs over the nonempty proper forests (sets of pairwise disjoint
/// subtrees not containing the root). Forests are enumerated from node
/// positions directly; neither the coproduct nor the antipode is used.
/// Throws NotIrreducible for reducible words.
RegValue forest_formula(const Word& w, Scheme scheme = Scheme::ScaleSubtraction);

/// Number of nonempty proper forests of an irreducible word, counting
/// node selections (so repeated subtrees count separately).
std::size_t count_proper_forests(const IrreducibleWord& w);

}  // namespace hopfren
