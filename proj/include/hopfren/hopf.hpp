#pragma once

// Hopf structure on the word algebra: unit, counit, coproduct, antipode and
// checks of the bialgebra / Hopf axioms.

#include "hopfren/algebra.hpp"

#include <unordered_map>

namespace hopfren {

Rational counit(const LinComb& a);
LinComb unit(const Rational& q);

/// B_x: graft every word of `a` under a new root `letter`.
LinComb graft(const LinComb& a, const Letter& letter);

/// P = (id - E∘counit) (x) id: drop terms whose first slot is e.
Tensor2 project_left(const Tensor2& t);
/// P_2 = P_1 (x) P_1: drop terms with e in either slot.
Tensor2 project_both(const Tensor2& t);

/// Owns the memo tables for the coproduct and antipodes; results do not depend
/// on whether memoization is enabled. Not thread-safe, use one per thread.
class HopfContext {
public:
    explicit HopfContext(bool memoize = true) : memoize_(memoize) {}

    /// Recursive route: Δ[(Xx)] = (Xx)⊗e + e⊗(Xx) + (id⊗B_x) P Δ[X], Δ[XY] = Δ[X]Δ[Y].
    Tensor2 coproduct(const Word& w);
    Tensor2 coproduct(const LinComb& a);

    /// Combinatorial route: sum over subwords of multiplicity · U ⊗ w/U.
    Tensor2 coproduct_sweedler(const Word& w) const;

    /// S[(Xx)] = -(Xx) - m (S⊗id) P_2 Δ[(Xx)]
    LinComb antipode_left(const Word& w);
    /// S[(Xx)] = -(Xx) - m (id⊗S) P_2 Δ[(Xx)]
    LinComb antipode_right(const Word& w);
    LinComb antipode_left(const LinComb& a);
    LinComb antipode_right(const LinComb& a);

    /// (Δ⊗id)Δ and (id⊗Δ)Δ.
    Tensor3 coproduct_left_iterated(const Word& w);
    Tensor3 coproduct_right_iterated(const Word& w);

    bool hopf_axiom_check(const Word& w);
    bool coassociativity_check(const Word& w);
    bool counit_axiom_check(const Word& w);

    [[nodiscard]] bool memoizing() const { return memoize_; }

private:
    LinComb antipode(const Word& w, bool left);

    bool memoize_;
    std::unordered_map<Word, Tensor2, WordHash> coproduct_memo_;
    std::unordered_map<Word, LinComb, WordHash> left_memo_;
    std::unordered_map<Word, LinComb, WordHash> right_memo_;
};

/// Sweedler-route coproduct as a free function (no context needed).
Tensor2 coproduct_sweedler(const Word& w);

}  // namespace hopfren
