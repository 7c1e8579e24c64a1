#include "hopfren/hopf.hpp"

namespace hopfren {

Rational counit(const LinComb& a) { return a.coefficient(Word::unit()); }

LinComb unit(const Rational& q) { return LinComb(Word::unit(), q); }

LinComb graft(const LinComb& a, const Letter& letter) {
    LinComb out;
    for (const auto& [w, q] : a) out.add_term(Word(graft(w, letter)), q);
    return out;
}

Tensor2 project_left(const Tensor2& t) {
    Tensor2 out;
    for (const auto& [uv, q] : t)
        if (!uv.first.is_unit()) out.add_term(uv, q);
    return out;
}

Tensor2 project_both(const Tensor2& t) {
    Tensor2 out;
    for (const auto& [uv, q] : t)
        if (!uv.first.is_unit() && !uv.second.is_unit()) out.add_term(uv, q);
    return out;
}

Tensor2 HopfContext::coproduct(const Word& w) {
    if (memoize_) {
        if (auto it = coproduct_memo_.find(w); it != coproduct_memo_.end()) return it->second;
    }

    Tensor2 result;
    if (w.is_unit()) {
        result = Tensor2({w, w});
    } else if (!is_irreducible(w)) {
        result = Tensor2({Word::unit(), Word::unit()});
        for (const auto& f : w.factors()) result = tensor2_mul(result, coproduct(Word(f)));
    } else {
        const IrreducibleWord& tree = w.factors().front();
        const Word below(tree.children());
        result.add_term({w, Word::unit()}, 1);
        result.add_term({Word::unit(), w}, 1);
        result += map_right(project_left(coproduct(below)),
                            [&](const Word& v) { return LinComb(Word(graft(v, tree.root()))); });
    }

    if (memoize_) coproduct_memo_.emplace(w, result);
    return result;
}

Tensor2 HopfContext::coproduct(const LinComb& a) {
    Tensor2 out;
    for (const auto& [w, q] : a) out += scale(q, coproduct(w));
    return out;
}

Tensor2 coproduct_sweedler(const Word& w) {
    Tensor2 result({Word::unit(), Word::unit()});
    for (const auto& f : w.factors()) {
        Tensor2 factor;
        for (const auto& p : subwords(f)) factor.add_term({p.sub, p.quotient}, Rational(static_cast<long>(p.multiplicity)));
        result = tensor2_mul(result, factor);
    }
    return result;
}

Tensor2 HopfContext::coproduct_sweedler(const Word& w) const { return hopfren::coproduct_sweedler(w); }

LinComb HopfContext::antipode(const Word& w, bool left) {
    auto& memo = left ? left_memo_ : right_memo_;
    if (memoize_) {
        if (auto it = memo.find(w); it != memo.end()) return it->second;
    }

    LinComb result;
    if (w.is_unit()) {
        result = LinComb(w);
    } else if (!is_irreducible(w)) {
        result = LinComb(Word::unit());
        for (const auto& f : w.factors()) result = mul(result, antipode(Word(f), left));
    } else {
        const Tensor2 inner = project_both(coproduct(w));
        auto apply = [&](const Word& u) { return antipode(u, left); };
        const Tensor2 twisted = left ? map_left(inner, apply) : map_right(inner, apply);
        result = -LinComb(w) - flatten(twisted);
    }

    if (memoize_) memo.emplace(w, result);
    return result;
}

LinComb HopfContext::antipode_left(const Word& w) { return antipode(w, true); }
LinComb HopfContext::antipode_right(const Word& w) { return antipode(w, false); }

LinComb HopfContext::antipode_left(const LinComb& a) {
    LinComb out;
    for (const auto& [w, q] : a) out += scale(q, antipode(w, true));
    return out;
}

LinComb HopfContext::antipode_right(const LinComb& a) {
    LinComb out;
    for (const auto& [w, q] : a) out += scale(q, antipode(w, false));
    return out;
}

Tensor3 HopfContext::coproduct_left_iterated(const Word& w) {
    Tensor3 out;
    for (const auto& [uv, q] : coproduct(w))
        for (const auto& [ab, c] : coproduct(uv.first)) out.add_term({ab.first, ab.second, uv.second}, q * c);
    return out;
}

Tensor3 HopfContext::coproduct_right_iterated(const Word& w) {
    Tensor3 out;
    for (const auto& [uv, q] : coproduct(w))
        for (const auto& [ab, c] : coproduct(uv.second)) out.add_term({uv.first, ab.first, ab.second}, q * c);
    return out;
}

bool HopfContext::hopf_axiom_check(const Word& w) {
    const Tensor2 delta = coproduct(w);
    const LinComb expected = unit(counit(LinComb(w)));
    auto s = [&](const Word& u) { return antipode_left(u); };
    return flatten(map_left(delta, s)) == expected && flatten(map_right(delta, s)) == expected;
}

bool HopfContext::coassociativity_check(const Word& w) {
    return coproduct_left_iterated(w) == coproduct_right_iterated(w);
}

bool HopfContext::counit_axiom_check(const Word& w) {
    LinComb left, right;
    for (const auto& [uv, q] : coproduct(w)) {
        if (uv.second.is_unit()) left.add_term(uv.first, q);   // (id ⊗ counit)
        if (uv.first.is_unit()) right.add_term(uv.second, q);  // (counit ⊗ id)
    }
    const LinComb expected(w);
    return left == expected && right == expected;
}

}  // namespace hopfren
