#include "hopfren/toymodel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hopfren {

Scheme parse_scheme(std::string_view name) {
    if (name == "scale" || name == "scale-subtraction") return Scheme::ScaleSubtraction;
    throw std::invalid_argument("unknown renormalization scheme '" + std::string(name) + "'");
}

const char* to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::ScaleSubtraction: return "scale-subtraction";
    }
    return "?";
}

namespace {

RegValue phi_tree(const IrreducibleWord& tree) {
    RegValue below = RegValue::one();
    for (const auto& child : tree.children()) below = below * phi_tree(child);
    return integrate_above(below, tree.root().weight);
}

}  // namespace

RegValue phi(const Word& w) {
    RegValue out = RegValue::one();
    for (const auto& f : w.factors()) out = out * phi_tree(f);
    return out;
}

ToyModel::ToyModel(Scheme scheme, bool memoize) : scheme_(scheme), memoize_(memoize), hopf_(memoize) {}

RegValue ToyModel::apply_scheme(const RegValue& v) const {
    switch (scheme_) {
        case Scheme::ScaleSubtraction: return rmap(v);
    }
    throw std::logic_error("unhandled scheme");
}

RegValue ToyModel::counterterm(const Word& w) {
    if (memoize_) {
        if (auto it = counterterm_memo_.find(w); it != counterterm_memo_.end()) return it->second;
    }

    RegValue result;
    if (w.is_unit()) {
        result = RegValue::one();
    } else if (!is_irreducible(w)) {
        result = RegValue::one();
        for (const auto& f : w.factors()) result = result * counterterm(Word(f));
    } else {
        RegValue subtracted;
        for (const auto& [uv, q] : project_both(hopf_.coproduct(w)))
            subtracted += RationalFunction(q) * (counterterm(uv.first) * phi(uv.second));
        result = -apply_scheme(phi(w)) - apply_scheme(subtracted);
    }

    if (memoize_) counterterm_memo_.emplace(w, result);
    return result;
}

RegValue ToyModel::renormalize(const Word& w) {
    if (!is_irreducible(w)) throw NotIrreducible(w.text());
    RegValue out;
    for (const auto& [uv, q] : hopf_.coproduct(w))
        out += RationalFunction(q) * (counterterm(uv.first) * phi(uv.second));
    return out;
}

RegValue ToyModel::bar_value(const Word& w) {
    if (!is_irreducible(w)) throw NotIrreducible(w.text());
    RegValue out;
    for (const auto& [uv, q] : hopf_.coproduct(w)) {
        if (uv.second.is_unit()) continue;
        out += RationalFunction(q) * (counterterm(uv.first) * phi(uv.second));
    }
    return out;
}

LaurentSeries expand(const RegValue& v, int order) {
    int deepest = 0;
    for (const auto& [k, r] : v.terms()) deepest = std::max(deepest, static_cast<int>(r.den().valuation()));
    return laurent_expand(v, -deepest, order);
}

}  // namespace hopfren
