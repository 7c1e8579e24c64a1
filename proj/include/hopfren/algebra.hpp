#pragma once

// The algebra of words over Q: linear combinations and their tensor powers.

#include "hopfren/rational.hpp"
#include "hopfren/word.hpp"

#include <map>
#include <tuple>
#include <utility>

namespace hopfren {

/// Finite Q-linear combination of basis keys. Zero coefficients are never stored.
template <typename Key>
class Combination {
public:
    using Terms = std::map<Key, Rational>;

    Combination() = default;
    explicit Combination(Key key, Rational coeff = 1) { add_term(std::move(key), std::move(coeff)); }

    void add_term(const Key& key, const Rational& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] Rational coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational{} : it->second;
    }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Combination& operator+=(const Combination& o) {
        for (const auto& [k, q] : o.terms_) add_term(k, q);
        return *this;
    }
    Combination& operator-=(const Combination& o) {
        for (const auto& [k, q] : o.terms_) add_term(k, -q);
        return *this;
    }

    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
    friend Combination operator-(const Combination& a) { return scale(Rational(-1), a); }

    friend Combination scale(const Rational& q, const Combination& a) {
        Combination out;
        if (q.is_zero()) return out;
        for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, q * c);
        return out;
    }

    friend bool operator==(const Combination&, const Combination&) = default;

private:
    Terms terms_;
};

using LinComb = Combination<Word>;
using Tensor2 = Combination<std::pair<Word, Word>>;
using Tensor3 = Combination<std::tuple<Word, Word, Word>>;

inline LinComb add(const LinComb& a, const LinComb& b) { return a + b; }

/// Bilinear extension of the commutative word product.
LinComb mul(const LinComb& a, const LinComb& b);

Tensor2 tensor(const LinComb& a, const LinComb& b);

/// m: multiply the two slots of every term.
LinComb flatten(const Tensor2& t);

/// Slot-wise product in A (x) A.
Tensor2 tensor2_mul(const Tensor2& a, const Tensor2& b);

/// Apply f to the first (or second) slot of every term: (f (x) id) and (id (x) f).
template <typename F>
Tensor2 map_left(const Tensor2& t, F&& f) {
    Tensor2 out;
    for (const auto& [uv, q] : t)
        for (const auto& [u, c] : f(uv.first)) out.add_term({u, uv.second}, q * c);
    return out;
}

template <typename F>
Tensor2 map_right(const Tensor2& t, F&& f) {
    Tensor2 out;
    for (const auto& [uv, q] : t)
        for (const auto& [v, c] : f(uv.second)) out.add_term({uv.first, v}, q * c);
    return out;
}

}  // namespace hopfren
