#pragma once

// The one-scale toy model:
//   (x_j)[c]  = ∫_c^∞ dy y^{-1-jε}
//   (X x_j)[c] = ∫_c^∞ dy y^{-1-jε} X[y]
//   (X)(Y)[c] = X[c]·Y[c]
//   R[X[c]]   = X[1]
// evaluated exactly as RegValues.

#include "hopfren/hopf.hpp"
#include "hopfren/laurent.hpp"
#include "hopfren/regvalue.hpp"

#include <string_view>
#include <unordered_map>

namespace hopfren {

/// Renormalization schemes understood by ToyModel. Only the toy scale
/// subtraction (c -> 1) exists.
enum class Scheme { ScaleSubtraction };

Scheme parse_scheme(std::string_view name);
const char* to_string(Scheme scheme);

/// Feynman rule φ of the toy model; φ(e) = 1.
RegValue phi(const Word& w);

/// Counter terms and renormalized values under a scheme. Memoizes S_R per
/// canonical word; not thread-safe.
class ToyModel {
public:
    explicit ToyModel(Scheme scheme = Scheme::ScaleSubtraction, bool memoize = true);

    [[nodiscard]] Scheme scheme() const { return scheme_; }

    /// The scheme's renormalization map R.
    [[nodiscard]] RegValue apply_scheme(const RegValue& v) const;

    /// S_R: S_R[e] = 1, S_R[XY] = S_R[X]S_R[Y],
    /// S_R[(Xx)] = -R[φ((Xx))] - R[m (S_R⊗φ) P_2 Δ[(Xx)]].
    RegValue counterterm(const Word& w);

    /// m (S_R⊗φ) Δ[w] for irreducible w: the renormalized value.
    RegValue renormalize(const Word& w);

    /// m (S_R⊗φ) (id⊗P_1) Δ[w]: the value with subdivergences subtracted.
    RegValue bar_value(const Word& w);

    HopfContext& hopf() { return hopf_; }

private:
    Scheme scheme_;
    bool memoize_;
    HopfContext hopf_;
    std::unordered_map<Word, RegValue, WordHash> counterterm_memo_;
};

/// Default expansion depth beyond the pole: ε^4.
inline constexpr int kDefaultLaurentOrder = 4;

/// Laurent expansion of a toy value from its deepest pole up to ε^order.
LaurentSeries expand(const RegValue& v, int order = kDefaultLaurentOrder);

}  // namespace hopfren
