#pragma once

#include "hopfren/polynomial.hpp"

#include <map>
#include <string>

namespace hopfren {

/// A regularized value Σ_k r_k(ε)·c^{-kε} with exact rational functions r_k.
class RegValue {
public:
    using Terms = std::map<int, RationalFunction>;

    RegValue() = default;
    RegValue(RationalFunction r, int scale_exp = 0);  // NOLINT(google-explicit-constructor)

    static RegValue one() { return RegValue(RationalFunction(Rational(1))); }

    void add_term(int scale_exp, const RationalFunction& r);

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// Coefficient of c^{-kε}.
    [[nodiscard]] RationalFunction at(int scale_exp) const;

    /// Numeric value at a given c and ε.
    [[nodiscard]] double evaluate(double c, double eps) const;

    RegValue& operator+=(const RegValue& o);
    RegValue& operator-=(const RegValue& o);
    friend RegValue operator+(RegValue a, const RegValue& b) { return a += b; }
    friend RegValue operator-(RegValue a, const RegValue& b) { return a -= b; }
    friend RegValue operator-(const RegValue& a);
    /// Products add scale exponents.
    friend RegValue operator*(const RegValue& a, const RegValue& b);
    friend RegValue operator*(const RationalFunction& r, const RegValue& a);

    friend bool operator==(const RegValue&, const RegValue&) = default;

private:
    Terms terms_;
};

/// ∫_c^∞ dy y^{-1-jε} V[y] for V = Σ r_k y^{-kε}: each term maps to r_k/((j+k)ε)·c^{-(j+k)ε}.
RegValue integrate_above(const RegValue& v, int weight);

/// The toy subtraction scheme R: evaluate at c = 1.
RegValue rmap(const RegValue& v);

/// "-5/24 ε^-3", "(1/2 ε^-2) c^(-2ε) - ..." etc.
std::string to_string(const RegValue& v);

}  // namespace hopfren
