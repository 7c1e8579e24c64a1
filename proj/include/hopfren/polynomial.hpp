#pragma once

// Dense univariate polynomials and rational functions over Q.

#include "hopfren/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hopfren {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
    /// Coefficients in ascending powers; trailing zeros are trimmed.
    explicit Polynomial(std::vector<Rational> coeffs);

    /// q·t^power
    static Polynomial monomial(const Rational& q, std::size_t power);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Lowest power with a nonzero coefficient; 0 for the zero polynomial.
    [[nodiscard]] std::size_t valuation() const;
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational{}; }
    [[nodiscard]] Rational leading() const { return coeffs_.empty() ? Rational{} : coeffs_.back(); }
    [[nodiscard]] bool is_monomial() const { return !is_zero() && valuation() == coeffs_.size() - 1; }

    [[nodiscard]] double evaluate(double t) const;
    /// Divide by t^n; requires valuation() >= n.
    [[nodiscard]] Polynomial shift_down(std::size_t n) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& q, const Polynomial& a);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// num/den in lowest terms with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(Rational constant);  // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial num, Polynomial den);

    /// q·t^power, power may be negative.
    static RationalFunction monomial(const Rational& q, int power);

    [[nodiscard]] const Polynomial& num() const { return num_; }
    [[nodiscard]] const Polynomial& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] double evaluate(double t) const { return num_.evaluate(t) / den_.evaluate(t); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }

    /// Canonical form makes structural equality exact.
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

/// Human-readable form in the variable `var`; Laurent polynomials render as
/// a sum of monomials ("-5/24 ε^-3"), anything else as "(num)/(den)".
std::string to_string(const Polynomial& p, const std::string& var);
std::string to_string(const RationalFunction& r, const std::string& var);

}  // namespace hopfren
