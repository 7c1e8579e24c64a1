#pragma once

// Truncated Laurent expansions in ε whose coefficients are polynomials in L = ln c.

#include "hopfren/regvalue.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfren {

/// Polynomial in L = ln c with rational coefficients, ascending powers, no trailing zeros.
class LogPolynomial {
public:
    LogPolynomial() = default;
    LogPolynomial(Rational constant);  // NOLINT(google-explicit-constructor)
    explicit LogPolynomial(std::vector<Rational> coeffs);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational{}; }
    [[nodiscard]] double evaluate(double log_c) const;

    LogPolynomial& operator+=(const LogPolynomial& o);
    friend LogPolynomial operator+(LogPolynomial a, const LogPolynomial& b) { return a += b; }
    friend LogPolynomial operator-(const LogPolynomial& a);
    friend LogPolynomial operator-(const LogPolynomial& a, const LogPolynomial& b) { return a + (-b); }
    friend LogPolynomial operator*(const LogPolynomial& a, const LogPolynomial& b);

    friend bool operator==(const LogPolynomial&, const LogPolynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::string to_string(const LogPolynomial& p);

/// Σ_{min_pow ≤ n ≤ max_pow} a_n(L) ε^n. Coefficients above `max_pow` are
/// unknown (truncated), not zero; powers below `min_pow` are absent.
class LaurentSeries {
public:
    LaurentSeries(int min_pow, int max_pow);

    [[nodiscard]] int min_pow() const { return min_pow_; }
    [[nodiscard]] int max_pow() const { return max_pow_; }
    /// Lowest power with a nonzero coefficient (max_pow + 1 when all known coefficients vanish).
    [[nodiscard]] int lowest_pow() const;
    [[nodiscard]] const std::map<int, LogPolynomial>& coefficients() const { return coeffs_; }
    /// Coefficient of ε^n; throws std::out_of_range outside [min_pow, max_pow].
    [[nodiscard]] LogPolynomial coeff(int n) const;
    void add_term(int n, const LogPolynomial& a);

    /// True iff every coefficient of a negative power of ε is exactly zero.
    [[nodiscard]] bool pole_free() const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

private:
    int min_pow_;
    int max_pow_;
    std::map<int, LogPolynomial> coeffs_;
};

std::string to_string(const LaurentSeries& s);

class ExpansionImpossible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact expansion of v about ε = 0, keeping powers min_pow..max_pow.
/// Uses c^{-kε} = Σ_m (-kL)^m ε^m / m! and exact series division.
/// Throws ExpansionImpossible if v has a nonzero coefficient below min_pow.
LaurentSeries laurent_expand(const RegValue& v, int min_pow, int max_pow);

/// Pole order of v at ε = 0 (0 if v is regular there).
int pole_order(const RegValue& v);

}  // namespace hopfren
