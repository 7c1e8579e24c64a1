#include "hopfren/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hopfren {

LogPolynomial::LogPolynomial(Rational constant) : coeffs_{std::move(constant)} { trim(); }

LogPolynomial::LogPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void LogPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

double LogPolynomial::evaluate(double log_c) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * log_c + it->to_double();
    return acc;
}

LogPolynomial& LogPolynomial::operator+=(const LogPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

LogPolynomial operator-(const LogPolynomial& a) {
    LogPolynomial out = a;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

LogPolynomial operator*(const LogPolynomial& a, const LogPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LogPolynomial(std::move(c));
}

std::string to_string(const LogPolynomial& p) { return to_string(Polynomial(p.coeffs()), "L"); }

// ---------------------------------------------------------------------------

LaurentSeries::LaurentSeries(int min_pow, int max_pow) : min_pow_(min_pow), max_pow_(max_pow) {
    if (min_pow > max_pow) throw std::invalid_argument("LaurentSeries: min_pow > max_pow");
}

int LaurentSeries::lowest_pow() const { return coeffs_.empty() ? max_pow_ + 1 : coeffs_.begin()->first; }

LogPolynomial LaurentSeries::coeff(int n) const {
    if (n < min_pow_ || n > max_pow_)
        throw std::out_of_range("Laurent coefficient ε^" + std::to_string(n) + " outside the expansion range");
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? LogPolynomial{} : it->second;
}

void LaurentSeries::add_term(int n, const LogPolynomial& a) {
    if (n > max_pow_ || a.is_zero()) return;
    if (n < min_pow_) throw std::out_of_range("Laurent term below min_pow");
    auto& slot = coeffs_[n];
    slot += a;
    if (slot.is_zero()) coeffs_.erase(n);
}

bool LaurentSeries::pole_free() const { return coeffs_.empty() || coeffs_.begin()->first >= 0; }

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries out(std::min(a.min_pow_, b.min_pow_), std::min(a.max_pow_, b.max_pow_));
    for (const auto& [n, c] : a.coeffs_) out.add_term(n, c);
    for (const auto& [n, c] : b.coeffs_) out.add_term(n, c);
    return out;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const int lo = a.min_pow_ + b.min_pow_;
    const int hi = std::min(a.max_pow_ + b.min_pow_, b.max_pow_ + a.min_pow_);
    LaurentSeries out(lo, std::max(lo, hi));
    for (const auto& [n, x] : a.coeffs_)
        for (const auto& [m, y] : b.coeffs_) out.add_term(n + m, x * y);
    return out;
}

std::string to_string(const LaurentSeries& s) {
    std::ostringstream os;
    for (int n = s.min_pow(); n <= s.max_pow(); ++n) {
        if (n != s.min_pow()) os << " + ";
        os << '[' << to_string(s.coeff(n)) << ']';
        if (n != 0) os << " ε^" << n;
    }
    os << " + O(ε^" << s.max_pow() + 1 << ')';
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Power-series coefficients s_0..s_count-1 of num/den, den(0) != 0.
std::vector<Rational> series_quotient(const Polynomial& num, const Polynomial& den, std::size_t count) {
    const Rational d0 = den.coeff(0);
    std::vector<Rational> s(count);
    for (std::size_t n = 0; n < count; ++n) {
        Rational acc = num.coeff(n);
        const std::size_t top = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(den.degree(), 0)));
        for (std::size_t i = 1; i <= top; ++i) acc -= den.coeff(i) * s[n - i];
        s[n] = acc / d0;
    }
    return s;
}

}  // namespace

LaurentSeries laurent_expand(const RegValue& v, int min_pow, int max_pow) {
    // Accumulate everything from the deepest pole upwards, then check the lower bound.
    std::map<int, LogPolynomial> acc;
    for (const auto& [k, r] : v.terms()) {
        const auto m = static_cast<int>(r.den().valuation());
        const Polynomial unit_part = r.den().shift_down(static_cast<std::size_t>(m));
        if (unit_part.coeff(0).is_zero())
            throw ExpansionImpossible("denominator vanishes at ε = 0 beyond a pure power of ε");
        if (max_pow + m < 0) continue;
        const auto count = static_cast<std::size_t>(max_pow + m + 1);
        const std::vector<Rational> quotient = series_quotient(r.num(), unit_part, count);

        // c^{-kε} = Σ_b (-k)^b/b! · L^b ε^b
        std::vector<LogPolynomial> scale(count);
        Rational power(1);
        for (std::size_t b = 0; b < count; ++b) {
            std::vector<Rational> c(b + 1);
            c[b] = power / factorial(static_cast<unsigned>(b));
            scale[b] = LogPolynomial(std::move(c));
            power *= Rational(-k);
        }

        for (std::size_t a = 0; a < count; ++a) {
            if (quotient[a].is_zero()) continue;
            for (std::size_t b = 0; a + b < count; ++b) {
                const int n = static_cast<int>(a + b) - m;
                auto& slot = acc[n];
                slot += LogPolynomial(quotient[a]) * scale[b];
            }
        }
    }

    LaurentSeries out(min_pow, max_pow);
    for (const auto& [n, c] : acc) {
        if (c.is_zero()) continue;
        if (n < min_pow)
            throw ExpansionImpossible("nonzero coefficient at ε^" + std::to_string(n) + " below the requested range");
        out.add_term(n, c);
    }
    return out;
}

int pole_order(const RegValue& v) {
    int deepest = 0;
    for (const auto& [k, r] : v.terms()) deepest = std::max(deepest, static_cast<int>(r.den().valuation()));
    const int low = laurent_expand(v, -deepest, 0).lowest_pow();
    return low < 0 ? -low : 0;
}

}  // namespace hopfren
