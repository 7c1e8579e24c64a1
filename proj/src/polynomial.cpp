#include "hopfren/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hopfren {

Polynomial::Polynomial(Rational constant) : coeffs_{std::move(constant)} { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& q, std::size_t power) {
    std::vector<Rational> c(power + 1);
    c[power] = q;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t Polynomial::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return i;
    return 0;
}

double Polynomial::evaluate(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->to_double();
    return acc;
}

Polynomial Polynomial::shift_down(std::size_t n) const {
    if (is_zero()) return {};
    if (valuation() < n) throw std::invalid_argument("Polynomial::shift_down: not divisible");
    return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.end()));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial out = a;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& q, const Polynomial& a) {
    if (q.is_zero()) return {};
    Polynomial out = a;
    for (auto& c : out.coeffs_) c *= q;
    return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial quotient;
    Polynomial rem = a;
    const Rational lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
        const Polynomial step = Polynomial::monomial(rem.leading() / lead, shift);
        quotient += step;
        rem -= step * b;
    }
    return {quotient, rem};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return (Rational(1) / x.leading()) * x;
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(Rational constant) : num_(std::move(constant)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    normalize();
}

RationalFunction RationalFunction::monomial(const Rational& q, int power) {
    if (power >= 0) return {Polynomial::monomial(q, static_cast<std::size_t>(power)), Polynomial(Rational(1))};
    return {Polynomial(q), Polynomial::monomial(Rational(1), static_cast<std::size_t>(-power))};
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    const Rational lead = den_.leading();
    if (lead != Rational(1)) {
        const Rational inv = Rational(1) / lead;
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

// ---------------------------------------------------------------------------

namespace {

void append_term(std::ostringstream& os, bool first, const Rational& q, long power, const std::string& var) {
    if (first) {
        os << q;
    } else {
        os << (q.sign() < 0 ? " - " : " + ") << (q.sign() < 0 ? -q : q);
    }
    if (power == 1) os << ' ' << var;
    else if (power != 0) os << ' ' << var << '^' << power;
}

std::string render_terms(const Polynomial& p, long offset, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i].is_zero()) continue;
        append_term(os, first, p.coeffs()[i], static_cast<long>(i) + offset, var);
        first = false;
    }
    return os.str();
}

}  // namespace

std::string to_string(const Polynomial& p, const std::string& var) { return render_terms(p, 0, var); }

std::string to_string(const RationalFunction& r, const std::string& var) {
    if (r.den().is_monomial())
        return render_terms(r.num(), -static_cast<long>(r.den().valuation()), var);
    return "(" + to_string(r.num(), var) + ")/(" + to_string(r.den(), var) + ")";
}

}  // namespace hopfren
