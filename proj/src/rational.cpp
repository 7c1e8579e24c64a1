#include "hopfren/rational.hpp"

#include <stdexcept>

namespace hopfren {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!valid_int(num, true) || (slash != std::string_view::npos && !valid_int(den, false)))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");

    std::string n(num);
    if (!n.empty() && n.front() == '+') n.erase(0, 1);
    mpq_class q;
    q.get_num() = mpz_class(n, 10);
    q.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (q.get_den() == 0) throw std::invalid_argument("not a rational: zero denominator");
    return Rational(std::move(q));
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

}  // namespace hopfren
