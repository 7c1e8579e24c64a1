#include "hopfren/regvalue.hpp"

#include <cmath>
#include <stdexcept>

namespace hopfren {

RegValue::RegValue(RationalFunction r, int scale_exp) { add_term(scale_exp, r); }

void RegValue::add_term(int scale_exp, const RationalFunction& r) {
    if (scale_exp < 0) throw std::invalid_argument("RegValue: negative scale exponent");
    if (r.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(scale_exp, r);
    if (!inserted) {
        it->second += r;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RationalFunction RegValue::at(int scale_exp) const {
    auto it = terms_.find(scale_exp);
    return it == terms_.end() ? RationalFunction{} : it->second;
}

double RegValue::evaluate(double c, double eps) const {
    double acc = 0.0;
    for (const auto& [k, r] : terms_) acc += r.evaluate(eps) * std::pow(c, -k * eps);
    return acc;
}

RegValue& RegValue::operator+=(const RegValue& o) {
    for (const auto& [k, r] : o.terms_) add_term(k, r);
    return *this;
}

RegValue& RegValue::operator-=(const RegValue& o) {
    for (const auto& [k, r] : o.terms_) add_term(k, -r);
    return *this;
}

RegValue operator-(const RegValue& a) {
    RegValue out;
    for (const auto& [k, r] : a.terms_) out.terms_.emplace(k, -r);
    return out;
}

RegValue operator*(const RegValue& a, const RegValue& b) {
    RegValue out;
    for (const auto& [ka, ra] : a.terms_)
        for (const auto& [kb, rb] : b.terms_) out.add_term(ka + kb, ra * rb);
    return out;
}

RegValue operator*(const RationalFunction& r, const RegValue& a) {
    RegValue out;
    for (const auto& [k, s] : a.terms_) out.add_term(k, r * s);
    return out;
}

RegValue integrate_above(const RegValue& v, int weight) {
    if (weight < 1) throw std::invalid_argument("integrate_above: weight must be positive");
    RegValue out;
    for (const auto& [k, r] : v.terms()) {
        const int exponent = k + weight;
        out.add_term(exponent, r * RationalFunction::monomial(Rational(1, exponent), -1));
    }
    return out;
}

RegValue rmap(const RegValue& v) {
    RationalFunction sum;
    for (const auto& [k, r] : v.terms()) sum += r;
    return RegValue(sum, 0);
}

std::string to_string(const RegValue& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [k, r] : v.terms()) {
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += to_string(r, "ε");
        } else {
            out += "[" + to_string(r, "ε") + "] c^(-" + (k == 1 ? std::string() : std::to_string(k)) + "ε)";
        }
    }
    return out;
}

}  // namespace hopfren
