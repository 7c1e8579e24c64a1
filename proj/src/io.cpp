#include "hopfren/io.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfren {

using nlohmann::json;

namespace {

json rationals(const std::vector<Rational>& coeffs) {
    json out = json::array();
    for (const auto& c : coeffs) out.push_back(c.str());
    return out;
}

std::vector<Rational> parse_rationals(const json& j) {
    std::vector<Rational> out;
    for (const auto& item : j) out.push_back(Rational::parse(item.get<std::string>()));
    return out;
}

}  // namespace

json to_json(const LinComb& a) {
    json out = json::array();
    for (const auto& [w, q] : a) out.push_back({{"coeff", q.str()}, {"word", w.text()}});
    return out;
}

json to_json(const Tensor2& t) {
    json out = json::array();
    for (const auto& [uv, q] : t)
        out.push_back({{"coeff", q.str()}, {"word", {uv.first.text(), uv.second.text()}}});
    return out;
}

json to_json(const Tensor3& t) {
    json out = json::array();
    for (const auto& [uvw, q] : t) {
        const auto& [u, v, w] = uvw;
        out.push_back({{"coeff", q.str()}, {"word", {u.text(), v.text(), w.text()}}});
    }
    return out;
}

json to_json(const RegValue& v) {
    json out = json::array();
    for (const auto& [k, r] : v.terms())
        out.push_back({{"k", k}, {"num", rationals(r.num().coeffs())}, {"den", rationals(r.den().coeffs())}});
    return out;
}

json to_json(const LogPolynomial& p) { return rationals(p.coeffs()); }

json to_json(const LaurentSeries& s) {
    json out = json::object();
    for (int n = s.min_pow(); n <= s.max_pow(); ++n) out[std::to_string(n)] = to_json(s.coeff(n));
    return out;
}

LinComb lincomb_from_json(const json& j, const Alphabet& alphabet) {
    LinComb out;
    for (const auto& item : j)
        out.add_term(parse(item.at("word").get<std::string>(), alphabet),
                     Rational::parse(item.at("coeff").get<std::string>()));
    return out;
}

Tensor2 tensor2_from_json(const json& j, const Alphabet& alphabet) {
    Tensor2 out;
    for (const auto& item : j) {
        const auto& words = item.at("word");
        if (!words.is_array() || words.size() != 2) throw std::invalid_argument("Tensor2 term needs two words");
        out.add_term({parse(words[0].get<std::string>(), alphabet), parse(words[1].get<std::string>(), alphabet)},
                     Rational::parse(item.at("coeff").get<std::string>()));
    }
    return out;
}

RegValue regvalue_from_json(const json& j) {
    RegValue out;
    for (const auto& item : j)
        out.add_term(item.at("k").get<int>(), RationalFunction(Polynomial(parse_rationals(item.at("num"))),
                                                               Polynomial(parse_rationals(item.at("den")))));
    return out;
}

std::string to_text(const LinComb& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, q] : a) {
        if (!first) os << " + ";
        os << q << ' ' << w.text();
        first = false;
    }
    return os.str();
}

std::string to_text(const Tensor2& t) {
    std::ostringstream os;
    for (const auto& [uv, q] : t) os << q << ' ' << uv.first.text() << " ⊗ " << uv.second.text() << '\n';
    return os.str();
}

std::string to_text(const Tensor3& t) {
    std::ostringstream os;
    for (const auto& [uvw, q] : t) {
        const auto& [u, v, w] = uvw;
        os << q << ' ' << u.text() << " ⊗ " << v.text() << " ⊗ " << w.text() << '\n';
    }
    return os.str();
}

}  // namespace hopfren
