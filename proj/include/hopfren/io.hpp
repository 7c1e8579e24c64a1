#pragma once

// Text and JSON forms of the algebraic and toy-model values.
//
// JSON schemas:
//   LinComb      [{"coeff": "p/q", "word": "<canonical>"}]
//   Tensor2/3    [{"coeff": "p/q", "word": ["<w1>", "<w2>"(, "<w3>")]}]
//   RegValue     [{"k": int, "num": ["p/q", ...], "den": ["p/q", ...]}]   (ascending ε powers)
//   LaurentSeries {"<power>": ["p/q", ...]}                              (ascending L powers)

#include "hopfren/algebra.hpp"
#include "hopfren/laurent.hpp"
#include "hopfren/regvalue.hpp"

#include <json.hpp>

#include <string>

namespace hopfren {

nlohmann::json to_json(const LinComb& a);
nlohmann::json to_json(const Tensor2& t);
nlohmann::json to_json(const Tensor3& t);
nlohmann::json to_json(const RegValue& v);
nlohmann::json to_json(const LaurentSeries& s);
nlohmann::json to_json(const LogPolynomial& p);

LinComb lincomb_from_json(const nlohmann::json& j, const Alphabet& alphabet);
Tensor2 tensor2_from_json(const nlohmann::json& j, const Alphabet& alphabet);
RegValue regvalue_from_json(const nlohmann::json& j);

/// "-1 ((x1)x2) + 1 (x1)(x2)"; "0" for the zero element.
std::string to_text(const LinComb& a);
/// One "coeff U ⊗ V" line per term.
std::string to_text(const Tensor2& t);
std::string to_text(const Tensor3& t);

}  // namespace hopfren
