#pragma once

// Exhaustive property suites over enumerated words.

#include "hopfren/word.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hopfren {

struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_failure;  ///< canonical word (plus context) of the first failing case

    [[nodiscard]] bool passed() const { return failed == 0; }
};

struct CheckOptions {
    std::size_t max_len = 4;
    /// Toy-model suites (shape, finiteness, forest) stop at this length.
    std::size_t toy_max_len = 5;
    /// Quadrature agreement stops at this length; 0 disables it.
    std::size_t quadrature_max_len = 3;
    std::vector<double> quadrature_c = {1.0, 2.0, 2.718281828459045};
    std::vector<double> quadrature_eps = {0.1, 0.25};
    double quadrature_rel_tol = 1e-6;
};

/// Runs every suite over all words of length <= max_len. Results come back
/// in a fixed order independent of evaluation order.
std::vector<SuiteResult> run_checks(const Alphabet& alphabet, const CheckOptions& opts);

}  // namespace hopfren
