#pragma once

// Numeric cross-check of the toy-model values by nested adaptive quadrature.

#include "hopfren/word.hpp"

#include <functional>
#include <stdexcept>

namespace hopfren {

class ConvergenceFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuadratureOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-9;
    int max_intervals = 400;
};

struct QuadratureResult {
    double value;
    double error;
    int intervals;
};

/// Globally adaptive Gauss-Kronrod (7/15) on [a, b]. Throws ConvergenceFailure
/// when the error estimate stays above max(abs_tol, rel_tol·|I|).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// ∫_a^∞ f(y) dy via y = a/(1-t), then 1-t = e^{-u}, u = s/(1-s), s ∈ [0, 1).
/// Requires a > 0.
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       const QuadratureOptions& opts = {});

/// Numeric φ(w)[c] at regulator eps, integrating each nested bracket
/// ∫_c^∞ dy y^{-1-jε}(...) by quadrature.
double quadrature_oracle(const Word& w, double c, double eps, const QuadratureOptions& opts = {});

}  // namespace hopfren
