#include "hopfren/quadrature.hpp"
#include "hopfren/toymodel.hpp"

#include <doctest.h>

#include <cmath>

using namespace hopfren;

namespace {
const Alphabet kAb = Alphabet::parse("x1,x2");
Word w(const std::string& text) { return parse(text, kAb); }
}  // namespace

TEST_CASE("adaptive Gauss-Kronrod on finite intervals") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0).value == doctest::Approx(9.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI).value == doctest::Approx(2.0).epsilon(1e-12));
    // integrable endpoint singularity
    const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-10, 1e-12, 2000});
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(r.intervals > 1);
}

TEST_CASE("quadrature reports failure instead of degrading") {
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, {1e-9, 1e-9, 50}), ConvergenceFailure);
}

TEST_CASE("semi-infinite integrals") {
    CHECK(integrate_to_infinity([](double y) { return 1.0 / (y * y); }, 1.0).value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(integrate_to_infinity([](double y) { return std::exp(-y); }, 2.0).value ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-9));
    CHECK(integrate_to_infinity([](double y) { return std::pow(y, -1.1); }, 1.0).value ==
          doctest::Approx(10.0).epsilon(1e-8));
    CHECK_THROWS_AS(integrate_to_infinity([](double) { return 0.0; }, 0.0), std::invalid_argument);
}

TEST_CASE("oracle: closed forms") {
    // ((x1)x1) at c=2, ε=0.1: 2^{-0.2}/(2·0.01)
    const double expected = std::pow(2.0, -0.2) * 50.0;
    CHECK(expected == doctest::Approx(43.528).epsilon(1e-4));
    CHECK(std::abs(quadrature_oracle(w("((x1)x1)"), 2.0, 0.1) - expected) <= 1e-6 * expected);
    CHECK(quadrature_oracle(w("(x2)"), 1.0, 0.25) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(quadrature_oracle(w("(x1)"), 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(quadrature_oracle(w("()"), 2.0, 0.1) == 1.0);
    CHECK_THROWS_AS(quadrature_oracle(w("(x1)"), 0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(quadrature_oracle(w("(x1)"), 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("oracle agrees with exact φ on short words") {
    for (const auto& x : enumerate_words(kAb, 3)) {
        for (double c : {1.0, 2.0, M_E}) {
            for (double eps : {0.1, 0.25}) {
                const double exact = phi(x).evaluate(c, eps);
                CAPTURE(x.text());
                CAPTURE(c);
                CAPTURE(eps);
                CHECK(std::abs(quadrature_oracle(x, c, eps) - exact) <= 1e-6 * std::abs(exact));
            }
        }
    }
}
