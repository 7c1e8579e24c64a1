#include "hopfren/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace hopfren {

namespace {

// Kronrod 15-point abscissae (positive half, descending) and weights; the
// Gauss 7-point rule uses the odd-indexed abscissae.
constexpr std::array<double, 8> kXk = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                       0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                       0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                       0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                       0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                       0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                       0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    friend bool operator<(const Segment& x, const Segment& y) { return x.error < y.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = kWk[7] * fc;
    double gauss = kWg[3] * fc;
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = half * kXk[i];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kWk[i] * sum;
        if (i % 2 == 1) gauss += kWg[i / 2] * sum;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& opts) {
    std::priority_queue<Segment> heap;
    Segment first = gauss_kronrod(f, a, b);
    double total = first.value;
    double error = first.error;
    heap.push(first);

    while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
        if (static_cast<int>(heap.size()) >= opts.max_intervals)
            throw ConvergenceFailure("adaptive quadrature: error estimate " + std::to_string(error) +
                                     " above tolerance after " + std::to_string(heap.size()) + " intervals");
        if (!std::isfinite(total)) throw ConvergenceFailure("adaptive quadrature: non-finite integrand");
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum to shed the drift of the incremental updates.
    double value = 0.0, err = 0.0;
    const int intervals = static_cast<int>(heap.size());
    while (!heap.empty()) {
        value += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    return {value, err, intervals};
}

QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a, const QuadratureOptions& opts) {
    if (!(a > 0.0)) throw std::invalid_argument("integrate_to_infinity: lower limit must be positive");
    auto mapped = [&](double s) {
        const double u = s / (1.0 - s);
        const double y = a * std::exp(u);
        if (!std::isfinite(y)) return 0.0;
        return f(y) * y / ((1.0 - s) * (1.0 - s));
    };
    return integrate(mapped, 0.0, 1.0, opts);
}

namespace {

// ∫_{e^ℓ}^∞ dy y^{-1-jε} Π children(y) written in u = ln y - ℓ, so no
// intermediate quantity overflows however deep the nesting.
double tree_value(const IrreducibleWord& tree, double log_lower, double eps, const QuadratureOptions& opts) {
    const double rate = tree.root().weight * eps;
    auto integrand = [&](double s) {
        const double u = s / (1.0 - s);
        double v = std::exp(-rate * (log_lower + u)) / ((1.0 - s) * (1.0 - s));
        if (v == 0.0) return 0.0;
        for (const auto& child : tree.children()) v *= tree_value(child, log_lower + u, eps, opts);
        return v;
    };
    return integrate(integrand, 0.0, 1.0, opts).value;
}

}  // namespace

double quadrature_oracle(const Word& w, double c, double eps, const QuadratureOptions& opts) {
    if (!(c > 0.0)) throw std::invalid_argument("quadrature_oracle: c must be positive");
    if (!(eps > 0.0)) throw std::invalid_argument("quadrature_oracle: eps must be positive");
    double value = 1.0;
    for (const auto& f : w.factors()) value *= tree_value(f, std::log(c), eps, opts);
    return value;
}

}  // namespace hopfren
