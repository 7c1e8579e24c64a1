#include "hopfren/algebra.hpp"

namespace hopfren {

LinComb mul(const LinComb& a, const LinComb& b) {
    LinComb out;
    for (const auto& [u, p] : a)
        for (const auto& [v, q] : b) out.add_term(u * v, p * q);
    return out;
}

Tensor2 tensor(const LinComb& a, const LinComb& b) {
    Tensor2 out;
    for (const auto& [u, p] : a)
        for (const auto& [v, q] : b) out.add_term({u, v}, p * q);
    return out;
}

LinComb flatten(const Tensor2& t) {
    LinComb out;
    for (const auto& [uv, q] : t) out.add_term(uv.first * uv.second, q);
    return out;
}

Tensor2 tensor2_mul(const Tensor2& a, const Tensor2& b) {
    Tensor2 out;
    for (const auto& [x, p] : a)
        for (const auto& [y, q] : b) out.add_term({x.first * y.first, x.second * y.second}, p * q);
    return out;
}

}  // namespace hopfren
