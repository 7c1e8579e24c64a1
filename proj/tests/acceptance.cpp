// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "hopfren/forest.hpp"
#include "hopfren/hopf.hpp"
#include "hopfren/laurent.hpp"
#include "hopfren/quadrature.hpp"
#include "hopfren/toymodel.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace hopfren;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

int failures = 0;

void report(int id, const char* title, const std::function<Verdict()>& body, double limit_seconds = 0.0) {
    const auto start = Clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0.0 && seconds >= limit_seconds)
        v.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
    if (!v.ok) ++failures;
    std::printf("[%s] %d. %s (%.3f s)%s%s\n", v.ok ? "PASS" : "FAIL", id, title, seconds,
                v.detail.empty() ? "" : ": ", v.detail.c_str());
    std::fflush(stdout);
}

const Alphabet kThree = Alphabet::parse("x1,x2,x3");
const Alphabet kTwo = Alphabet::parse("x1,x2");

Word w(const std::string& text) { return parse(text, kThree); }
std::string x(int i) { return "x" + std::to_string(i); }
std::string leaf(int i) { return "(" + x(i) + ")"; }

std::vector<Word> irreducible_up_to(std::size_t n) {
    std::vector<Word> out;
    for (auto& v : enumerate_words(kTwo, n))
        if (is_irreducible(v)) out.push_back(std::move(v));
    return out;
}

Verdict coproduct_regression() {
    Verdict v;
    HopfContext h;
    const Word e = Word::unit();
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const Word two = w("(" + leaf(i) + x(j) + ")");
            Tensor2 want;
            for (const auto& [a, b] : {std::pair{two, e}, {e, two}, {w(leaf(i)), w(leaf(j))}}) want.add_term({a, b}, 1);
            if (h.coproduct(two) != want) v.fail("Δ" + two.text());

            for (int k = 1; k <= 3; ++k) {
                const Word three = w("(" + leaf(i) + leaf(j) + x(k) + ")");
                Tensor2 want3;
                for (const auto& [a, b] : {std::pair{three, e},
                                           {e, three},
                                           {w(leaf(i)), w("(" + leaf(j) + x(k) + ")")},
                                           {w(leaf(j)), w("(" + leaf(i) + x(k) + ")")},
                                           {w(leaf(i) + leaf(j)), w(leaf(k))}})
                    want3.add_term({a, b}, 1);
                if (h.coproduct(three) != want3) v.fail("Δ" + three.text());
                // with distinct labels no two terms coincide, so every coefficient is exactly 1
                if (i != j) {
                    if (want3.terms().size() != 5) v.fail("term count for " + three.text());
                    for (const auto& [uv, q] : h.coproduct(three))
                        if (q != Rational(1)) v.fail("coefficient in Δ" + three.text());
                }
            }
        }
    }
    return v;
}

Verdict counterterm_structure() {
    Verdict v;
    ToyModel model;
    auto R = [](const RegValue& r) { return rmap(r); };
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const Word two = w("(" + leaf(i) + x(j) + ")");
            const RegValue nested2 = -R(phi(two)) + R(R(phi(w(leaf(i)))) * phi(w(leaf(j))));
            if (model.counterterm(two) != nested2) v.fail("S_R" + two.text());

            for (int k = 1; k <= 3; ++k) {
                const Word three = w("(" + leaf(i) + leaf(j) + x(k) + ")");
                const RegValue nested3 = -R(phi(three)) + R(R(phi(w(leaf(i)))) * phi(w("(" + leaf(j) + x(k) + ")"))) +
                                            R(R(phi(w(leaf(j)))) * phi(w("(" + leaf(i) + x(k) + ")"))) -
                                            R(R(phi(w(leaf(i)))) * R(phi(w(leaf(j)))) * phi(w(leaf(k))));
                if (model.counterterm(three) != nested3) v.fail("S_R" + three.text());
            }
        }
    }
    return v;
}

Verdict hopf_axiom(const std::vector<Word>& words) {
    Verdict v;
    HopfContext h;
    for (const auto& word : words) {
        const Tensor2 d = h.coproduct(word);
        const LinComb expected = unit(counit(LinComb(word)));
        const LinComb left = flatten(map_left(d, [&](const Word& u) { return h.antipode_left(u); }));
        const LinComb right = flatten(map_right(d, [&](const Word& u) { return h.antipode_left(u); }));
        if (left != expected || right != expected) v.fail(word.text());
    }
    v.detail = v.ok ? std::to_string(words.size()) + " words" : v.detail;
    return v;
}

Verdict coalgebra_axioms(const std::vector<Word>& words) {
    Verdict v;
    HopfContext h;
    for (const auto& word : words) {
        const Tensor2 d = h.coproduct(word);
        if (h.coproduct_left_iterated(word) != h.coproduct_right_iterated(word)) v.fail("coassociativity " + word.text());

        LinComb via_left, via_right;
        for (const auto& [uv, q] : d) {
            via_left += scale(q * counit(LinComb(uv.first)), LinComb(uv.second));
            via_right += scale(q * counit(LinComb(uv.second)), LinComb(uv.first));
        }
        if (via_left != LinComb(word) || via_right != LinComb(word)) v.fail("counit " + word.text());

        if (d != coproduct_sweedler(word)) v.fail("Δ routes " + word.text());
        if (h.antipode_left(word) != h.antipode_right(word)) v.fail("antipode sides " + word.text());
    }
    v.detail = v.ok ? std::to_string(words.size()) + " words" : v.detail;
    return v;
}

Verdict finiteness() {
    Verdict v;
    ToyModel model;
    const auto words = irreducible_up_to(5);
    for (const auto& word : words) {
        const LaurentSeries s = expand(model.renormalize(word), 0);
        for (const auto& [n, a] : s.coefficients())
            if (n < 0 && !a.is_zero()) v.fail(word.text() + " ε^" + std::to_string(n));
    }
    v.detail = v.ok ? std::to_string(words.size()) + " irreducible words" : v.detail;
    return v;
}

Verdict worked_example() {
    Verdict v;
    ToyModel model;
    const Word g = w("((x1)(x2)x1)");
    const LaurentSeries s = expand(model.renormalize(g));
    for (int n = -3; n <= -1; ++n)
        if (!s.coeff(n).is_zero()) v.fail("pole at ε^" + std::to_string(n));
    const LogPolynomial finite = s.coeff(0);
    if (finite != LogPolynomial({0, 0, 0, Rational(-1, 3)})) v.fail("finite part " + to_string(finite));

    const double ln2 = std::log(2.0);
    const double closed = -ln2 * ln2 * ln2 / 3.0;
    const double numeric = finite.evaluate(ln2);
    if (!(std::abs(numeric - closed) <= 1e-12)) v.fail("numeric value " + std::to_string(numeric));

    const RegValue z = model.counterterm(g);
    if (z != RegValue(RationalFunction::monomial(Rational(-5, 24), -3), 0)) v.fail("counter term " + to_string(z));
    if (v.ok) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "value at c=2 is %.12f", numeric);
        v.detail = buf;
    }
    return v;
}

Verdict forest_equivalence() {
    Verdict v;
    ToyModel model;
    const auto words = irreducible_up_to(5);
    for (const auto& word : words)
        if (forest_formula(word) != model.counterterm(word)) v.fail(word.text());
    v.detail = v.ok ? std::to_string(words.size()) + " irreducible words" : v.detail;
    return v;
}

Verdict quadrature_agreement() {
    Verdict v;
    double worst = 0.0;
    const auto words = irreducible_up_to(3);
    for (const auto& word : words) {
        const RegValue exact = phi(word);
        for (double c : {1.0, 2.0}) {
            for (double eps : {0.1, 0.25}) {
                const double want = exact.evaluate(c, eps);
                const double got = quadrature_oracle(word, c, eps);
                const double rel = std::abs(got - want) / std::abs(want);
                worst = std::max(worst, rel);
                if (!(rel <= 1e-6)) v.fail(word.text() + " at c=" + std::to_string(c) + " eps=" + std::to_string(eps));
            }
        }
    }
    if (v.ok) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%zu words, worst relative difference %.2e", words.size(), worst);
        v.detail = buf;
    }
    return v;
}

}  // namespace

int main() {
    const std::vector<Word> up_to_six = enumerate_words(kTwo, 6);

    report(1, "coproduct regression", coproduct_regression, 1.0);
    report(2, "counter-term R-nesting structure", counterterm_structure);
    report(3, "Hopf axiom, length <= 6 over {x1,x2}", [&] { return hopf_axiom(up_to_six); }, 120.0);
    report(4, "coassociativity, counit, coproduct routes, antipode sides", [&] { return coalgebra_axioms(up_to_six); });
    report(5, "toy-model finiteness, irreducible length <= 5", finiteness);
    report(6, "worked example ((x1)(x2)x1)", worked_example);
    report(7, "forest formula equals counter term, irreducible length <= 5", forest_equivalence);
    report(8, "quadrature oracle, irreducible length <= 3", quadrature_agreement, 30.0);

    std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
