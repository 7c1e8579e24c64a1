#include "hopfren/checks.hpp"

#include "hopfren/forest.hpp"
#include "hopfren/hopf.hpp"
#include "hopfren/laurent.hpp"
#include "hopfren/quadrature.hpp"
#include "hopfren/toymodel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace hopfren {

namespace {

class SuiteRunner {
public:
    void run(const std::string& name, const std::vector<Word>& words,
             const std::function<bool(const Word&, std::string&)>& property) {
        SuiteResult r;
        r.name = name;
        for (const auto& w : words) {
            std::string note;
            bool ok = false;
            try {
                ok = property(w, note);
            } catch (const std::exception& e) {
                note = e.what();
            }
            ++r.checked;
            if (!ok) {
                if (r.failed++ == 0) r.first_failure = w.text() + (note.empty() ? "" : " (" + note + ")");
            }
        }
        results_.push_back(std::move(r));
    }

    std::vector<SuiteResult> take() { return std::move(results_); }

private:
    std::vector<SuiteResult> results_;
};

// All ways to split the factors of w into two nonempty products.
std::vector<std::pair<Word, Word>> factor_splits(const Word& w) {
    std::vector<std::pair<Word, Word>> out;
    const auto& f = w.factors();
    if (f.size() < 2) return out;
    const std::size_t n = f.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        std::vector<IrreducibleWord> a, b;
        for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? a : b).push_back(f[i]);
        out.emplace_back(Word(std::move(a)), Word(std::move(b)));
    }
    return out;
}

int sign_for_factor_count(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

std::vector<SuiteResult> run_checks(const Alphabet& alphabet, const CheckOptions& opts) {
    const std::vector<Word> words = enumerate_words(alphabet, opts.max_len);
    std::vector<Word> toy_words, quad_words;
    for (const auto& w : words) {
        if (!is_irreducible(w)) continue;
        if (w.length() <= opts.toy_max_len) toy_words.push_back(w);
        if (w.length() <= opts.quadrature_max_len) quad_words.push_back(w);
    }

    HopfContext hopf;
    SuiteRunner runner;

    runner.run("round-trip", words, [&](const Word& w, std::string&) { return parse(render(w), alphabet) == w; });

    runner.run("grading", words, [&](const Word& w, std::string& note) {
        for (const auto& [uv, q] : hopf.coproduct(w)) {
            if (uv.first.length() + uv.second.length() != w.length()) {
                note = uv.first.text() + " ⊗ " + uv.second.text();
                return false;
            }
        }
        return true;
    });

    runner.run("coproduct-routes", words,
               [&](const Word& w, std::string&) { return hopf.coproduct(w) == coproduct_sweedler(w); });

    runner.run("coproduct-multiplicative", words, [&](const Word& w, std::string& note) {
        for (const auto& [x, y] : factor_splits(w)) {
            if (hopf.coproduct(w) != tensor2_mul(hopf.coproduct(x), hopf.coproduct(y))) {
                note = x.text() + " · " + y.text();
                return false;
            }
        }
        return true;
    });

    runner.run("coassociativity", words, [&](const Word& w, std::string&) { return hopf.coassociativity_check(w); });
    runner.run("counit-axioms", words, [&](const Word& w, std::string&) { return hopf.counit_axiom_check(w); });

    runner.run("antipode-left-right", words,
               [&](const Word& w, std::string&) { return hopf.antipode_left(w) == hopf.antipode_right(w); });

    runner.run("antipode-multiplicative", words, [&](const Word& w, std::string& note) {
        for (const auto& [x, y] : factor_splits(w)) {
            if (hopf.antipode_left(w) != mul(hopf.antipode_left(x), hopf.antipode_left(y))) {
                note = x.text() + " · " + y.text();
                return false;
            }
        }
        return true;
    });

    runner.run("antipode-signs", words, [&](const Word& w, std::string& note) {
        for (const auto& [u, q] : hopf.antipode_left(w)) {
            if (q.sign() != sign_for_factor_count(u.factors().size())) {
                note = u.text();
                return false;
            }
        }
        return true;
    });

    runner.run("antipode-involution", words, [&](const Word& w, std::string&) {
        return hopf.antipode_left(hopf.antipode_left(w)) == LinComb(w);
    });

    runner.run("hopf-axiom", words, [&](const Word& w, std::string&) { return hopf.hopf_axiom_check(w); });

    {
        HopfContext fresh(false);
        runner.run("memo-transparency", words, [&](const Word& w, std::string&) {
            return fresh.coproduct(w) == hopf.coproduct(w) && fresh.antipode_left(w) == hopf.antipode_left(w) &&
                   fresh.antipode_right(w) == hopf.antipode_right(w);
        });
    }

    ToyModel model;

    runner.run("pole-order", words, [&](const Word& w, std::string& note) {
        const int order = pole_order(phi(w));
        note = "pole order " + std::to_string(order);
        return order == static_cast<int>(w.length());
    });

    runner.run("counterterm-shape", toy_words, [&](const Word& w, std::string& note) {
        const RegValue z = model.counterterm(w);
        note = to_string(z);
        if (z.terms().size() != 1 || z.terms().begin()->first != 0) return false;
        const RationalFunction& r = z.terms().begin()->second;
        return r.num().degree() == 0 && r.den().is_monomial() && r.den().degree() == static_cast<int>(w.length());
    });

    runner.run("finiteness", toy_words, [&](const Word& w, std::string& note) {
        const LaurentSeries s = expand(model.renormalize(w), 0);
        note = to_string(s);
        return s.pole_free();
    });

    runner.run("scheme-consistency", toy_words, [&](const Word& w, std::string&) {
        const RegValue bar = model.bar_value(w);
        const RegValue z = model.counterterm(w);
        return z == -rmap(bar) && model.renormalize(w) == bar + z * phi(Word::unit());
    });

    runner.run("forest-formula", toy_words,
               [&](const Word& w, std::string&) { return forest_formula(w) == model.counterterm(w); });

    if (opts.quadrature_max_len > 0) {
        runner.run("quadrature", quad_words, [&](const Word& w, std::string& note) {
            const RegValue exact = phi(w);
            for (double c : opts.quadrature_c) {
                for (double eps : opts.quadrature_eps) {
                    const double want = exact.evaluate(c, eps);
                    const double got = quadrature_oracle(w, c, eps);
                    if (!(std::abs(got - want) <= opts.quadrature_rel_tol * std::abs(want))) {
                        std::ostringstream os;
                        os << "c=" << c << " eps=" << eps << " exact=" << want << " quadrature=" << got;
                        note = os.str();
                        return false;
                    }
                }
            }
            return true;
        });
    }

    return runner.take();
}

}  // namespace hopfren
