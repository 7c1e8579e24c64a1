#include "hopfren/word.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>

using namespace hopfren;

namespace {

const Alphabet kAbc = Alphabet::parse("x1,x2,x3");

Word w(const std::string& text, const Alphabet& a = kAbc) { return parse(text, a); }

ParseError::Kind parse_error_kind(const std::string& text) {
    try {
        (void)parse(text, kAbc);
    } catch (const ParseError& e) {
        return e.kind();
    }
    FAIL("expected a ParseError for '" << text << "'");
    return ParseError::Kind::TrailingGarbage;
}

// Emits a tree with its children in a random order (not canonical).
std::string shuffled_text(const IrreducibleWord& t, std::mt19937& rng) {
    std::vector<std::string> parts;
    for (const auto& c : t.children()) parts.push_back(shuffled_text(c, rng));
    std::shuffle(parts.begin(), parts.end(), rng);
    std::string out = "(";
    for (const auto& p : parts) out += p + " ";
    return out + t.root().name + ")";
}

// Word counts by length from the Euler transform of the tree counts:
// trees_n = letters · words_{n-1}, words_n = (1/n) Σ_k (Σ_{d|k} d·trees_d) words_{n-k}.
std::vector<long> word_counts(long letters, int max_len) {
    std::vector<long> trees(max_len + 1, 0), words(max_len + 1, 0);
    words[0] = 1;
    for (int n = 1; n <= max_len; ++n) {
        trees[n] = letters * words[n - 1];
        long acc = 0;
        for (int k = 1; k <= n; ++k) {
            long ck = 0;
            for (int d = 1; d <= k; ++d)
                if (k % d == 0) ck += d * trees[d];
            acc += ck * words[n - k];
        }
        words[n] = acc / n;
    }
    return words;
}

}  // namespace

TEST_CASE("alphabet declaration") {
    const Alphabet a = Alphabet::parse("x1, x2, y:3");
    REQUIRE(a.size() == 3);
    CHECK(a.find("x2")->weight == 2);
    CHECK(a.find("y")->weight == 3);
    CHECK(a.find("z") == nullptr);
    CHECK(Alphabet::standard().find("x9")->weight == 9);
    CHECK_THROWS_AS(Alphabet::parse("x1,x1"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet::parse("y"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet::parse("x1:0"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet::parse(""), std::invalid_argument);
}

TEST_CASE("parse: worked examples") {
    const Word unit = w("()");
    CHECK(unit.is_unit());
    CHECK(unit.factors().empty());

    const Word x = w("((x1)(x2)x1)");
    REQUIRE(is_irreducible(x));
    const IrreducibleWord& tree = x.factors().front();
    CHECK(tree.root().name == "x1");
    REQUIRE(tree.children().size() == 2);
    CHECK(tree.children()[0].text() == "(x1)");
    CHECK(tree.children()[1].text() == "(x2)");

    CHECK(w("((x2)(x1)x1)") == x);
    CHECK(w(" ( (x2) ( x1 ) x1 ) ") == x);
    CHECK(w("") == unit);
}

TEST_CASE("parse: error kinds") {
    CHECK(parse_error_kind("((x1)") == ParseError::Kind::UnbalancedBrackets);
    CHECK(parse_error_kind("(x1))") == ParseError::Kind::UnbalancedBrackets);
    CHECK(parse_error_kind(")") == ParseError::Kind::UnbalancedBrackets);
    CHECK(parse_error_kind("((x1))") == ParseError::Kind::MissingLetter);
    CHECK(parse_error_kind("(x1 x2)") == ParseError::Kind::MissingLetter);
    CHECK(parse_error_kind("(x1(x2))") == ParseError::Kind::MissingLetter);
    CHECK(parse_error_kind("(()x1)") == ParseError::Kind::MissingLetter);
    CHECK(parse_error_kind("()(x1)") == ParseError::Kind::MissingLetter);
    CHECK(parse_error_kind("(y)") == ParseError::Kind::UnknownLetter);
    CHECK(parse_error_kind("(x1)x2") == ParseError::Kind::TrailingGarbage);
    CHECK(parse_error_kind("(x1)!") == ParseError::Kind::TrailingGarbage);

    try {
        (void)parse("((x1)(q)x2)", kAbc);
        FAIL("expected UnknownLetter");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
    }
}

TEST_CASE("render") {
    CHECK(render(Word()) == "()");
    CHECK(render(Word(IrreducibleWord(*kAbc.find("x1"), {IrreducibleWord(*kAbc.find("x2"))}))) == "((x2)x1)");
    CHECK(render(Word({IrreducibleWord(*kAbc.find("x2")), IrreducibleWord(*kAbc.find("x1"))})) == "(x1)(x2)");
    // shorter factors first, then by text
    CHECK(render(w("((x1)x2)(x3)")) == "(x3)((x1)x2)");
}

TEST_CASE("length and irreducibility") {
    CHECK(length(w("()")) == 0);
    CHECK(length(w("((x1)x2)")) == 2);
    CHECK(length(w("((x1)(x2)x1)")) == 3);
    CHECK(is_irreducible(w("((x1)x2)")));
    CHECK_FALSE(is_irreducible(w("((x1)x2)(x3)")));
    CHECK_FALSE(is_irreducible(w("()")));
}

TEST_CASE("graft") {
    const Letter& x1 = *kAbc.find("x1");
    CHECK(Word(graft(w("(x2)"), x1)) == w("((x2)x1)"));
    CHECK(Word(graft(w("()"), x1)) == w("(x1)"));
    CHECK(Word(graft(w("(x1)(x2)"), x1)) == w("((x1)(x2)x1)"));
    CHECK(graft(w("((x1)x2)(x3)"), x1).weight() == 1 + 2 + 3 + 1);
}

TEST_CASE("subwords: worked examples") {
    using Pair = std::tuple<std::string, std::string, std::int64_t>;
    auto listing = [](const Word& x) {
        std::set<Pair> out;
        for (const auto& p : subwords(x)) out.insert({p.sub.text(), p.quotient.text(), p.multiplicity});
        return out;
    };

    CHECK(listing(w("(x1)")) == std::set<Pair>{{"()", "(x1)", 1}, {"(x1)", "()", 1}});
    CHECK(listing(w("((x1)x2)")) ==
          std::set<Pair>{{"()", "((x1)x2)", 1}, {"(x1)", "(x2)", 1}, {"((x1)x2)", "()", 1}});
    CHECK(listing(w("((x1)(x2)x1)")) == std::set<Pair>{{"()", "((x1)(x2)x1)", 1},
                                                       {"(x1)", "((x2)x1)", 1},
                                                       {"(x2)", "((x1)x1)", 1},
                                                       {"(x1)(x2)", "(x1)", 1},
                                                       {"((x1)(x2)x1)", "()", 1}});
    // repeated identical children: two selections give the same pair
    CHECK(listing(w("((x1)(x1)x2)")) == std::set<Pair>{{"()", "((x1)(x1)x2)", 1},
                                                       {"(x1)", "((x1)x2)", 2},
                                                       {"(x1)(x1)", "(x2)", 1},
                                                       {"((x1)(x1)x2)", "()", 1}});
    CHECK_THROWS_AS(subwords(w("(x1)(x2)")), NotIrreducible);
    CHECK_THROWS_AS(subwords(w("()")), NotIrreducible);
}

TEST_CASE("enumerate_words: small alphabets") {
    const Alphabet x = Alphabet::parse("x:1");
    auto texts = [](const std::vector<Word>& ws) {
        std::set<std::string> out;
        for (const auto& v : ws) out.insert(v.text());
        return out;
    };
    CHECK(texts(enumerate_words(x, 1)) == std::set<std::string>{"()", "(x)"});
    CHECK(texts(enumerate_words(x, 2)) == std::set<std::string>{"()", "(x)", "(x)(x)", "((x)x)"});
    const auto three = enumerate_words(x, 3);
    CHECK(three.size() == 8);
    CHECK(texts(three).count("(((x)x)x)") == 1);
    CHECK(texts(three).count("(x)((x)x)") == 1);
    CHECK(enumerate_words(kAbc, 1).size() == 4);
}

TEST_CASE("enumerate_words agrees with brute-force grammar search") {
    // Every string over {(, ), x} of up to 9 characters, kept when it parses.
    const Alphabet x = Alphabet::parse("x:1");
    std::set<std::string> found;
    std::string s;
    std::function<void()> grow = [&] {
        try {
            const Word v = parse(s, x);
            if (v.length() <= 3) found.insert(v.text());
        } catch (const ParseError&) {
        }
        if (s.size() == 9) return;
        for (char ch : {'(', ')', 'x'}) {
            s.push_back(ch);
            grow();
            s.pop_back();
        }
    };
    grow();

    std::set<std::string> enumerated;
    for (const auto& v : enumerate_words(x, 3)) enumerated.insert(v.text());
    CHECK(found == enumerated);
}

TEST_CASE("enumerate_words: counts match the Euler transform") {
    const Alphabet two = Alphabet::parse("x1,x2");
    const auto counts = word_counts(2, 6);
    const auto words = enumerate_words(two, 6);
    for (int n = 0; n <= 6; ++n) {
        const auto have = std::count_if(words.begin(), words.end(), [&](const Word& v) { return v.length() == static_cast<std::size_t>(n); });
        CHECK(have == counts[n]);
    }
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
}

TEST_CASE("properties over enumerated words") {
    const Alphabet two = Alphabet::parse("x1,x2");
    std::mt19937 rng(20241018);
    for (const auto& v : enumerate_words(two, 5)) {
        CAPTURE(v.text());
        CHECK(parse(render(v), two) == v);

        std::vector<std::string> parts;
        for (const auto& f : v.factors()) parts.push_back(shuffled_text(f, rng));
        std::shuffle(parts.begin(), parts.end(), rng);
        std::string text;
        for (const auto& p : parts) text += p;
        CHECK(parse(text, two) == v);

        CHECK(graft(v, *two.find("x2")).length() == v.length() + 1);

        if (!is_irreducible(v)) continue;
        std::size_t with_unit = 0, with_self = 0;
        for (const auto& p : subwords(v)) {
            CHECK(p.sub.length() + p.quotient.length() == v.length());
            CHECK(p.multiplicity >= 1);
            with_unit += p.sub.is_unit() ? 1 : 0;
            with_self += p.sub == v ? 1 : 0;
        }
        CHECK(with_unit == 1);
        CHECK(with_self == 1);
    }
}
