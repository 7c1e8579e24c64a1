#pragma once

// Parenthesized words: rooted forests whose nodes carry letters.
//
//   word   := factor*
//   factor := '(' factor* letter ')'
//
// A factor is an irreducible word (one tree); a word is a commutative product
// of factors. The empty product is the unit e, rendered "()".

#include <compare>
#include <functional>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopfren {

struct Letter {
    std::string name;
    int weight = 1;  ///< loop order; only the toy model reads it

    friend bool operator==(const Letter& a, const Letter& b) { return a.name == b.name; }
};

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Letter> letters);

    /// "x1,x2,y:3" -- a letter without ":w" takes the numeric suffix of its name as weight.
    static Alphabet parse(std::string_view spec);
    /// x1..x9 with weight = subscript.
    static Alphabet standard();

    [[nodiscard]] const Letter* find(std::string_view name) const;
    [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
    [[nodiscard]] std::size_t size() const { return letters_.size(); }

private:
    std::vector<Letter> letters_;
};

/// Weight implied by a letter name's numeric suffix ("x12" -> 12), if any.
std::optional<int> suffix_weight(std::string_view name);

/// One tree: a root letter above a canonically ordered multiset of subtrees.
class IrreducibleWord {
public:
    IrreducibleWord(Letter root, std::vector<IrreducibleWord> children = {});

    [[nodiscard]] const Letter& root() const { return root_; }
    [[nodiscard]] const std::vector<IrreducibleWord>& children() const { return children_; }
    [[nodiscard]] const std::string& text() const { return text_; }
    [[nodiscard]] std::size_t length() const { return length_; }
    /// Sum of letter weights over the whole tree.
    [[nodiscard]] int weight() const { return weight_; }

    friend bool operator==(const IrreducibleWord& a, const IrreducibleWord& b) { return a.text_ == b.text_; }
    /// Canonical order: by length, then by rendered text.
    friend std::strong_ordering operator<=>(const IrreducibleWord& a, const IrreducibleWord& b);

private:
    Letter root_;
    std::vector<IrreducibleWord> children_;
    std::string text_;
    std::size_t length_ = 0;
    int weight_ = 0;
};

/// Commutative product of irreducible words; the empty product is the unit.
class Word {
public:
    Word() = default;
    Word(IrreducibleWord factor);  // NOLINT(google-explicit-constructor)
    explicit Word(std::vector<IrreducibleWord> factors);

    static Word unit() { return {}; }

    [[nodiscard]] const std::vector<IrreducibleWord>& factors() const { return factors_; }
    [[nodiscard]] bool is_unit() const { return factors_.empty(); }
    [[nodiscard]] const std::string& text() const { return text_; }
    [[nodiscard]] std::size_t length() const { return length_; }

    friend Word operator*(const Word& a, const Word& b);

    friend bool operator==(const Word& a, const Word& b) { return a.text_ == b.text_; }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::vector<IrreducibleWord> factors_;
    std::string text_ = "()";
    std::size_t length_ = 0;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept { return std::hash<std::string>{}(w.text()); }
};

class ParseError : public std::runtime_error {
public:
    enum class Kind { UnbalancedBrackets, MissingLetter, UnknownLetter, TrailingGarbage };

    ParseError(Kind kind, std::size_t position, const std::string& detail);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

const char* to_string(ParseError::Kind kind);

class NotIrreducible : public std::invalid_argument {
public:
    explicit NotIrreducible(const std::string& word)
        : std::invalid_argument("word is not irreducible: " + word) {}
};

Word parse(std::string_view text, const Alphabet& alphabet);
inline const std::string& render(const Word& w) { return w.text(); }
inline std::size_t length(const Word& w) { return w.length(); }
inline bool is_irreducible(const Word& w) { return w.factors().size() == 1; }

/// (W x): a new root `letter` above the factors of `w`.
IrreducibleWord graft(const Word& w, const Letter& letter);

/// A subword U of an irreducible word together with the quotient w/U.
struct SubwordPair {
    Word sub;
    Word quotient;
    std::int64_t multiplicity = 1;  ///< number of node selections yielding this pair
};

/// All (U, w/U) with U a product of disjoint subtrees of w, including (e, w)
/// and (w, e). Identical pairs from distinct selections are merged.
std::vector<SubwordPair> subwords(const IrreducibleWord& w);
std::vector<SubwordPair> subwords(const Word& w);

/// Every canonical word of length <= max_len, sorted canonically (unit first).
std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len);

}  // namespace hopfren
