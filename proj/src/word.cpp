#include "hopfren/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace hopfren {

namespace {

bool is_ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
bool is_ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }
bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

std::strong_ordering canonical_compare(std::size_t la, const std::string& ta, std::size_t lb,
                                       const std::string& tb) {
    if (la != lb) return la <=> lb;
    const int c = ta.compare(tb);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

}  // namespace

// ---------------------------------------------------------------------------
// Alphabet

std::optional<int> suffix_weight(std::string_view name) {
    std::size_t i = name.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
    if (i == name.size() || name.size() - i > 9) return std::nullopt;
    const int w = std::stoi(std::string(name.substr(i)));
    if (w < 1) return std::nullopt;
    return w;
}

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
    std::set<std::string> seen;
    for (const auto& l : letters_) {
        if (l.name.empty() || !is_ident_start(l.name.front()) ||
            !std::all_of(l.name.begin(), l.name.end(), is_ident_char))
            throw std::invalid_argument("invalid letter name '" + l.name + "'");
        if (l.weight < 1) throw std::invalid_argument("letter '" + l.name + "' has non-positive weight");
        if (!seen.insert(l.name).second) throw std::invalid_argument("duplicate letter '" + l.name + "'");
    }
}

Alphabet Alphabet::parse(std::string_view spec) {
    std::vector<Letter> letters;
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        std::string item(spec.substr(0, comma));
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        item.erase(std::remove_if(item.begin(), item.end(), is_space), item.end());
        if (item.empty()) continue;

        Letter letter;
        const auto colon = item.find(':');
        letter.name = item.substr(0, colon);
        if (colon != std::string::npos) {
            const std::string w = item.substr(colon + 1);
            if (w.empty() || !std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw std::invalid_argument("invalid weight in '" + item + "'");
            letter.weight = std::stoi(w);
        } else if (auto w = suffix_weight(letter.name)) {
            letter.weight = *w;
        } else {
            throw std::invalid_argument("letter '" + letter.name + "' needs an explicit weight (name:w)");
        }
        letters.push_back(std::move(letter));
    }
    if (letters.empty()) throw std::invalid_argument("empty alphabet");
    return Alphabet(std::move(letters));
}

Alphabet Alphabet::standard() {
    std::vector<Letter> letters;
    for (int i = 1; i <= 9; ++i) letters.push_back({"x" + std::to_string(i), i});
    return Alphabet(std::move(letters));
}

const Letter* Alphabet::find(std::string_view name) const {
    for (const auto& l : letters_)
        if (l.name == name) return &l;
    return nullptr;
}

// ---------------------------------------------------------------------------
// Words

IrreducibleWord::IrreducibleWord(Letter root, std::vector<IrreducibleWord> children)
    : root_(std::move(root)), children_(std::move(children)) {
    std::sort(children_.begin(), children_.end());
    text_ = "(";
    length_ = 1;
    weight_ = root_.weight;
    for (const auto& c : children_) {
        text_ += c.text_;
        length_ += c.length_;
        weight_ += c.weight_;
    }
    text_ += root_.name;
    text_ += ')';
}

std::strong_ordering operator<=>(const IrreducibleWord& a, const IrreducibleWord& b) {
    return canonical_compare(a.length_, a.text_, b.length_, b.text_);
}

Word::Word(IrreducibleWord factor) : Word(std::vector<IrreducibleWord>{std::move(factor)}) {}

Word::Word(std::vector<IrreducibleWord> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    if (factors_.empty()) return;
    text_.clear();
    for (const auto& f : factors_) {
        text_ += f.text();
        length_ += f.length();
    }
}

Word operator*(const Word& a, const Word& b) {
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    std::vector<IrreducibleWord> f = a.factors_;
    f.insert(f.end(), b.factors_.begin(), b.factors_.end());
    return Word(std::move(f));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return canonical_compare(a.length_, a.text_, b.length_, b.text_);
}

IrreducibleWord graft(const Word& w, const Letter& letter) { return IrreducibleWord(letter, w.factors()); }

// ---------------------------------------------------------------------------
// Parser

ParseError::ParseError(Kind kind, std::size_t position, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + " at position " + std::to_string(position) + ": " + detail),
      kind_(kind),
      position_(position) {}

const char* to_string(ParseError::Kind kind) {
    switch (kind) {
        case ParseError::Kind::UnbalancedBrackets: return "UnbalancedBrackets";
        case ParseError::Kind::MissingLetter: return "MissingLetter";
        case ParseError::Kind::UnknownLetter: return "UnknownLetter";
        case ParseError::Kind::TrailingGarbage: return "TrailingGarbage";
    }
    return "ParseError";
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    Word run() {
        std::vector<IrreducibleWord> factors;
        bool saw_unit = false;
        skip_space();
        while (pos_ < text_.size()) {
            const char ch = text_[pos_];
            if (ch == ')') throw ParseError(ParseError::Kind::UnbalancedBrackets, pos_, "unmatched ')'");
            if (ch != '(') throw ParseError(ParseError::Kind::TrailingGarbage, pos_, "expected '(' between factors");
            if (is_empty_pair()) {
                saw_unit = true;
                skip_space();
                continue;
            }
            factors.push_back(factor());
            skip_space();
        }
        if (saw_unit && !factors.empty())
            throw ParseError(ParseError::Kind::MissingLetter, text_.find('('), "'()' is only valid as the whole unit word");
        return Word(std::move(factors));
    }

private:
    // Consumes "( )" if it starts at pos_.
    bool is_empty_pair() {
        std::size_t p = pos_ + 1;
        while (p < text_.size() && is_space(text_[p])) ++p;
        if (p < text_.size() && text_[p] == ')') {
            pos_ = p + 1;
            return true;
        }
        return false;
    }

    IrreducibleWord factor() {
        const std::size_t open = pos_++;
        std::vector<IrreducibleWord> children;
        for (;;) {
            skip_space();
            if (pos_ >= text_.size())
                throw ParseError(ParseError::Kind::UnbalancedBrackets, open, "'(' is never closed");
            const char ch = text_[pos_];
            if (ch == '(') {
                children.push_back(factor());
            } else if (ch == ')') {
                throw ParseError(ParseError::Kind::MissingLetter, pos_, "bracket closes without a letter");
            } else if (is_ident_start(ch)) {
                break;
            } else {
                throw ParseError(ParseError::Kind::TrailingGarbage, pos_, std::string("unexpected character '") + ch + "'");
            }
        }

        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        const auto name = text_.substr(start, pos_ - start);
        const Letter* letter = alphabet_.find(name);
        if (letter == nullptr)
            throw ParseError(ParseError::Kind::UnknownLetter, start, "letter '" + std::string(name) + "' is not declared");

        skip_space();
        if (pos_ >= text_.size())
            throw ParseError(ParseError::Kind::UnbalancedBrackets, open, "'(' is never closed");
        if (text_[pos_] != ')') {
            if (text_[pos_] == '(' || is_ident_start(text_[pos_]))
                throw ParseError(ParseError::Kind::MissingLetter, pos_, "the letter must be the last item before ')'");
            throw ParseError(ParseError::Kind::TrailingGarbage, pos_, std::string("unexpected character '") + text_[pos_] + "'");
        }
        ++pos_;
        return IrreducibleWord(*letter, std::move(children));
    }

    void skip_space() {
        while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

}  // namespace

Word parse(std::string_view text, const Alphabet& alphabet) { return Parser(text, alphabet).run(); }

// ---------------------------------------------------------------------------
// Subwords

namespace {

// A way of cutting inside a tree while keeping its root.
struct KeptCut {
    std::vector<IrreducibleWord> cut;
    std::vector<IrreducibleWord> kept_children;
    std::int64_t multiplicity;
};

using CutTable = std::map<std::pair<Word, Word>, std::int64_t>;

// Cuts of `node` that keep its root: each child is either cut off whole or kept
// with some cut of its own.
CutTable keep_root_cuts(const IrreducibleWord& node) {
    std::vector<KeptCut> partial{{{}, {}, 1}};
    for (const auto& child : node.children()) {
        const CutTable child_cuts = keep_root_cuts(child);
        std::vector<KeptCut> next;
        next.reserve(partial.size() * (child_cuts.size() + 1));
        for (const auto& p : partial) {
            KeptCut whole = p;
            whole.cut.push_back(child);
            next.push_back(std::move(whole));
            for (const auto& [key, mult] : child_cuts) {
                KeptCut k = p;
                k.cut.insert(k.cut.end(), key.first.factors().begin(), key.first.factors().end());
                k.kept_children.push_back(key.second.factors().front());
                k.multiplicity *= mult;
                next.push_back(std::move(k));
            }
        }
        partial = std::move(next);
    }

    CutTable table;
    for (auto& p : partial) {
        Word sub(std::move(p.cut));
        Word rest(IrreducibleWord(node.root(), std::move(p.kept_children)));
        table[{std::move(sub), std::move(rest)}] += p.multiplicity;
    }
    return table;
}

}  // namespace

std::vector<SubwordPair> subwords(const IrreducibleWord& w) {
    CutTable table = keep_root_cuts(w);
    table[{Word(w), Word::unit()}] += 1;
    std::vector<SubwordPair> out;
    out.reserve(table.size());
    for (auto& [key, mult] : table) out.push_back({key.first, key.second, mult});
    return out;
}

std::vector<SubwordPair> subwords(const Word& w) {
    if (!is_irreducible(w)) throw NotIrreducible(w.text());
    return subwords(w.factors().front());
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void collect_multisets(const std::vector<IrreducibleWord>& pool, std::size_t start, std::size_t remaining,
                       std::vector<IrreducibleWord>& current, std::vector<Word>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        if (pool[i].length() > remaining) break;  // pool is sorted by length first
        current.push_back(pool[i]);
        collect_multisets(pool, i, remaining - pool[i].length(), current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len) {
    std::vector<std::vector<Word>> by_length{{Word::unit()}};
    std::vector<IrreducibleWord> pool;
    for (std::size_t n = 1; n <= max_len; ++n) {
        std::vector<IrreducibleWord> trees;
        for (const auto& letter : alphabet.letters())
            for (const auto& below : by_length[n - 1]) trees.push_back(graft(below, letter));
        std::sort(trees.begin(), trees.end());
        pool.insert(pool.end(), trees.begin(), trees.end());

        std::vector<Word> words;
        std::vector<IrreducibleWord> current;
        collect_multisets(pool, 0, n, current, words);
        std::sort(words.begin(), words.end());
        by_length.push_back(std::move(words));
    }

    std::vector<Word> all;
    for (auto& ws : by_length) all.insert(all.end(), ws.begin(), ws.end());
    return all;
}

}  // namespace hopfren
