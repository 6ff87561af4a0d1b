#pragma once

#include <optional>
#include <string>
#include <vector>

namespace systolic {

// Words are sequences of symbol indices into Presentation::symbols().
using Word = std::vector<int>;

struct RawPresentation {
    std::vector<std::string> generators;
    std::vector<std::string> involutions;               // declared s = s^-1
    std::vector<std::vector<std::string>> relator_words;
};

// Finitely presented group with a symmetric generating set. A non-involution
// generator "t" gets the formal inverse symbol "t^-1"; involutions are a
// single self-inverse symbol. Relators are stored freely reduced, except that
// involution squares are kept (they carry the involution itself).
class Presentation {
public:
    int symbol_count() const { return static_cast<int>(symbols_.size()); }
    const std::string& symbol(int i) const { return symbols_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& symbols() const { return symbols_; }
    int inverse(int i) const { return inverse_[static_cast<size_t>(i)]; }
    bool is_involution(int i) const { return inverse_[static_cast<size_t>(i)] == i; }
    std::optional<int> symbol_index(const std::string& name) const;

    const std::vector<Word>& relators() const { return relators_; }

    Word parse_word(const std::vector<std::string>& letters) const;  // throws on unknown symbol
    std::vector<std::string> word_symbols(const Word& w) const;
    std::string word_string(const Word& w) const;  // "." separated; "1" for the empty word

    Word free_reduce(Word w) const;   // cancels adjacent mutually inverse distinct symbols
    Word inverse_word(const Word& w) const;

    friend Presentation symmetrize(const RawPresentation& raw);

private:
    std::vector<std::string> symbols_;
    std::vector<int> inverse_;
    std::vector<Word> relators_;
};

// Closes the generating set under inverses; involutions are taken from the
// declaration plus any relator of the shape s*s.
Presentation symmetrize(const RawPresentation& raw);

}  // namespace systolic
