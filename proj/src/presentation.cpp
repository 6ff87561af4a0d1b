#include "systolic/presentation.hpp"

#include <algorithm>
#include <set>

#include "systolic/errors.hpp"

namespace systolic {

namespace {

const std::string kInvSuffix = "^-1";

bool has_inv_suffix(const std::string& s) {
    return s.size() > kInvSuffix.size() &&
           s.compare(s.size() - kInvSuffix.size(), kInvSuffix.size(), kInvSuffix) == 0;
}

std::string base_name(const std::string& s) {
    return has_inv_suffix(s) ? s.substr(0, s.size() - kInvSuffix.size()) : s;
}

}  // namespace

std::optional<int> Presentation::symbol_index(const std::string& name) const {
    for (size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == name)
            return static_cast<int>(i);
    return std::nullopt;
}

Word Presentation::parse_word(const std::vector<std::string>& letters) const {
    Word w;
    w.reserve(letters.size());
    for (const auto& s : letters) {
        auto idx = symbol_index(s);
        if (!idx)
            throw InputError("unknown generator symbol \"" + s + "\" in word");
        w.push_back(*idx);
    }
    return w;
}

std::vector<std::string> Presentation::word_symbols(const Word& w) const {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (int i : w)
        out.push_back(symbol(i));
    return out;
}

std::string Presentation::word_string(const Word& w) const {
    if (w.empty())
        return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += '.';
        out += symbol(w[i]);
    }
    return out;
}

Word Presentation::free_reduce(Word w) const {
    Word out;
    for (int s : w) {
        // Involution squares survive: only distinct mutually inverse symbols
        // cancel, so declared relators like x*x keep their meaning.
        if (!out.empty() && out.back() == inverse(s) && out.back() != s)
            out.pop_back();
        else
            out.push_back(s);
    }
    return out;
}

Word Presentation::inverse_word(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(inverse(*it));
    return out;
}

Presentation symmetrize(const RawPresentation& raw) {
    std::set<std::string> seen;
    for (const auto& g : raw.generators) {
        if (g.empty())
            throw InputError("empty generator symbol");
        if (!seen.insert(g).second)
            throw InputError("duplicate generator symbol \"" + g + "\"");
    }

    // Involutions: declared, plus any relator of the shape s*s.
    std::set<std::string> involutions(raw.involutions.begin(), raw.involutions.end());
    for (const auto& r : raw.relator_words)
        if (r.size() == 2 && r[0] == r[1])
            involutions.insert(r[0]);
    for (const auto& s : involutions)
        if (!seen.count(s))
            throw InputError("involution \"" + s + "\" is not a listed generator");

    Presentation p;
    std::set<std::string> placed;
    for (const auto& g : raw.generators) {
        std::string base = base_name(g);
        if (placed.count(base))
            continue;  // formal inverse of an earlier generator
        placed.insert(base);
        p.symbols_.push_back(base);
        if (involutions.count(base)) {
            p.inverse_.push_back(static_cast<int>(p.symbols_.size()) - 1);
        } else {
            p.symbols_.push_back(base + kInvSuffix);
            int a = static_cast<int>(p.symbols_.size()) - 2;
            p.inverse_.push_back(a + 1);
            p.inverse_.push_back(a);
        }
    }

    for (const auto& r : raw.relator_words) {
        Word w = p.parse_word(r);
        w = p.free_reduce(std::move(w));
        if (!w.empty())
            p.relators_.push_back(std::move(w));
    }
    return p;
}

}  // namespace systolic
