#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lexirank {

// A finite word of nonnegative letters (medal counts), ordered
// lexicographically with absent trailing letters reading as 0. Canonical
// form drops trailing zeros, so (1,0) and (1) are the same word and the
// empty word is the minimum.
class MedalWord {
public:
    using Letter = std::uint64_t;

    MedalWord() = default;
    explicit MedalWord(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    // Letter at `index`, reading 0 beyond the canonical length.
    Letter letter(std::size_t index) const {
        return index < letters_.size() ? letters_[index] : 0;
    }

    // Comma-separated letters: "13,11,9"; the empty word renders as "".
    std::string to_string() const;

    friend bool operator==(const MedalWord&, const MedalWord&) = default;

private:
    std::vector<Letter> letters_;
};

// Lexicographic comparison with missing letters read as 0, so that e.g.
// (2) > (1,20) and (1,0,1) > (1).
std::strong_ordering lex_compare(const MedalWord& u, const MedalWord& v);

std::ostream& operator<<(std::ostream& out, const MedalWord& word);

}  // namespace lexirank
