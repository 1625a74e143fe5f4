#include "lexirank/medal_word.hpp"

#include <ostream>
#include <utility>

namespace lexirank {

MedalWord::MedalWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
    while (!letters_.empty() && letters_.back() == 0) {
        letters_.pop_back();
    }
}

std::string MedalWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(letters_[i]);
    }
    return out;
}

std::strong_ordering lex_compare(const MedalWord& u, const MedalWord& v) {
    const std::size_t n = std::max(u.length(), v.length());
    for (std::size_t i = 0; i < n; ++i) {
        if (const auto c = u.letter(i) <=> v.letter(i); c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& out, const MedalWord& word) {
    return out << word.to_string();
}

}  // namespace lexirank
