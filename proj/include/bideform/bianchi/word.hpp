#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bideform {

struct Letter {
    std::size_t gen = 0;
    int exp = 1;  ///< +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the generators; the empty word is the identity.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
        for (const auto& l : letters_)
            if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("Word: exponents must be +1 or -1");
    }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const {
        std::vector<Letter> r;
        r.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.push_back({it->gen, -it->exp});
        return Word(std::move(r));
    }

    Word power(unsigned n) const {
        std::vector<Letter> r;
        for (unsigned k = 0; k < n; ++k) r.insert(r.end(), letters_.begin(), letters_.end());
        return Word(std::move(r));
    }

    /// The subword [from, to).
    Word slice(std::size_t from, std::size_t to) const {
        return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(from),
                                        letters_.begin() + static_cast<std::ptrdiff_t>(to)));
    }

    friend Word operator*(const Word& a, const Word& b) {
        std::vector<Letter> r = a.letters_;
        r.insert(r.end(), b.letters_.begin(), b.letters_.end());
        return Word(std::move(r));
    }
    friend bool operator==(const Word&, const Word&) = default;

    /// Compact form: generator names, inverses written as lowercase letters.
    std::string to_string(const std::vector<std::string>& names) const {
        if (letters_.empty()) return "1";
        std::string out;
        for (const auto& l : letters_) {
            std::string n = names.at(l.gen);
            if (l.exp < 0)
                for (auto& c : n) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            out += n;
        }
        return out;
    }

private:
    std::vector<Letter> letters_;
};

/// Parses single-letter generator names; a lowercase letter is the inverse.
inline Word parse_word(std::string_view text, const std::vector<std::string>& names) {
    std::vector<Letter> letters;
    for (char c : text) {
        if (c == '1' || c == ' ') continue;
        char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        std::size_t g = names.size();
        for (std::size_t k = 0; k < names.size(); ++k)
            if (names[k].size() == 1 && names[k][0] == up) g = k;
        if (g == names.size())
            throw std::invalid_argument(std::string("parse_word: unknown generator '") + c + "'");
        letters.push_back({g, std::isupper(static_cast<unsigned char>(c)) ? 1 : -1});
    }
    return Word(std::move(letters));
}

}  // namespace bideform
