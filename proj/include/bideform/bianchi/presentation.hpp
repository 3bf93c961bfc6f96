#pragma once

/**
 * @file presentation.hpp
 * @brief Finite presentations with relators stored as word pairs lhs = rhs,
 * and representations assigning a matrix to each generator.
 */

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bideform/bianchi/word.hpp"
#include "bideform/linalg/matrix.hpp"

namespace bideform {

struct Relator {
    Word lhs;
    Word rhs;
    std::string label;

    /// lhs * rhs^-1, the relator as a single word.
    Word full() const { return lhs * rhs.inverse(); }
};

/// Splits a relator word w = 1 as lhs = rhs with lhs the first ceil(n/2)
/// letters, which keeps both sides short.
inline Relator balanced_relator(const Word& w, std::string label) {
    std::size_t cut = (w.length() + 1) / 2;
    return Relator{w.slice(0, cut), w.slice(cut, w.length()).inverse(), std::move(label)};
}

struct Presentation {
    int d = 0;  ///< catalog key; 0 for ad hoc presentations
    std::vector<std::string> generator_names;
    std::vector<Relator> relators;
    std::vector<std::string> notes;

    std::size_t arity() const { return generator_names.size(); }

    std::size_t index_of(std::string_view name) const {
        for (std::size_t k = 0; k < generator_names.size(); ++k)
            if (generator_names[k] == name) return k;
        throw std::out_of_range("Presentation: no generator named " + std::string(name));
    }

    Word word(std::string_view text) const { return parse_word(text, generator_names); }

    /// Adds the relator w^n = 1 (balanced split).
    void add_power(std::string_view w, unsigned n) {
        std::string label = w.size() == 1 ? std::string(w) : "(" + std::string(w) + ")";
        if (n > 1) label += "^" + std::to_string(n);
        relators.push_back(balanced_relator(word(w).power(n), label));
    }
    /// Adds the relator lhs = rhs.
    void add_equation(std::string_view lhs, std::string_view rhs) {
        relators.push_back(Relator{word(lhs), word(rhs), std::string(lhs) + "=" + std::string(rhs)});
    }
    /// Adds [a,b] = 1 in the form ab = ba.
    void add_commutator(std::string_view a, std::string_view b) {
        std::string ab = std::string(a) + std::string(b), ba = std::string(b) + std::string(a);
        relators.push_back(Relator{word(ab), word(ba), "[" + std::string(a) + "," + std::string(b) + "]"});
    }
};

/// A homomorphism from the presented group, given on generators.
template <class F>
struct Representation {
    Presentation presentation;
    std::vector<Matrix<F>> images;

    std::size_t dimension() const { return images.empty() ? 0 : images.front().rows(); }
    const Matrix<F>& image(std::string_view name) const { return images.at(presentation.index_of(name)); }

    void check_shape() const {
        if (images.size() != presentation.arity())
            throw std::invalid_argument("Representation: arity mismatch (" + std::to_string(images.size()) +
                                        " images for " + std::to_string(presentation.arity()) + " generators)");
        for (const auto& m : images)
            if (!m.is_square() || m.rows() != dimension())
                throw std::invalid_argument("Representation: images must be square of equal size");
    }
};

/// Evaluates words in a fixed tuple of matrices, caching inverses.
template <class F>
class WordEvaluator {
public:
    explicit WordEvaluator(const std::vector<Matrix<F>>& images) : images_(images), inverses_(images.size()) {}

    const Matrix<F>& letter(const Letter& l) {
        if (l.exp > 0) return images_.at(l.gen);
        auto& inv = inverses_.at(l.gen);
        if (inv.rows() == 0) inv = small_inverse(images_[l.gen]);
        return inv;
    }

    Matrix<F> operator()(const Word& w) {
        Matrix<F> acc = Matrix<F>::identity(images_.empty() ? 0 : images_.front().rows());
        for (const auto& l : w.letters()) acc = acc * letter(l);
        return acc;
    }

private:
    const std::vector<Matrix<F>>& images_;
    std::vector<Matrix<F>> inverses_;
};

template <class F>
Matrix<F> evaluate_word(const Representation<F>& r, const Word& w) {
    WordEvaluator<F> ev(r.images);
    return ev(w);
}

}  // namespace bideform
