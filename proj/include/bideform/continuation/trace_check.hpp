#pragma once

/**
 * @file trace_check.hpp
 * @brief Conjugation-invariant comparison of traced points and reconstructed
 * candidates against the explicit family rho_u.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bideform/bianchi/word.hpp"
#include "bideform/continuation/real.hpp"
#include "bideform/continuation/reconstruct_family.hpp"
#include "bideform/continuation/schedule.hpp"
#include "bideform/family3/family.hpp"

namespace bideform {

inline const std::vector<std::string>& trace_words() {
    static const std::vector<std::string> words{"T", "U", "TU", "TA", "UL"};
    return words;
}

struct TraceAgreement {
    Real numeric_gap = 0;  ///< max over samples and words, numeric point vs rho_u
    Rational exact_gap = 0;  ///< same for the exact candidate (0 when it matches)
    bool candidate_checked = false;
};

/// Traces of trace_words() at every sample, compared with rho_u at the
/// sample's branch value u. Needs every point to carry u.
inline TraceAgreement trace_agreement(const std::vector<PathPoint>& points, const FamilyCandidate* candidate = nullptr) {
    TraceAgreement out;
    if (candidate && candidate->variable != "u")
        throw std::domain_error("trace_agreement: candidate is not parametrized by u");
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto& pt = points[k];
        if (!pt.u) throw std::domain_error("trace_agreement: point at t = " + pt.t.to_string() + " has no rational u");
        const auto ref = rho_u(*pt.u);
        WordEvaluator<Rational> ev_ref(ref.images);
        WordEvaluator<Real> ev_num(pt.representation.images);
        std::optional<WordEvaluator<Rational>> ev_cand;
        std::vector<Matrix<Rational>> cand_images;
        if (candidate) {
            cand_images = candidate->specialize(candidate->samples.at(k));
            ev_cand.emplace(cand_images);
        }
        for (const auto& text : trace_words()) {
            const Word w = parse_word(text, ref.presentation.generator_names);
            const Rational exact = ev_ref(w).trace();
            out.numeric_gap = std::max(out.numeric_gap, Real(abs(ev_num(w).trace() - to_real(exact))));
            if (ev_cand) out.exact_gap = std::max(out.exact_gap, ((*ev_cand)(w).trace() - exact).abs());
        }
    }
    out.candidate_checked = candidate != nullptr;
    return out;
}

}  // namespace bideform
