#pragma once

/**
 * @file catalog.hpp
 * @brief Swan presentations of Bi(d) = PSL(2, O_d) for the nine catalogued d,
 * their SL(2) generator matrices, and relator validation.
 */

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bideform/bianchi/presentation.hpp"
#include "bideform/exactfield/quadratic.hpp"
#include "bideform/linalg/matrix.hpp"

namespace bideform {

inline constexpr std::array<int, 9> kCatalog{1, 2, 3, 5, 6, 7, 11, 15, 19};

/// Catalog order used by the dimension table.
inline constexpr std::array<int, 9> kTableOrder{3, 1, 2, 7, 11, 19, 5, 15, 6};

inline bool in_catalog(int d) {
    for (int k : kCatalog)
        if (k == d) return true;
    return false;
}

inline void require_catalog(int d) {
    if (!in_catalog(d)) throw std::domain_error("d not in catalog: " + std::to_string(d));
}

using SL2Matrix = Matrix<QuadImag>;

/// The tau used by the catalog matrices for this d.
inline QuadImag catalog_tau(int d) {
    return tau(d, d == 3 ? TauConvention::Bi3Catalog : TauConvention::Standard);
}

/// Generator matrices by name. For d = 5 the matrix C is the determinant-one
/// version [[-tau-4, -2tau], [2tau, tau-4]]; the sign of the upper right entry
/// is flipped relative to the commonly stated matrix, which has determinant 41.
inline std::map<std::string, SL2Matrix> sl2_generator_matrices(int d) {
    require_catalog(d);
    const QuadImag t = catalog_tau(d);
    const QuadImag one(1), zero(0), two(2);
    std::map<std::string, SL2Matrix> g;
    g["T"] = SL2Matrix{{one, one}, {zero, one}};
    g["U"] = SL2Matrix{{one, t}, {zero, one}};
    g["A"] = SL2Matrix{{zero, -one}, {one, zero}};
    switch (d) {
        case 1:
        case 3: g["L"] = SL2Matrix{{t.inverse(), zero}, {zero, t}}; break;
        case 19: g["B"] = SL2Matrix{{one - t, two}, {two, t}}; break;
        case 15: g["C"] = SL2Matrix{{QuadImag(4), one - two * t}, {two * t - one, QuadImag(4)}}; break;
        case 5:
            g["B"] = SL2Matrix{{-t, two}, {two, t}};
            g["C"] = SL2Matrix{{-t - QuadImag(4), -(two * t)}, {two * t, t - QuadImag(4)}};
            break;
        case 6:
            g["B"] = SL2Matrix{{-one - t, two - t}, {two, one + t}};
            g["C"] = SL2Matrix{{QuadImag(5), -(two * t)}, {two * t, QuadImag(5)}};
            break;
        default: break;
    }
    return g;
}

struct RelatorVerdict {
    std::string label;
    bool pass = false;
    bool sign_flip = false;  ///< evaluated to -identity (allowed in PSL)
};

/// PASS iff lhs * rhs^-1 evaluates to +-identity in SL(2).
template <class F>
std::vector<RelatorVerdict> validate_presentation(const Presentation& p, const Representation<F>& r) {
    if (r.images.size() != p.arity()) throw std::invalid_argument("validate_presentation: arity mismatch");
    WordEvaluator<F> ev(r.images);
    const auto id = Matrix<F>::identity(r.dimension());
    std::vector<RelatorVerdict> out;
    for (const auto& rel : p.relators) {
        Matrix<F> m = ev(rel.full());
        RelatorVerdict v{rel.label, false, false};
        if (m == id) v.pass = true;
        else if (m == -id) v.pass = v.sign_flip = true;
        out.push_back(v);
    }
    return out;
}

namespace detail {

struct PowerCandidate {
    std::string word;
    unsigned power;
};

// Adds the first candidate reading that validates in PSL(2, O_d) and records
// the choice. Throws if none does.
inline void add_validated_power(Presentation& p, const std::map<std::string, SL2Matrix>& mats,
                                const std::vector<PowerCandidate>& candidates, const std::string& stated) {
    Representation<QuadImag> r{p, {}};
    for (const auto& name : p.generator_names) r.images.push_back(mats.at(name));
    for (const auto& c : candidates) {
        Presentation trial;
        trial.generator_names = p.generator_names;
        trial.add_power(c.word, c.power);
        r.presentation = trial;
        if (validate_presentation(trial, r).front().pass) {
            p.relators.push_back(trial.relators.front());
            p.notes.push_back("relator " + stated + " evaluated as " + trial.relators.front().label +
                              (c.word == candidates.front().word ? "" : " (the literal reading fails in PSL(2,O_" +
                                                                            std::to_string(p.d) + "))"));
            return;
        }
    }
    throw std::logic_error("catalog: no reading of " + stated + " validates");
}

}  // namespace detail

/// The Swan presentation of Bi(d) with relators as word pairs.
inline Presentation swan_presentation(int d) {
    require_catalog(d);
    const auto mats = sl2_generator_matrices(d);
    Presentation p;
    p.d = d;
    switch (d) {
        case 1:
            p.generator_names = {"T", "U", "L", "A"};
            p.add_commutator("T", "U");
            p.add_power("L", 2);
            p.add_power("TL", 2);
            p.add_power("UL", 2);
            p.add_power("AL", 2);
            p.add_power("A", 2);
            p.add_power("TA", 3);
            p.add_power("UAL", 3);
            break;
        case 3:
            p.generator_names = {"T", "U", "L", "A"};
            p.add_commutator("T", "U");
            p.add_power("L", 3);
            p.add_power("AL", 2);
            p.add_power("A", 2);
            p.add_power("TA", 3);
            p.add_power("UAL", 3);
            p.add_equation("lUL", "T");
            p.add_equation("lTL", "tu");
            p.notes.push_back("tau = (-1+i*sqrt3)/2 for the generator matrices");
            break;
        case 2:
            p.generator_names = {"T", "U", "A"};
            p.add_commutator("T", "U");
            p.add_power("A", 2);
            p.add_power("TA", 3);
            p.add_power("AuAU", 2);
            break;
        case 7:
            p.generator_names = {"T", "U", "A"};
            p.add_commutator("T", "U");
            p.add_power("A", 2);
            p.add_power("TA", 3);
            p.add_power("ATuAU", 2);
            break;
        case 11:
            p.generator_names = {"T", "U", "A"};
            p.add_commutator("T", "U");
            p.add_power("A", 2);
            p.add_power("TA", 3);
            p.add_power("ATuAU", 3);
            break;
        case 19:
            p.generator_names = {"T", "U", "A", "B"};
            p.add_commutator("T", "U");
            p.add_power("A", 2);
            p.add_power("TA", 3);
            p.add_power("B", 3);
            p.add_power("Bt", 3);
            p.add_power("AB", 2);
            detail::add_validated_power(p, mats, {{"AtUBu", 2}, {"ATUBu", 2}, {"AtuBU", 2}}, "(AT{-1}UBU^{-1})^2");
            break;
        case 15:
            p.generator_names = {"T", "U", "A", "C"};
            p.add_commutator("T", "U");
            p.add_commutator("A", "C");
            p.add_power("A", 2);
            p.add_power("TA", 3);
            p.add_equation("UCUAT", "TAUCU");
            break;
        case 5:
            p.generator_names = {"T", "U", "A", "B", "C"};
            p.add_commutator("T", "U");
            p.add_power("A", 2);
            p.add_power("TA", 3);
            p.add_power("B", 2);
            p.add_power("AB", 2);
            detail::add_validated_power(p, mats, {{"ATUBu", 2}, {"AtUBu", 2}, {"AUBu", 2}}, "(ATUBU^{-1})^2");
            p.add_equation("ACA", "TCt");
            p.add_equation("TCt", "UBuCB");
            p.notes.push_back("C = [[-tau-4, -2tau], [2tau, tau-4]]; upper right entry +2tau would give det 41");
            break;
        case 6:
            p.generator_names = {"T", "U", "A", "B", "C"};
            p.add_commutator("T", "U");
            p.add_commutator("A", "C");
            p.add_power("A", 2);
            p.add_power("TA", 3);
            p.add_power("B", 2);
            p.add_power("ATB", 3);
            p.add_power("ATUBu", 3);
            p.add_equation("CTUB", "TBCU");
            break;
        default: break;
    }
    return p;
}

/// The catalog generators as 2x2 matrices over Q(i sqrt d).
inline Representation<QuadImag> sl2_generators(int d) {
    Representation<QuadImag> r{swan_presentation(d), {}};
    const auto mats = sl2_generator_matrices(d);
    for (const auto& name : r.presentation.generator_names) r.images.push_back(mats.at(name));
    return r;
}

}  // namespace bideform
