#pragma once

/**
 * @file json.hpp
 * @brief JSON encodings of reports, path points and family candidates.
 *
 * Exact scalars are always strings ("a/b", "a+b*sqrtD", "a+b*isqrtD").
 * Rational functions carry both a readable form and coefficient lists:
 *     {"text": "(u-1)/(u+1)", "num": ["-1", "1"], "den": ["1", "1"]}
 * with coefficients listed from the constant term up. Numeric matrix entries
 * are scientific decimal strings at the working precision.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bideform/bianchi/catalog.hpp"
#include "bideform/continuation/reconstruct_family.hpp"
#include "bideform/continuation/schedule.hpp"
#include "bideform/exactfield/polynomial.hpp"
#include "bideform/exactfield/rational_function.hpp"
#include "bideform/family3/hermitian.hpp"
#include "bideform/family3/isometry.hpp"
#include "bideform/tangent/tangent.hpp"

namespace bideform::io {

using nlohmann::json;

template <class F>
json matrix_json(const Matrix<F>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json poly_json(const QPoly& p) {
    json c = json::array();
    for (const auto& q : p.coeffs()) c.push_back(q.to_string());
    return c;
}

inline QPoly poly_from_json(const json& j) {
    std::vector<Rational> c;
    for (const auto& s : j) c.push_back(Rational::parse(s.get<std::string>()));
    return QPoly(std::move(c));
}

inline json ratfunc_json(const RationalFunction& f, const std::string& var) {
    return json{{"text", f.to_string(var)}, {"num", poly_json(f.numerator())}, {"den", poly_json(f.denominator())}};
}

inline RationalFunction ratfunc_from_json(const json& j) {
    return RationalFunction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

inline json tangent_json(const TangentReport& r) {
    return json{{"d", r.d},
                {"ambient_dim", r.ambient_dim},
                {"jacobian_shape", {r.jacobian_rows, r.ambient_dim}},
                {"jacobian_rank", r.jacobian_rank},
                {"kernel_dim", r.kernel_dim},
                {"cocycle_dim", r.cocycle_dim},
                {"b1_dim", r.b1_dim},
                {"h1_dim", r.h1_dim},
                {"irreducible", r.irreducible}};
}

inline std::string tangent_csv_header() { return "d,jacobian_rows,jacobian_cols,rank,kernel_dim,cocycle_dim,b1,h1,irreducible"; }

inline std::string tangent_csv_row(const TangentReport& r) {
    return std::to_string(r.d) + "," + std::to_string(r.jacobian_rows) + "," + std::to_string(r.ambient_dim) + "," +
           std::to_string(r.jacobian_rank) + "," + std::to_string(r.kernel_dim) + "," + std::to_string(r.cocycle_dim) +
           "," + std::to_string(r.b1_dim) + "," + std::to_string(r.h1_dim) + "," + (r.irreducible ? "true" : "false");
}

inline json presentation_json(const Presentation& p) {
    json rels = json::array();
    for (const auto& r : p.relators)
        rels.push_back({{"label", r.label}, {"lhs", r.lhs.to_string(p.generator_names)},
                        {"rhs", r.rhs.to_string(p.generator_names)}});
    return json{{"d", p.d}, {"generators", p.generator_names}, {"relators", rels}, {"notes", p.notes}};
}

inline json catalog_json(int d) {
    const Presentation p = swan_presentation(d);
    json out = presentation_json(p);
    out["tau"] = catalog_tau(d).to_string();
    json mats = json::object();
    for (const auto& [name, m] : sl2_generator_matrices(d)) mats[name] = matrix_json(m);
    out["sl2_generators"] = mats;
    json checks = json::array();
    for (const auto& v : validate_presentation(p, sl2_generators(d)))
        checks.push_back({{"label", v.label}, {"pass", v.pass}, {"sign_flip", v.sign_flip}});
    out["relator_checks"] = checks;
    return out;
}

inline json isometry_json(const IsometryVerdict& v) {
    json eig = json::array();
    for (const auto& e : v.eigen_data)
        eig.push_back({{"value", e.value},
                       {"algebraic_multiplicity", e.algebraic_multiplicity},
                       {"geometric_multiplicity", e.geometric_multiplicity},
                       {"unit_modulus", e.unit_modulus}});
    return json{{"class", to_string(v.cls)}, {"diagonalizable", v.diagonalizable}, {"eigen_data", eig}};
}

inline json discreteness_json(const DiscretenessReport& r) {
    json out{{"verdict", to_string(r.verdict)}, {"minimal_polynomial", poly_json(r.minimal_polynomial)}};
    if (r.order) {
        out["order"] = *r.order;
        out["torsion_verified"] = r.torsion_verified;
    }
    return out;
}

inline json inertia_json(const Inertia& i) {
    return json{{"positive", i.positives}, {"negative", i.negatives}, {"zero", i.zeros}};
}

inline json hermitian_json(const HermitianFormReport& r) {
    json inv = json::object();
    for (const auto& [g, ok] : r.invariant) inv[g] = ok;
    return json{{"s", r.point.s.to_string()},
                {"t", r.point.t.to_string()},
                {"form", matrix_json(r.form)},
                {"invariant", inv},
                {"signature", inertia_json(r.signature)}};
}

inline json wall_json(const WallReport& w) {
    json roots = json::array(), adm = json::array();
    for (const auto& r : w.roots) roots.push_back(r.to_string());
    for (const auto& r : w.admissible_roots) adm.push_back(r.to_string());
    return json{{"determinant", poly_json(w.determinant)},
                {"determinant_text", w.determinant.to_string("s")},
                {"rational_roots_in_interval", roots},
                {"real_roots_in_interval", w.real_roots_in_interval},
                {"admissible_roots", adm},
                {"quarter_is_only_wall", w.quarter_is_only_wall()}};
}

inline json history_json(const std::vector<double>& h) {
    json out = json::array();
    for (double x : h) out.push_back(x);
    return out;
}

inline json path_point_json(const PathPoint& p, std::size_t digits) {
    json images = json::object();
    const auto& names = p.representation.presentation.generator_names;
    for (std::size_t g = 0; g < names.size(); ++g) {
        const auto& m = p.representation.images[g];
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_real(m(i, j), digits));
            rows.push_back(std::move(row));
        }
        images[names[g]] = std::move(rows);
    }
    json out{{"t", p.t.to_string()},
             {"residual", p.residual},
             {"iterations", p.iterations},
             {"charpoly_check", p.charpoly_check},
             {"history", history_json(p.history)},
             {"images", images}};
    out["u"] = p.u ? json(p.u->to_string()) : json(nullptr);
    return out;
}

/// Inverse of path_point_json; the presentation comes from the catalog.
inline PathPoint path_point_from_json(const json& j, const Presentation& p) {
    PathPoint pt;
    pt.t = Rational::parse(j.at("t").get<std::string>());
    if (!j.at("u").is_null()) pt.u = Rational::parse(j.at("u").get<std::string>());
    pt.residual = j.at("residual").get<double>();
    pt.iterations = j.at("iterations").get<unsigned>();
    pt.charpoly_check = j.at("charpoly_check").get<bool>();
    for (const auto& h : j.at("history")) pt.history.push_back(h.get<double>());
    pt.representation.presentation = p;
    for (const auto& name : p.generator_names) {
        const json& rows = j.at("images").at(name);
        Matrix<Real> m(rows.size(), rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw std::invalid_argument("path point: image is not square");
            for (std::size_t k = 0; k < rows.size(); ++k) m(i, k) = parse_real(rows[i][k].get<std::string>());
        }
        pt.representation.images.push_back(std::move(m));
    }
    pt.representation.check_shape();
    return pt;
}

inline json candidate_json(const FamilyCandidate& c) {
    json entries = json::object();
    for (std::size_t g = 0; g < c.entries.size(); ++g) {
        const auto& m = c.entries[g];
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ratfunc_json(m(i, j), c.variable));
            rows.push_back(std::move(row));
        }
        entries[c.presentation.generator_names[g]] = std::move(rows);
    }
    json samples = json::array(), checks = json::array();
    for (const auto& s : c.samples) samples.push_back(s.to_string());
    for (const auto& [label, ok] : c.relator_checks) checks.push_back({{"label", label}, {"pass", ok}});
    return json{{"variable", c.variable},
                {"d", c.presentation.d},
                {"generators", c.presentation.generator_names},
                {"entries", entries},
                {"samples", samples},
                {"failed_entries", c.failed_entries},
                {"relator_checks", checks},
                {"unimodular", c.unimodular},
                {"verified", c.verified}};
}

/// Reads the entries back and re-runs the exact verification.
inline FamilyCandidate candidate_from_json(const json& j) {
    FamilyCandidate c;
    c.variable = j.at("variable").get<std::string>();
    c.presentation = swan_presentation(j.at("d").get<int>());
    for (const auto& s : j.at("samples")) c.samples.push_back(Rational::parse(s.get<std::string>()));
    for (const auto& f : j.at("failed_entries")) c.failed_entries.push_back(f.get<std::string>());
    for (const auto& name : c.presentation.generator_names) {
        const json& rows = j.at("entries").at(name);
        Matrix<RationalFunction> m(rows.size(), rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t k = 0; k < rows.size(); ++k) m(i, k) = ratfunc_from_json(rows[i][k]);
        c.entries.push_back(std::move(m));
    }
    verify_candidate(c);
    return c;
}

}  // namespace bideform::io
