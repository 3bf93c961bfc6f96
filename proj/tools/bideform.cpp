// Command-line front end: catalog, tangent, newton, reconstruct, family, classify.
//
// Exit codes: 0 success, 1 domain error (including failed computations),
// 2 usage error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bideform/bianchi/catalog.hpp"
#include "bideform/continuation/newton.hpp"
#include "bideform/continuation/reconstruct_family.hpp"
#include "bideform/continuation/schedule.hpp"
#include "bideform/continuation/trace_check.hpp"
#include "bideform/exactfield/circle.hpp"
#include "bideform/family3/family.hpp"
#include "bideform/family3/hermitian.hpp"
#include "bideform/family3/isometry.hpp"
#include "bideform/io/json.hpp"
#include "bideform/linalg/elimination.hpp"
#include "bideform/tangent/report.hpp"

namespace {

using namespace bideform;
using io::json;

constexpr const char* kArtifact = "bideform 1.0.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Any exception thrown while parsing user-supplied values is a usage error.
Rational parse_rational_flag(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError(flag + ": not a rational number: '" + text + "'");
    }
}

class Timer {
public:
    void stage(const std::string& name, const std::function<void()>& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        timing_[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    const json& timing() const { return timing_; }

private:
    json timing_ = json::object();
};

struct Output {
    std::string path;
    bool timing = false;

    void write_text(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot write " + path);
        f << text;
    }

    void report(const std::string& command, const json& inputs, const json& results, const json& config,
                const Timer& timer) const {
        json r{{"command", command},
               {"inputs", inputs},
               {"results", results},
               {"versions", {{"artifact", kArtifact}, {"configuration", config}}}};
        if (timing) r["timing"] = timer.timing();
        write_text(r.dump(2) + "\n");
    }
};

json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

// --- catalog ---------------------------------------------------------------

int run_catalog(int d, bool all, const Output& out) {
    Timer timer;
    json results = json::array();
    timer.stage("catalog", [&] {
        if (all) {
            for (int k : kTableOrder) results.push_back(io::catalog_json(k));
        } else {
            results.push_back(io::catalog_json(d));
        }
    });
    out.report("catalog", {{"d", all ? json("all") : json(d)}}, results, json::object(), timer);
    return 0;
}

// --- tangent ---------------------------------------------------------------

int run_tangent(int d, bool all, const std::string& format, unsigned workers, const Output& out) {
    Timer timer;
    std::vector<TangentReport> reps;
    timer.stage("tangent", [&] {
        if (all) reps = tangent_table(workers);
        else reps.push_back(tangent_report(d));
    });
    if (format == "csv") {
        std::ostringstream s;
        s << io::tangent_csv_header() << "\n";
        for (const auto& r : reps) s << io::tangent_csv_row(r) << "\n";
        out.write_text(s.str());
        return 0;
    }
    json results = json::array();
    for (const auto& r : reps) results.push_back(io::tangent_json(r));
    out.report("tangent", {{"d", all ? json("all") : json(d)}, {"format", format}}, results,
               {{"workers", workers}, {"burnside_length", TangentOptions{}.burnside_length}}, timer);
    return 0;
}

// --- newton ----------------------------------------------------------------

struct NewtonArgs {
    int d = 3;
    std::string t_from = "2", t_to = "5/2";
    unsigned steps = 20;
    unsigned precision = 60;
    std::uint64_t seed = 7;
    double magnitude = 1e-3;
    double residual_target = 1e-40;
    unsigned max_iterations = 100;
};

int run_newton(const NewtonArgs& a, const Output& out) {
    if (a.d != 3) throw std::domain_error("newton: continuation is implemented for d = 3 only");
    NewtonSettings st;
    st.precision_digits = a.precision;
    st.residual_target = a.residual_target;
    st.max_iterations = a.max_iterations;
    try {
        st.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Rational t0 = parse_rational_flag("--t-from", a.t_from), t1 = parse_rational_flag("--t-to", a.t_to);
    const std::vector<Rational> ts = t_schedule(t0, t1, a.steps);

    PrecisionScope scope(a.precision);
    Timer timer;
    ScheduleResult sr;
    timer.stage("continuation", [&] { sr = trace_schedule(perturb(holonomy_real(3), a.magnitude, a.seed), ts, st); });

    json points = json::array();
    for (const auto& p : sr.points) points.push_back(io::path_point_json(p, a.precision));
    json results{{"d", a.d}, {"precision", a.precision}, {"success", sr.success}, {"points", points}};
    if (!sr.success) {
        results["failure"] = sr.failure;
        results["failed_t"] = sr.failed_t ? json(sr.failed_t->to_string()) : json(nullptr);
        results["failed_history"] = io::history_json(sr.failed_history);
    }
    json inputs{{"d", a.d},         {"t_from", a.t_from}, {"t_to", a.t_to},           {"steps", a.steps},
                {"precision", a.precision}, {"seed", a.seed}, {"magnitude", a.magnitude}};
    json config{{"residual_target", st.residual_target}, {"max_iterations", st.max_iterations}, {"damping", st.damping}};
    out.report("newton", inputs, results, config, timer);
    if (!sr.success) {
        std::cerr << "error: " << sr.failure << "\n";
        return 1;
    }
    return 0;
}

// --- reconstruct -----------------------------------------------------------

int run_reconstruct(const std::string& in, unsigned max_degree, const Output& out) {
    const json doc = read_json_file(in);
    const json& res = doc.contains("results") ? doc.at("results") : doc;
    int d = 0;
    unsigned precision = 0;
    try {
        d = res.at("d").get<int>();
        precision = res.at("precision").get<unsigned>();
    } catch (const json::exception& e) {
        throw UsageError(in + ": not a path file (" + e.what() + ")");
    }
    PrecisionScope scope(precision);
    const Presentation pres = swan_presentation(d);
    std::vector<PathPoint> points;
    for (const auto& p : res.at("points")) points.push_back(io::path_point_from_json(p, pres));

    ReconstructSettings rs;
    rs.max_degree = max_degree;
    Timer timer;
    FamilyCandidate c;
    timer.stage("reconstruct", [&] { c = reconstruct_family(points, rs); });
    json results = io::candidate_json(c);
    if (c.complete()) results["max_sample_deviation"] = format_real(max_sample_deviation(c, points), 6);
    if (c.complete() && d == 3 && c.variable == "u") {
        const auto ta = trace_agreement(points, &c);
        results["trace_agreement"] = {{"words", trace_words()},
                                      {"numeric_gap", format_real(ta.numeric_gap, 6)},
                                      {"exact_gap", ta.exact_gap.to_string()}};
    }
    out.report("reconstruct", {{"in", in}, {"max_degree", max_degree}}, results,
               {{"max_height", rs.max_height.get_str()}, {"decimals", rs.decimals}}, timer);
    if (!c.verified) {
        std::cerr << "error: candidate not verified\n";
        return 1;
    }
    return 0;
}

// --- family / classify -------------------------------------------------------

int run_family_verify(const Output& out) {
    Timer timer;
    json results;
    timer.stage("verify", [&] {
        const auto rho = rho_u_symbolic();
        json rel = json::array();
        bool all = true;
        for (const auto& v : verify_family(rho)) {
            rel.push_back({{"label", v.label}, {"verdict", v.pass ? "PASS" : "FAIL"}});
            all = all && v.pass;
        }
        Matrix<RationalFunction> tm = rho.image("T");
        for (std::size_t i = 0; i < 4; ++i) tm(i, i) -= RationalFunction(1);
        const auto cert = certify_holonomy_conjugacy();
        results = {{"relators", rel},
                   {"all_pass", all},
                   {"unimodular", unimodular(rho)},
                   {"charpoly_identity", charpoly_T() == expected_charpoly_T()},
                   {"charpoly_t_form", charpoly_T() == charpoly_t_form()},
                   {"rank_T_minus_I", rank(tm)},
                   {"T_on_circle", io::isometry_json(classify_family_T_on_circle())},
                   {"holonomy_conjugacy",
                    {{"solution_dim", cert.solution_dim},
                     {"verified", cert.verified},
                     {"conjugator", cert.verified ? io::matrix_json(cert.conjugator) : json(nullptr)}}}};
        json cp = json::array();
        const RFPoly chi = charpoly_T();
        for (const auto& c : chi.coeffs()) cp.push_back(io::ratfunc_json(c, "u"));
        results["charpoly_T"] = cp;
    });
    out.report("family verify", json::object(), results, json::object(), timer);
    return results.at("all_pass").get<bool>() ? 0 : 1;
}

json classify_payload(const Rational& q, const std::string* q2) {
    const CirclePoint p = circle_point(q);
    const QuadImag u = p.as_complex();
    json out{{"q", q.to_string()}, {"u", u.to_string()}, {"s", p.s.to_string()}, {"t", p.t.to_string()}};
    out["T"] = io::isometry_json(classify_family_T(u));
    out["discreteness"] = io::discreteness_json(discreteness_obstruction(u));
    if (q2) {
        const QuadImag v = circle_point(parse_rational_flag("--q2", *q2)).as_complex();
        out["nonconjugacy"] = {{"other", v.to_string()}, {"verdict", to_string(nonconjugacy(u, v))}};
    }
    return out;
}

int run_classify(const std::string& command, const std::string& qtext, const std::string& q2, const Output& out) {
    const Rational q = parse_rational_flag("--q", qtext);
    Timer timer;
    json results;
    timer.stage("classify", [&] { results = classify_payload(q, q2.empty() ? nullptr : &q2); });
    json inputs{{"q", qtext}};
    if (!q2.empty()) inputs["q2"] = q2;
    out.report(command, inputs, results, json::object(), timer);
    return 0;
}

int run_family_signature(const std::string& qtext, const Output& out) {
    const Rational q = parse_rational_flag("--q", qtext);
    Timer timer;
    json results;
    timer.stage("signature", [&] {
        const CirclePoint p = circle_point(q);
        const auto rep = hermitian_form_at(p.s, p.t);
        results = io::hermitian_json(rep);
        const auto forms = recovered_hermitian_forms(p);
        results["recovered_dimension"] = forms.size();
        results["recovered_matches"] = forms.size() == 1 && same_line(forms.front(), rep.form);
        results["side"] = p.s > Rational(1, 4) ? "s>1/4" : (p.s < Rational(1, 4) ? "s<1/4" : "s=1/4");
    });
    out.report("family signature", {{"q", qtext}}, results, json::object(), timer);
    return 0;
}

int run_family_wall(const Output& out) {
    Timer timer;
    json results;
    timer.stage("wall", [&] { results = io::wall_json(det_wall_analysis()); });
    out.report("family wall", json::object(), results, json::object(), timer);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deformations of Bianchi group lattices in SL(4): exact tangent spaces, continuation, family checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_option("--out", out.path, "Write the report to PATH instead of standard output");
    app.add_flag("--timing", out.timing, "Include wall-clock timing per stage");

    int d = 3;
    bool all = false;
    std::function<int()> action;

    auto* cat = app.add_subcommand("catalog", "Presentations and SL(2) generator matrices");
    auto* cat_d = cat->add_option("--d", d, "Discriminant parameter");
    auto* cat_all = cat->add_flag("--all", all, "Every catalogued d");
    cat_d->excludes(cat_all);
    cat->callback([&] {
        if (!all && cat_d->count() == 0) throw CLI::RequiredError("--d or --all");
        action = [&] { return run_catalog(d, all, out); };
    });

    std::string format = "json";
    unsigned workers = 0;
    auto* tan = app.add_subcommand("tangent", "Exact Zariski tangent space and H^1 dimensions");
    auto* tan_d = tan->add_option("--d", d, "Discriminant parameter");
    auto* tan_all = tan->add_flag("--all", all, "All nine catalogued d in table order");
    tan_d->excludes(tan_all);
    tan->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    tan->add_option("--workers", workers, "Worker threads for --all (0 = hardware concurrency)");
    tan->callback([&] {
        if (!all && tan_d->count() == 0) throw CLI::RequiredError("--d or --all");
        action = [&] { return run_tangent(d, all, format, workers, out); };
    });

    NewtonArgs na;
    auto* nt = app.add_subcommand("newton", "Perturb the holonomy and trace the pinned family");
    nt->add_option("--d", na.d, "Discriminant parameter (3)");
    nt->add_option("--t-from", na.t_from, "Start of the t range (u + 1/u for rational u)");
    nt->add_option("--t-to", na.t_to, "End of the t range (u + 1/u for rational u)");
    nt->add_option("--steps", na.steps, "Number of points, evenly spaced in u")->check(CLI::PositiveNumber);
    nt->add_option("--precision", na.precision, "Working decimal digits");
    nt->add_option("--seed", na.seed, "Perturbation seed");
    nt->add_option("--magnitude", na.magnitude, "Perturbation magnitude")->check(CLI::NonNegativeNumber);
    nt->add_option("--residual-target", na.residual_target, "Newton residual target");
    nt->add_option("--max-iterations", na.max_iterations, "Newton iteration cap per point");
    nt->callback([&] { action = [&] { return run_newton(na, out); }; });

    std::string in_path;
    unsigned max_degree = 4;
    auto* rc = app.add_subcommand("reconstruct", "Exact family from a path file");
    rc->add_option("--in", in_path, "Path file written by newton")->required();
    rc->add_option("--max-degree", max_degree, "Degree bound for numerator and denominator")->check(CLI::PositiveNumber);
    rc->callback([&] { action = [&] { return run_reconstruct(in_path, max_degree, out); }; });

    std::string q, q2;
    auto* fam = app.add_subcommand("family", "Exact checks of the Bi(3) family rho_u");
    fam->require_subcommand(1);
    fam->fallthrough();
    auto* fv = fam->add_subcommand("verify", "Relators over Q(u), characteristic polynomial, holonomy conjugacy");
    fv->callback([&] { action = [&] { return run_family_verify(out); }; });
    auto* fc = fam->add_subcommand("classify", "Isometry type and discreteness at u = circle_point(q)");
    fc->add_option("--q", q, "Circle parameter")->required();
    fc->add_option("--q2", q2, "Second circle parameter for the conjugacy test");
    fc->callback([&] { action = [&] { return run_classify("family classify", q, q2, out); }; });
    auto* fs = fam->add_subcommand("signature", "Invariant Hermitian form and its signature at circle_point(q)");
    fs->add_option("--q", q, "Circle parameter")->required();
    fs->callback([&] { action = [&] { return run_family_signature(q, out); }; });
    auto* fw = fam->add_subcommand("wall", "Determinant of H_u and its roots");
    fw->callback([&] { action = [&] { return run_family_wall(out); }; });

    auto* cl = app.add_subcommand("classify", "Same as family classify");
    cl->add_option("--q", q, "Circle parameter")->required();
    cl->add_option("--q2", q2, "Second circle parameter for the conjugacy test");
    cl->callback([&] { action = [&] { return run_classify("classify", q, q2, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : 2;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
