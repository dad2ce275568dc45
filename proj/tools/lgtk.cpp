#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgtk/koszul_complex.hpp"
#include "lgtk/problem_file.hpp"
#include "lgtk/rational_points.hpp"
#include "lgtk/tft_check.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

struct GlobalFlags {
    std::string order = "grevlex";
    std::string format = "text";
    long budget = 1'000'000;
    std::uint64_t seed = 0;
    bool timings = false;
};

lgtk::MonomialOrder make_order(const GlobalFlags& g) {
    return lgtk::MonomialOrder(g.order == "lex" ? lgtk::OrderKind::lex : lgtk::OrderKind::grevlex);
}

lgtk::GroebnerOptions make_groebner(const GlobalFlags& g) {
    lgtk::GroebnerOptions opts;
    opts.step_budget = g.budget;
    return opts;
}

// Flat "path: value" projection of the JSON report; both formats carry the
// same values so they can be diffed against each other.
void render_text(const ordered_json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            render_text(value, prefix.empty() ? key : prefix + "." + key, os);
    } else if (j.is_array()) {
        std::size_t k = 0;
        for (const auto& value : j) render_text(value, prefix + "[" + std::to_string(k++) + "]", os);
        if (j.empty()) os << prefix << ": []\n";
    } else if (j.is_string()) {
        os << prefix << ": " << j.get<std::string>() << "\n";
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

void emit(const ordered_json& j, const GlobalFlags& g) {
    if (g.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        render_text(j, "", std::cout);
}

ordered_json json_poly_matrix(const lgtk::PolyMatrix& m, const std::vector<std::string>& vars,
                              const lgtk::MonomialOrder& order) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(lgtk::to_string(m.at(r, c), vars, order));
        rows.push_back(row);
    }
    return rows;
}

ordered_json json_morphism(const lgtk::Morphism& m, const std::vector<std::string>& vars,
                           const lgtk::MonomialOrder& order) {
    ordered_json j;
    lgtk::Parity p = m.parity();
    j["parity"] = lgtk::parity_name(p);
    if (p == lgtk::Parity::odd) {
        j["eo"] = json_poly_matrix(m.mat.eo(), vars, order);
        j["oe"] = json_poly_matrix(m.mat.oe(), vars, order);
    } else {
        j["ee"] = json_poly_matrix(m.mat.ee(), vars, order);
        j["oo"] = json_poly_matrix(m.mat.oo(), vars, order);
    }
    return j;
}

int cmd_milnor(const std::string& path, const GlobalFlags& g) {
    lgtk::ProblemFile pf = lgtk::load_problem(path);
    lgtk::MonomialOrder order = make_order(g);
    lgtk::GroebnerOptions gopts = make_groebner(g);
    lgtk::MilnorAlgebra alg = lgtk::milnor_algebra(pf.potential, order, gopts);
    lgtk::QuasiHomogeneity qh = lgtk::is_quasi_homogeneous(pf.potential, order, gopts);

    ordered_json j;
    j["command"] = "milnor";
    j["potential"] = lgtk::to_string(pf.potential, pf.variables, order);
    j["variables"] = pf.variables;
    j["order"] = order.name();
    j["milnor_number"] = alg.dimension();
    ordered_json basis = ordered_json::array();
    for (const auto& e : alg.basis)
        basis.push_back(lgtk::to_string(
            lgtk::Polynomial::monomial(pf.potential.num_vars(), e, lgtk::GaussianRational(1)),
            pf.variables, order));
    j["basis"] = basis;
    j["quasi_homogeneous"] = qh.is_quasi_homogeneous;
    if (qh.certificate) {
        j["weights"] = qh.certificate->weights;
        j["weighted_degree"] = qh.certificate->degree;
    }
    auto points = lgtk::rational_critical_points(pf.potential, gopts);
    ordered_json table = ordered_json::array();
    std::size_t local_sum = 0;
    for (const auto& p : points) {
        ordered_json row;
        ordered_json coords = ordered_json::array();
        for (const auto& c : p) coords.push_back(c.str());
        row["point"] = coords;
        std::size_t local = lgtk::local_milnor_number(pf.potential, p, order, gopts);
        row["local_milnor_number"] = local;
        local_sum += local;
        table.push_back(row);
    }
    j["rational_critical_points"] = table;
    j["local_milnor_sum"] = local_sum;
    j["irrational_deficit"] = alg.dimension() - local_sum;
    emit(j, g);
    return 0;
}

int cmd_hom(const std::string& path, const std::string& a, const std::string& b,
            const GlobalFlags& g) {
    lgtk::ProblemFile pf = lgtk::load_problem(path);
    lgtk::MonomialOrder order = make_order(g);
    lgtk::MilnorAlgebra alg = lgtk::milnor_algebra(pf.potential, order, make_groebner(g));
    const lgtk::MatrixFactorization& ma = pf.objects[pf.object_index(a)].second;
    const lgtk::MatrixFactorization& mb = pf.objects[pf.object_index(b)].second;
    lgtk::HomCohomology h = lgtk::hom_cohomology(ma, mb, alg);

    ordered_json j;
    j["command"] = "hom";
    j["source"] = a;
    j["target"] = b;
    j["order"] = order.name();
    j["strategy"] = h.quotient_model ? "quotient-model" : "graded-truncation";
    j["even_dimension"] = h.even_dim();
    j["odd_dimension"] = h.odd_dim();
    ordered_json evens = ordered_json::array(), odds = ordered_json::array();
    for (const auto& m : h.even_basis) evens.push_back(json_morphism(m, pf.variables, order));
    for (const auto& m : h.odd_basis) odds.push_back(json_morphism(m, pf.variables, order));
    j["even_basis"] = evens;
    j["odd_basis"] = odds;
    emit(j, g);
    return 0;
}

int cmd_trace(const std::string& path, const std::string& object, const std::string& morphism,
              const GlobalFlags& g) {
    lgtk::ProblemFile pf = lgtk::load_problem(path);
    lgtk::MonomialOrder order = make_order(g);
    lgtk::GroebnerOptions gopts = make_groebner(g);
    const auto& nm = pf.morphism(morphism);
    if (nm.source != object || nm.target != object)
        throw lgtk::Error(lgtk::errc::parse_error,
                          "morphism '" + morphism + "' is not an endomorphism of '" + object + "'");
    const lgtk::MatrixFactorization& a = pf.objects[pf.object_index(object)].second;
    lgtk::MilnorAlgebra alg = lgtk::milnor_algebra(pf.potential, order, gopts);
    lgtk::ResidueEngine eng = lgtk::residue_engine(alg, gopts);
    lgtk::GaussianRational tr = lgtk::boundary_trace(eng, a, nm.morphism, alg, pf.norm);
    lgtk::Polynomial img = lgtk::boundary_bulk(a, nm.morphism, alg, pf.vol, pf.norm);

    ordered_json j;
    j["command"] = "trace";
    j["object"] = object;
    j["morphism"] = morphism;
    j["parity"] = lgtk::parity_name(nm.morphism.parity());
    j["boundary_trace"] = tr.str();
    j["boundary_bulk"] = lgtk::to_string(img, pf.variables, order);
    emit(j, g);
    return 0;
}

int cmd_bulk_trace(const std::string& path, const std::string& poly, const GlobalFlags& g) {
    lgtk::ProblemFile pf = lgtk::load_problem(path);
    lgtk::MonomialOrder order = make_order(g);
    lgtk::GroebnerOptions gopts = make_groebner(g);
    lgtk::Polynomial f = lgtk::parse_polynomial(poly, pf.variables);
    lgtk::MilnorAlgebra alg = lgtk::milnor_algebra(pf.potential, order, gopts);
    lgtk::ResidueEngine eng = lgtk::residue_engine(alg, gopts);

    ordered_json j;
    j["command"] = "bulk-trace";
    j["polynomial"] = lgtk::to_string(f, pf.variables, order);
    j["normal_form"] = lgtk::to_string(alg.normal_form(f), pf.variables, order);
    j["residue"] = eng.residue(f).str();
    j["bulk_trace"] = lgtk::bulk_trace(eng, f, pf.vol, pf.norm).str();
    emit(j, g);
    return 0;
}

int cmd_verify(const std::string& path, const GlobalFlags& g) {
    lgtk::ProblemFile pf = lgtk::load_problem(path);
    lgtk::TftOptions topts;
    topts.order = make_order(g);
    topts.groebner = make_groebner(g);
    topts.seed = g.seed;
    topts.timings = g.timings;
    lgtk::TftInstance inst = lgtk::build_instance(pf.potential, pf.variables, pf.objects, pf.vol,
                                                  pf.norm, topts);
    lgtk::AxiomReport report = lgtk::full_report(inst);

    ordered_json j;
    j["command"] = "verify";
    j["potential"] = lgtk::to_string(pf.potential, pf.variables, topts.order);
    j["instance_digest"] = report.instance_digest;
    ordered_json axioms = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = lgtk::status_name(c.status);
        jc["required"] = c.required;
        if (c.constant) jc["constant"] = c.constant->str();
        if (!c.witnesses.empty()) jc["witnesses"] = c.witnesses;
        if (!c.note.empty()) jc["note"] = c.note;
        if (g.timings) jc["millis"] = c.millis;
        axioms.push_back(jc);
    }
    j["axioms"] = axioms;
    bool pass = report.all_required_pass();
    j["verdict"] = pass ? "pass" : "fail";
    emit(j, g);
    return pass ? 0 : 1;
}

int cmd_koszul(const std::string& path, const GlobalFlags& g) {
    lgtk::ProblemFile pf = lgtk::load_problem(path);
    lgtk::MonomialOrder order = make_order(g);
    lgtk::KoszulComplex kc = lgtk::koszul_complex(pf.potential, order, make_groebner(g));

    ordered_json j;
    j["command"] = "koszul";
    j["potential"] = lgtk::to_string(pf.potential, pf.variables, order);
    j["weights"] = kc.weights.weights;
    j["weighted_degree"] = kc.weights.degree;
    ordered_json table;
    for (const auto& [deg, dim] : kc.cohomology_dims) table[std::to_string(deg)] = dim;
    j["degree_table"] = table;
    j["slice_bound"] = kc.slice_bound;
    emit(j, g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and verification of open-closed TFT data "
                 "for one-potential Landau-Ginzburg models"};
    app.require_subcommand(1);
    GlobalFlags g;
    app.add_option("--order", g.order, "monomial order")
        ->check(CLI::IsMember({"lex", "grevlex"}));
    app.add_option("--format", g.format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--budget", g.budget, "Groebner step budget");
    app.add_option("--seed", g.seed, "seed for randomized spot checks");
    app.add_flag("--timings", g.timings, "include wall-clock timings in reports");

    std::string file, obj_a, obj_b, morphism, poly;

    CLI::App* milnor = app.add_subcommand("milnor", "Milnor algebra, weights, critical points");
    milnor->add_option("file", file, "problem file")->required();
    CLI::App* hom = app.add_subcommand("hom", "cohomology of the morphism complex");
    hom->add_option("file", file, "problem file")->required();
    hom->add_option("source", obj_a, "source object name")->required();
    hom->add_option("target", obj_b, "target object name")->required();
    CLI::App* trace = app.add_subcommand("trace", "boundary trace and disk one-point image");
    trace->add_option("file", file, "problem file")->required();
    trace->add_option("object", obj_a, "object name")->required();
    trace->add_option("morphism", morphism, "named endomorphism")->required();
    CLI::App* bulk = app.add_subcommand("bulk-trace", "residue trace of a bulk polynomial");
    bulk->add_option("file", file, "problem file")->required();
    bulk->add_option("polynomial", poly, "bulk insertion")->required();
    CLI::App* verify = app.add_subcommand("verify", "run every axiom check");
    verify->add_option("file", file, "problem file")->required();
    CLI::App* koszul = app.add_subcommand("koszul", "graded Koszul cohomology table");
    koszul->add_option("file", file, "problem file")->required();
    for (CLI::App* sub : {milnor, hom, trace, bulk, verify, koszul}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (milnor->parsed()) return cmd_milnor(file, g);
        if (hom->parsed()) return cmd_hom(file, obj_a, obj_b, g);
        if (trace->parsed()) return cmd_trace(file, obj_a, morphism, g);
        if (bulk->parsed()) return cmd_bulk_trace(file, poly, g);
        if (verify->parsed()) return cmd_verify(file, g);
        if (koszul->parsed()) return cmd_koszul(file, g);
    } catch (const lgtk::Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.code()) {
            case lgtk::errc::non_isolated_critical: return 3;
            case lgtk::errc::budget_exceeded: return 4;
            default: return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
