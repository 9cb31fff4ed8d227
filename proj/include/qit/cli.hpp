#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "checks.hpp"
#include "constructions.hpp"
#include "dsl.hpp"
#include "error.hpp"
#include "hom.hpp"
#include "lattice.hpp"
#include "module_invariants.hpp"
#include "resolution.hpp"
#include "sampling.hpp"
#include "skeleton.hpp"
#include "stable_model.hpp"

namespace qit::cli {

using nlohmann::json;

enum ExitCode { kOk = 0, kInternal = 1, kParse = 2, kPrecondition = 3 };

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot read file '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Parse a file, prefixing parse errors with the path.
inline AlgebraFile load_algebra(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_algebra_file(text);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), path + ": " + e.message());
    }
}

struct Report {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    json witnesses = json::array();
    bool probabilistic = false;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> text;

    json to_json() const {
        return {{"command", command},
                {"inputs", inputs},
                {"result", result},
                {"witnesses", witnesses},
                {"probabilistic", probabilistic},
                {"seed", seed ? json(*seed) : json(nullptr)}};
    }
};

inline std::string class_name(const StableModel& m, const StableClass& c) { return m.name(c); }

inline json class_vector_json(const StableModel& m, const ClassVector& x) {
    json j = json::object();
    for (const auto& [c, mult] : x)
        if (mult) j[m.name(c)] = mult;
    return j;
}

inline std::string class_vector_text(const StableModel& m, const ClassVector& x) {
    std::string s;
    for (const auto& [c, mult] : x) {
        if (!mult) continue;
        if (!s.empty()) s += " + ";
        s += (mult > 1 ? std::to_string(mult) + "*" : "") + m.name(c);
    }
    return s.empty() ? "0" : s;
}

inline json pd_json(const StableModel& m, const PdResult& pd) {
    if (pd.finite) return {{"finite", true}, {"value", pd.value}};
    json cyc = json::array();
    for (const auto& c : pd.cycle_witness) cyc.push_back(m.name(c));
    return {{"finite", false}, {"cycle", cyc}};
}

inline std::string pd_text(const StableModel& m, const PdResult& pd) {
    if (pd.finite) return std::to_string(pd.value);
    std::string s = "infinite (cycle:";
    for (const auto& c : pd.cycle_witness) s += " " + m.name(c);
    return s + ")";
}

inline SubcategorySpec subcat_from(const std::string& list, const Quiver& q) {
    SubcategorySpec d;
    if (list.empty()) return d;
    for (const auto& [c, m] : parse_class_list(list, q)) d.classes.insert(c);
    return d;
}

struct InvariantArgs {
    std::string file;
    std::string module;
    std::string classes;
    std::string subcat;
};

// phi / psi / gamma / pd share their input handling.
inline Report run_invariant(const std::string& command, const InvariantArgs& args, std::uint64_t seed) {
    Report rep;
    rep.command = command;
    const AlgebraFile f = load_algebra(args.file);
    const StableModel model(f.truncated());
    rep.inputs = {{"file", args.file}};
    if (!args.subcat.empty()) rep.inputs["subcat"] = args.subcat;
    const SubcategorySpec d = subcat_from(args.subcat, f.quiver);
    if (!d.classes.empty() && command != "gamma" && command != "pd") {
        auto v = model.validate_0IT(d);
        rep.result["subcat_0IT"] = v.ok;
        rep.result["subcat_reason"] = v.reason;
        rep.text.push_back("subcategory: " + std::string(v.ok ? "0-Igusa-Todorov" : "not 0-Igusa-Todorov") + " (" + v.reason + ")");
    }
    ModuleClasses mc;
    std::optional<Representation<Rational>> module_rep;
    if (!args.module.empty() && !args.classes.empty()) throw PreconditionError("give either -m or -c, not both");
    if (!args.module.empty()) {
        rep.inputs["module"] = args.module;
        module_rep = f.module(args.module).rep;
        mc = module_classes(model, *module_rep, seed);
        rep.seed = seed;
        rep.probabilistic = mc.probabilistic;
        json extras = json::array();
        for (std::size_t i = 0; i < mc.extra_syzygies.size(); ++i)
            extras.push_back({{"dims", mc.extra_dims[i]}, {"syzygy", class_vector_json(model, mc.extra_syzygies[i])}});
        rep.result["decomposition"] = {{"classes", class_vector_json(model, mc.classes)},
                                       {"projective_components", mc.projective_components},
                                       {"other_components", extras}};
        rep.text.push_back("module " + args.module + " = " + class_vector_text(model, mc.classes) +
                           (mc.projective_components ? " + " + std::to_string(mc.projective_components) + " projective" : "") +
                           (mc.extra_syzygies.empty() ? "" : " + " + std::to_string(mc.extra_syzygies.size()) + " other component(s)"));
    } else if (!args.classes.empty()) {
        rep.inputs["classes"] = args.classes;
        mc.classes = parse_class_list(args.classes, f.quiver);
        for (const auto& [c, m] : mc.classes) model.info(c);
    } else {
        throw PreconditionError("missing input: give -m MODULE or -c CLASSLIST");
    }
    const auto inv = module_invariants(model, mc, d);
    if (command == "phi") {
        rep.result["phi"] = inv.phi;
        rep.text.push_back("phi = " + std::to_string(inv.phi));
    } else if (command == "psi") {
        rep.result["psi"] = inv.psi;
        rep.result["phi"] = inv.phi;
        rep.text.push_back("psi = " + std::to_string(inv.psi) + " (phi = " + std::to_string(inv.phi) + ")");
    } else if (command == "gamma") {
        rep.result["gamma"] = inv.gamma;
        std::set<StableClass> seeds;
        for (const auto& [c, m] : mc.classes) seeds.insert(c);
        for (const auto& s : mc.extra_syzygies)
            for (const auto& [c, m] : s) seeds.insert(c);
        const auto closure = model.syzygy_closure(seeds);
        json cl = json::array();
        for (const auto& c : closure) cl.push_back(model.name(c));
        rep.witnesses.push_back({{"syzygy_closure", cl}});
        rep.text.push_back("gamma = " + std::to_string(inv.gamma));
    } else {
        rep.result["pd"] = pd_json(model, inv.pd);
        rep.text.push_back("pd = " + pd_text(model, inv.pd));
        if (module_rep) {
            auto rp = rep_pd(model.algebra().as_monomial(), *module_rep, seed);
            rep.result["pd_representation"] = {{"kind", to_string(rp.kind)}, {"value", rp.value}, {"fingerprint", rp.fingerprint}};
            rep.text.push_back("pd from explicit resolution: " + to_string(rp.kind) +
                               (rp.kind == RepPdKind::Infinite ? "" : " " + std::to_string(rp.value)));
        }
        if (!inv.pd.finite) {
            json cyc = json::array();
            for (const auto& c : inv.pd.cycle_witness) cyc.push_back(model.name(c));
            rep.witnesses.push_back({{"syzygy_cycle", cyc}});
        }
    }
    return rep;
}

inline Report run_eta(const std::string& matrix_file, const std::string& lattice_file) {
    Report rep;
    rep.command = "eta";
    rep.inputs = {{"matrix", matrix_file}, {"lattice", lattice_file}};
    IntMatrix l;
    Lattice x;
    try {
        l = parse_int_matrix(read_file(matrix_file));
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), matrix_file + ": " + e.message());
    }
    try {
        x = parse_lattice(read_file(lattice_file));
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), lattice_file + ": " + e.message());
    }
    const std::size_t eta = eta_fitting(l, x);
    auto ranks = image_rank_sequence(l, x, x.ambient_rank() + 1);
    rep.result = {{"eta", eta}, {"rank_sequence", ranks}};
    std::string seq;
    for (auto r : ranks) seq += (seq.empty() ? "" : " ") + std::to_string(r);
    rep.text = {"eta = " + std::to_string(eta), "ranks of L^m X: " + seq};
    return rep;
}

inline Report run_classify(const std::string& file, const std::string& reading_flag) {
    Report rep;
    rep.command = "classify-0it";
    rep.inputs = {{"file", file}, {"inv_reading", reading_flag}};
    const InvertibilityReading reading = reading_flag == "z" ? InvertibilityReading::Integer : InvertibilityReading::Rational;
    const AlgebraFile f = load_algebra(file);
    const StableModel model(f.truncated());
    const auto cls = model.classify_trivial_0IT();
    const auto crit = criteria_prop_5_4(model.algebra(), reading);
    const auto& s = cls.structure;
    rep.result["verdict"] = to_string(cls.verdict);
    json gam = json::object();
    for (const auto& [c, g] : cls.gamma_values) gam[model.name(c)] = g;
    rep.result["gamma_values"] = gam;
    rep.result["structure"] = {{"strongly_connected", s.strongly_connected},
                               {"has_loop", s.has_loop},
                               {"adjacency_determinant", s.adjacency_determinant.get_str()},
                               {"singular", s.singular(reading)},
                               {"selfinjective", to_string(s.selfinjective)}};
    rep.result["prop_5_4"] = {{"case1_applicable", crit.case1.applicable}, {"case2_applicable", crit.case2.applicable}};
    if (cls.witness) {
        json w = json::array();
        for (const auto& c : cls.witness->classes) w.push_back(model.name(c));
        rep.witnesses.push_back({{"subcategory", w}, {"phi", 0}});
    }
    rep.text.push_back("verdict: " + to_string(cls.verdict));
    if (!s.strongly_connected) rep.text.push_back("quiver is not strongly connected; stable-class test is not decisive");
    if (cls.witness) {
        std::string w;
        for (const auto& c : cls.witness->classes) w += " " + model.name(c);
        rep.text.push_back("nontrivial 0-IT subcategory:" + w);
    }
    rep.text.push_back("det(adjacency) = " + s.adjacency_determinant.get_str() + ", strongly connected: " +
                       (s.strongly_connected ? "yes" : "no") + ", loop: " + (s.has_loop ? "yes" : "no") +
                       ", selfinjective: " + to_string(s.selfinjective));
    return rep;
}

inline Report run_verify_syzygy(const std::string& file, std::size_t samples, std::uint64_t seed) {
    Report rep;
    rep.command = "verify-syzygy";
    rep.inputs = {{"file", file}, {"samples", samples}};
    rep.seed = seed;
    const AlgebraFile f = load_algebra(file);
    const TruncatedAlgebra a = f.truncated();
    const StableModel model(a);
    const auto mono = a.as_monomial();
    json rows = json::array();
    std::size_t passed = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        std::mt19937_64 rng(seed + i);
        auto m = random_cyclic_quotient<Rational>(mono, rng);
        auto cover = projective_cover_and_syzygy(mono, m);
        ClassVector predicted = skeleton_decompose(a, m);
        auto prediction = class_vector_rep<Rational>(a, predicted);
        const bool dims_ok = prediction.dims == cover.syzygy.dims;
        const bool layers_ok = dims_ok && layer_profile(a.quiver(), prediction) == layer_profile(a.quiver(), cover.syzygy);
        auto iso = is_isomorphic(mono, cover.syzygy, prediction, seed + i);
        rep.probabilistic = rep.probabilistic || iso.probabilistic;
        const bool ok = dims_ok && layers_ok && iso.isomorphic;
        passed += ok;
        rows.push_back({{"sample", i},
                        {"module_dims", m.dims},
                        {"syzygy_dims", cover.syzygy.dims},
                        {"predicted", class_vector_json(model, predicted)},
                        {"dims_match", dims_ok},
                        {"layers_match", layers_ok},
                        {"isomorphic", iso.isomorphic}});
        rep.text.push_back("sample " + std::to_string(i) + ": Omega = " + class_vector_text(model, predicted) + "  " +
                           (ok ? "ok" : "MISMATCH"));
    }
    rep.result = {{"samples", rows}, {"passed", passed}, {"all_passed", passed == samples}};
    rep.text.push_back(std::to_string(passed) + "/" + std::to_string(samples) + " samples agree");
    return rep;
}

inline Report run_iso(const std::string& file, const std::string& m, const std::string& n, std::uint64_t seed) {
    Report rep;
    rep.command = "iso";
    rep.inputs = {{"file", file}, {"m", m}, {"n", n}};
    rep.seed = seed;
    const AlgebraFile f = load_algebra(file);
    const auto a = f.algebra();
    auto r = is_isomorphic(a, f.module(m).rep, f.module(n).rep, seed);
    rep.probabilistic = r.probabilistic;
    rep.result = {{"isomorphic", r.isomorphic}, {"reason", r.reason}};
    rep.text.push_back(std::string(r.isomorphic ? "isomorphic" : "not isomorphic") + " (" + r.reason + ")");
    return rep;
}

inline Report run_build(const std::vector<std::string>& what) {
    Report rep;
    rep.command = "build";
    if (what.empty()) throw PreconditionError("build: expected cycle N K | ex5_5 | ex6_1 BFILE | glue SPECFILE");
    rep.inputs = {{"args", what}};
    AlgebraFile out;
    const std::string& kind = what[0];
    auto number = [&](std::size_t i) -> unsigned long {
        if (i >= what.size()) throw PreconditionError("build " + kind + ": missing argument");
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(what[i], &used);
            if (used != what[i].size()) throw std::invalid_argument("trailing");
            return v;
        } catch (const std::exception&) {
            throw PreconditionError("build " + kind + ": '" + what[i] + "' is not a number");
        }
    };
    if (kind == "cycle") {
        auto t = build_truncated_cycle(number(1), static_cast<unsigned>(number(2)));
        out = make_algebra_file("cycle" + what[1] + "_k" + what[2], t.as_monomial());
        rep.result["selfinjective"] = to_string(selfinjectivity_by_socle(t));
    } else if (kind == "ex5_5") {
        auto ex = build_example_5_5();
        out = make_algebra_file("ex5_5", ex.algebra.as_monomial(), {{"M", ex.module}});
    } else if (kind == "ex6_1") {
        if (what.size() < 2) throw PreconditionError("build ex6_1: missing BFILE");
        const AlgebraFile b = load_algebra(what[1]);
        out = make_algebra_file(b.name + "_ex6_1", build_example_6_1(b.algebra()));
    } else if (kind == "glue") {
        if (what.size() < 2) throw PreconditionError("build glue: missing SPECFILE");
        const std::string text = read_file(what[1]);
        GlueSpec spec;
        try {
            spec = parse_glue_file(text);
        } catch (const ParseError& e) {
            throw ParseError(e.line(), e.column(), what[1] + ": " + e.message());
        }
        auto g = glue_theorem_5_6(spec);
        json hyp = json::array();
        for (const auto& h : g.hypotheses) {
            hyp.push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
            rep.text.push_back("# hypothesis " + h.name + ": " + (h.holds ? "holds" : "FAILS") + " (" + h.detail + ")");
        }
        rep.result["hypotheses"] = hyp;
        rep.result["gammabar_verdict"] = g.gammabar_verdict;
        rep.result["conclusion_applicable"] = g.conclusion_applicable;
        rep.text.push_back("# gammabar part: " + g.gammabar_verdict + "; conclusion applicable: " + (g.conclusion_applicable ? "yes" : "no"));
        out = make_algebra_file("glued", g.algebra);
    } else {
        throw PreconditionError("build: unknown construction '" + kind + "'");
    }
    const std::string text = format_algebra_file(out);
    rep.result["algebra"] = text;
    rep.result["dimension"] = out.algebra().dimension();
    rep.text.push_back(text);
    return rep;
}

/// Ideal generators: paths separated by ';', arrows by spaces, `e_v` for a vertex.
inline MonomialIdeal parse_ideal(const std::string& text, const Quiver& q) {
    MonomialIdeal ideal;
    std::stringstream all(text);
    std::string item;
    while (std::getline(all, item, ';')) {
        std::stringstream words(item);
        std::string w;
        Path p;
        bool any = false;
        while (words >> w) {
            if (!any && w.rfind("e_", 0) == 0) {
                auto v = q.find_vertex(w.substr(2));
                if (!v) throw PreconditionError("unknown vertex in '" + w + "'");
                p.start = *v;
                any = true;
                break;
            }
            auto a = q.find_arrow(w);
            if (!a) throw PreconditionError("unknown arrow '" + w + "' in ideal generator");
            if (!any) p.start = q.arrow(*a).source;
            p.arrows.push_back(*a);
            any = true;
        }
        if (!any) continue;
        if (!q.composable(p)) throw PreconditionError("ideal generator '" + item + "' is not a path");
        ideal.generators.push_back(p);
    }
    return ideal;
}

inline Report run_criteria(const std::string& file, const std::string& prop, const std::string& i_text, const std::string& j_text,
                           std::size_t n, const std::string& reading_flag) {
    Report rep;
    rep.command = "criteria";
    rep.inputs = {{"file", file}, {"prop", prop}};
    const AlgebraFile f = load_algebra(file);
    if (prop == "ideals") {
        rep.inputs["I"] = i_text;
        rep.inputs["J"] = j_text;
        rep.inputs["n"] = n;
        const auto a = f.algebra();
        auto r = ideal_conditions(a, parse_ideal(i_text, f.quiver), parse_ideal(j_text, f.quiver), n);
        rep.result = {{"ji_zero", r.ji_zero}, {"rad_i_zero", r.rad_i_zero}, {"rad_power_zero", r.rad_power_zero}};
        if (!r.ji_zero) rep.witnesses.push_back({{"nonzero_in_JI", r.ji_witness}});
        if (!r.rad_i_zero) rep.witnesses.push_back({{"nonzero_in_radI", r.rad_witness}});
        rep.text = {std::string("JI = 0: ") + (r.ji_zero ? "yes" : "no"), std::string("rad(A) I = 0: ") + (r.rad_i_zero ? "yes" : "no"),
                    "rad^" + std::to_string(2 * n + 1) + "(A) = 0: " + (r.rad_power_zero ? "yes" : "no")};
        return rep;
    }
    if (prop != "5.4") throw PreconditionError("criteria: --prop must be 5.4 or ideals");
    rep.inputs["inv_reading"] = reading_flag;
    const InvertibilityReading reading = reading_flag == "z" ? InvertibilityReading::Integer : InvertibilityReading::Rational;
    auto r = criteria_prop_5_4(f.truncated(), reading);
    auto case_json = [](const CaseVerdict& c) {
        return json{{"applicable", c.applicable}, {"verdict", to_string(c.verdict)}, {"failed_hypotheses", c.failed}};
    };
    rep.result = {{"case1", case_json(r.case1)},
                  {"case2", case_json(r.case2)},
                  {"adjacency_determinant", r.structure.adjacency_determinant.get_str()},
                  {"selfinjective", to_string(r.structure.selfinjective)}};
    auto case_text = [](const std::string& name, const CaseVerdict& c) {
        std::string s = name + ": " + (c.applicable ? "applies, OnlyTrivial" : "not applicable");
        if (!c.failed.empty()) {
            s += " (fails:";
            for (const auto& h : c.failed) s += " [" + h + "]";
            s += ")";
        }
        return s;
    };
    rep.text = {case_text("case 1 (k = 2)", r.case1), case_text("case 2 (loop)", r.case2)};
    return rep;
}

inline Report run_lit(const std::string& file, const std::string& subcat) {
    Report rep;
    rep.command = "lit-witness";
    rep.inputs = {{"file", file}};
    if (!subcat.empty()) rep.inputs["subcat"] = subcat;
    const AlgebraFile f = load_algebra(file);
    const StableModel model(f.truncated());
    auto cert = model.lit_witness(subcat_from(subcat, f.quiver));
    json d = json::array();
    for (const auto& c : cert.d.classes) d.push_back(model.name(c));
    rep.result = {{"n", cert.n},
                  {"V", class_vector_json(model, cert.v_classes)},
                  {"D", d},
                  {"psi_D_V", cert.findim_bound - cert.n - 1},
                  {"findim_bound", cert.findim_bound}};
    rep.text = {"n = " + std::to_string(cert.n), "V = " + class_vector_text(model, cert.v_classes),
                "findim(A) <= " + std::to_string(cert.findim_bound)};
    return rep;
}

/// Parse argv, run one command, print the report. Returns the process exit code.
inline int run_command(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Igusa-Todorov invariants of truncated and monomial path algebras"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "print a JSON report");

    InvariantArgs inv;
    std::optional<std::uint64_t> seed;
    std::vector<CLI::App*> invariant_cmds;
    for (const char* name : {"phi", "psi", "gamma", "pd"}) {
        auto* sub = app.add_subcommand(name, std::string("compute ") + name);
        sub->add_option("file", inv.file, ".alg file")->required();
        sub->add_option("-m,--module", inv.module, "module declared in the file");
        sub->add_option("-c,--classes", inv.classes, "class list such as 'M[2]@3, M[1]@1'");
        sub->add_option("--subcat", inv.subcat, "class list of a 0-IT subcategory D");
        sub->add_option("--seed", seed, "seed for isomorphism trials");
        sub->add_flag("--json", as_json);
        invariant_cmds.push_back(sub);
    }

    std::string matrix_file, lattice_file;
    auto* eta = app.add_subcommand("eta", "Fitting index of an integer matrix on a lattice");
    eta->add_option("--matrix", matrix_file)->required();
    eta->add_option("--lattice", lattice_file)->required();
    eta->add_flag("--json", as_json);

    std::string file, reading = "q";
    auto* classify = app.add_subcommand("classify-0it", "only-trivial 0-Igusa-Todorov test");
    classify->add_option("file", file)->required();
    classify->add_option("--inv-reading", reading, "z or q")->check(CLI::IsMember({"z", "q"}));
    classify->add_flag("--json", as_json);

    std::size_t samples = 10;
    auto* verify = app.add_subcommand("verify-syzygy", "compare explicit syzygies with the skeleton formula");
    verify->add_option("file", file)->required();
    verify->add_option("--samples", samples);
    verify->add_option("--seed", seed);
    verify->add_flag("--json", as_json);

    std::string m_name, n_name;
    auto* iso = app.add_subcommand("iso", "module isomorphism test");
    iso->add_option("file", file)->required();
    iso->add_option("-m", m_name)->required();
    iso->add_option("-n", n_name)->required();
    iso->add_option("--seed", seed);
    iso->add_flag("--json", as_json);

    std::vector<std::string> build_args;
    auto* build = app.add_subcommand("build", "cycle N K | ex5_5 | ex6_1 BFILE | glue SPECFILE");
    build->add_option("what", build_args)->required();
    build->add_flag("--json", as_json);

    std::string prop = "5.4", i_text, j_text;
    std::size_t n_power = 1;
    auto* criteria = app.add_subcommand("criteria", "structural criteria");
    criteria->add_option("file", file)->required();
    criteria->add_option("--prop", prop)->check(CLI::IsMember({"5.4", "ideals"}));
    criteria->add_option("--I", i_text, "generators of I: paths separated by ';'");
    criteria->add_option("--J", j_text, "generators of J");
    criteria->add_option("--n", n_power);
    criteria->add_option("--inv-reading", reading)->check(CLI::IsMember({"z", "q"}));
    criteria->add_flag("--json", as_json);

    std::string subcat;
    auto* lit = app.add_subcommand("lit-witness", "LIT certificate and findim bound");
    lit->add_option("file", file)->required();
    lit->add_option("--subcat", subcat);
    lit->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    }

    try {
        Report rep;
        auto need_seed = [&](const char* what) -> std::uint64_t {
            if (!seed && as_json) throw PreconditionError(std::string(what) + " is randomized: --seed is required with --json");
            return seed.value_or(1);
        };
        if (eta->parsed()) {
            rep = run_eta(matrix_file, lattice_file);
        } else if (classify->parsed()) {
            rep = run_classify(file, reading);
        } else if (verify->parsed()) {
            rep = run_verify_syzygy(file, samples, need_seed("verify-syzygy"));
        } else if (iso->parsed()) {
            rep = run_iso(file, m_name, n_name, need_seed("iso"));
        } else if (build->parsed()) {
            rep = run_build(build_args);
        } else if (criteria->parsed()) {
            rep = run_criteria(file, prop, i_text, j_text, n_power, reading);
        } else if (lit->parsed()) {
            rep = run_lit(file, subcat);
        } else {
            for (auto* sub : invariant_cmds)
                if (sub->parsed()) rep = run_invariant(sub->get_name(), inv, seed.value_or(0));
        }
        if (as_json)
            out << rep.to_json().dump(2) << "\n";
        else
            for (const auto& line : rep.text) out << line << "\n";
        return kOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

} // namespace qit::cli
