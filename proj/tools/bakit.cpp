#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bakit/harness.hpp"
#include "bakit/proofs_ba.hpp"
#include "bakit/proofs_lk.hpp"
#include "bakit/semantics.hpp"
#include "bakit/transforms.hpp"

using namespace bakit;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
}

bool is_sequent(const std::string& s) { return s.find("=>") != std::string::npos; }

Dialect dialect(bool classical) { return classical ? Dialect::Classical : Dialect::Basic; }

void print_diagnostics(const std::vector<Diagnostic>& ds, bool json) {
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& d : ds) arr.push_back({{"path", d.path}, {"rule", d.rule}, {"kind", d.kind}, {"message", d.message}});
        std::cout << nlohmann::json{{"ok", ds.empty()}, {"diagnostics", arr}}.dump(2) << "\n";
        return;
    }
    if (ds.empty()) std::cout << "ok\n";
    for (auto& d : ds) {
        std::cout << d.kind << " at [";
        for (std::size_t i = 0; i < d.path.size(); ++i) std::cout << (i ? "," : "") << d.path[i];
        std::cout << "] " << d.rule << ": " << d.message << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bakit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "structured output");

    auto* parse = app.add_subcommand("parse", "parse and print a formula or sequent");
    std::string parse_text;
    bool parse_classical = false;
    parse->add_option("text", parse_text)->required();
    parse->add_flag("--classical", parse_classical);

    auto* classify_cmd = app.add_subcommand("classify", "formula classes");
    std::string classify_text;
    classify_cmd->add_option("formula", classify_text)->required();

    auto* transform = app.add_subcommand("transform", "apply a formula translation");
    std::string pass, transform_file;
    transform->add_option("--pass", pass)
        ->required()
        ->check(CLI::IsMember({"pos", "semipos", "openpos", "openneg", "bneg", "star", "totalize"}));
    transform->add_option("file", transform_file, "formula text, or json {A, xs, y, zs} for totalize")->required();

    auto* check_ba = app.add_subcommand("check-ba", "check a BA proof");
    std::string ba_file, theory = "ba";
    check_ba->add_option("file", ba_file)->required();
    check_ba->add_option("--theory", theory)->check(CLI::IsMember({"ba", "ba-u", "ba-c", "eba"}));

    auto* check_lk_cmd = app.add_subcommand("check-lk", "check an LK proof");
    std::string lk_file, cls_name = "any";
    check_lk_cmd->add_option("file", lk_file)->required();
    check_lk_cmd->add_option("--class", cls_name)->check(CLI::IsMember({"pos", "delta0", "open", "any"}));

    auto* cutelim = app.add_subcommand("cutelim", "remove cuts outside a class");
    std::string ce_file, ce_cls = "pos", ce_out;
    cutelim->add_option("file", ce_file)->required();
    cutelim->add_option("--class", ce_cls)->check(CLI::IsMember({"pos", "delta0", "open", "any"}));
    cutelim->add_option("--out", ce_out, "write the resulting proof here");

    auto* force_cmd = app.add_subcommand("force", "Kripke forcing");
    std::string model_file, force_text;
    int at = 0;
    std::uint64_t bound = 8;
    bool inf = false;
    force_cmd->add_option("model", model_file)->required();
    force_cmd->add_option("--at", at)->required();
    force_cmd->add_option("--formula", force_text)->required();
    force_cmd->add_option("--bound", bound);
    force_cmd->add_flag("--inf", inf, "search witnesses at infinity too");

    auto* scenario = app.add_subcommand("scenario", "run registered scenarios");
    std::string scenario_name, fixtures = default_fixture_dir();
    bool all = false, parallel = false, list = false;
    scenario->add_option("name", scenario_name);
    scenario->add_flag("--all", all);
    scenario->add_flag("--list", list);
    scenario->add_flag("--parallel", parallel);
    scenario->add_option("--fixtures", fixtures);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*parse) {
            if (is_sequent(parse_text))
                std::cout << to_string(parse_sequent(parse_text, Language::Lc)) << "\n";
            else
                std::cout << to_string(parse_formula(parse_text, Language::Lc, dialect(parse_classical))) << "\n";
            return 0;
        }
        if (*classify_cmd) {
            Formula f = parse_formula(classify_text, Language::Lc);
            auto cs = classify(f);
            if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (auto c : cs) arr.push_back(to_string(c));
                std::cout << nlohmann::json{{"formula", to_string(f)}, {"classes", arr}}.dump(2) << "\n";
            } else {
                for (auto c : cs) std::cout << to_string(c) << "\n";
            }
            return 0;
        }
        if (*transform) {
            std::string text = trim(slurp(transform_file));
            if (pass == "totalize") {
                auto j = nlohmann::json::parse(text);
                TotalizerInput in{parse_formula(j["A"].get<std::string>()), j["xs"], j["y"], j["zs"]};
                TotalizerParts p = sigma1_totalizer_parts(in);
                if (json)
                    std::cout << nlohmann::json{{"U", to_string(p.U)}, {"B", to_string(p.B)}, {"C", to_string(p.C)},
                                                {"D", to_string(p.D)}}
                                     .dump(2)
                              << "\n";
                else
                    std::cout << to_string(p.D) << "\n";
                return 0;
            }
            Formula f = parse_formula(text, Language::Lc);
            Formula out = pass == "pos"       ? positive_part(f)
                          : pass == "semipos" ? semi_positive_part(f)
                          : pass == "openpos" ? open_positive(f)
                          : pass == "openneg" ? open_negation(f)
                          : pass == "bneg"    ? bounded_negation(f)
                                              : star_translate(f);
            std::cout << to_string(out) << "\n";
            return 0;
        }
        if (*check_ba) {
            CheckReport r = check_proof(load_ba_proof(ba_file), TheoryPack::by_name(theory));
            print_diagnostics(r.diagnostics, json);
            return r.ok() ? 0 : 1;
        }
        if (*check_lk_cmd) {
            LkReport r = check_lk(load_lk_proof(lk_file), ClassPredicate::by_name(cls_name));
            print_diagnostics(r.diagnostics, json);
            return r.ok() ? 0 : 1;
        }
        if (*cutelim) {
            ClassPredicate cls = ClassPredicate::by_name(ce_cls);
            LkProof p = load_lk_proof(ce_file);
            CutElimStats st;
            LkProof q = eliminate_cuts_outside(p, cls, &st);
            if (!ce_out.empty()) std::ofstream(ce_out) << lk_proof_to_json(q) << "\n";
            nlohmann::json j{{"conclusion", to_string(q.conclusion)},
                             {"cuts_before", cut_formulas(p).size()},
                             {"cuts_after", cut_formulas(q).size()},
                             {"eliminated", st.eliminated},
                             {"mix_calls", st.mix_calls},
                             {"nodes", lk_node_count(q)},
                             {"ok", check_lk(q, cls).ok()}};
            if (json) {
                std::cout << j.dump(2) << "\n";
            } else {
                for (auto& [k, v] : j.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
                if (ce_out.empty()) std::cout << lk_proof_to_json(q) << "\n";
            }
            return j["ok"].get<bool>() ? 0 : 1;
        }
        if (*force_cmd) {
            KripkeModel m = load_model(model_file);
            EvalBound b{bound, inf};
            Verdict v = is_sequent(force_text) ? force_sequent(m, at, parse_sequent(force_text), b)
                                               : force(m, at, parse_formula(force_text), {}, b);
            std::cout << (json ? verdict_json(v) : verdict_text(v)) << "\n";
            return v.truth.is_unknown() ? 2 : 0;
        }
        if (*scenario) {
            if (list) {
                for (auto& n : scenario_names()) std::cout << n << "\n";
                return 0;
            }
            std::vector<std::string> names;
            if (all)
                names = scenario_names();
            else if (!scenario_name.empty())
                names = {scenario_name};
            else
                throw std::invalid_argument("give a scenario name or --all");
            auto reports = run_scenarios(names, parallel, fixtures);
            if (json) {
                std::cout << report_json(reports) << "\n";
            } else {
                for (auto& r : reports) std::cout << report_text(r);
            }
            return exit_code(reports);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
