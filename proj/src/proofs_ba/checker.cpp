#include <algorithm>
#include <functional>

#include "bakit/proofs_ba.hpp"

namespace bakit {

std::string CheckReport::summary() const {
    if (ok()) return "ok";
    std::string out;
    for (auto& d : diagnostics) {
        std::string path = "root";
        for (auto i : d.path) path += "." + std::to_string(i);
        out += path + " [" + d.rule + "] " + d.kind + ": " + d.message + "\n";
    }
    return out;
}

namespace {

void check_node(const BaProof& p, const TheoryPack& t, const CheckOptions& o, std::vector<std::size_t>& path,
                std::vector<Diagnostic>& out) {
    auto report = [&](const std::string& kind, const std::string& msg) {
        out.push_back({path, p.rule, kind, msg});
    };
    if (t.lang == Language::L && (p.conclusion.ante.has_monus() || p.conclusion.cons.has_monus()))
        report("language", "cut-off subtraction outside the extended language");
    try {
        const RuleSig& sig = rule_signature(p.rule);
        if (p.premises.size() != sig.arity) {
            report("arity", "expected " + std::to_string(sig.arity) + " premises, got " +
                                std::to_string(p.premises.size()));
        } else {
            Instance in = instantiate(p.rule, p.bind, t, o);
            for (auto& e : in.side_errors) report("side-condition", e);
            if (in.side_errors.empty() && !(in.conclusion == p.conclusion))
                report("mismatch", "conclusion " + to_string(p.conclusion) + " but the rule gives " +
                                       to_string(in.conclusion));
            for (std::size_t i = 0; i < in.premises.size(); ++i)
                if (!(in.premises[i] == p.premises[i].conclusion))
                    report("premise", "premise " + std::to_string(i) + " is " + to_string(p.premises[i].conclusion) +
                                          " but the rule needs " + to_string(in.premises[i]));
        }
    } catch (const RuleError& e) {
        std::string m = e.what();
        bool theory = m.find("not in theory") != std::string::npos;
        report(theory ? "theory" : "binding", m);
    }
    for (std::size_t i = 0; i < p.premises.size(); ++i) {
        path.push_back(i);
        check_node(p.premises[i], t, o, path, out);
        path.pop_back();
    }
}

}  // namespace

CheckReport check_proof(const BaProof& p, const TheoryPack& t, const CheckOptions& o) {
    CheckReport r;
    std::vector<std::size_t> path;
    check_node(p, t, o, path, r.diagnostics);
    return r;
}

BaProof make_node(const std::string& rule, Bindings b, std::vector<BaProof> premises, const TheoryPack& t) {
    Instance in = instantiate(rule, b, t);
    if (!in.side_errors.empty()) throw RuleError(in.side_errors.front());
    if (premises.size() != rule_signature(rule).arity) throw RuleError(rule + ": wrong number of premises");
    for (std::size_t i = 0; i < in.premises.size(); ++i)
        if (!(in.premises[i] == premises[i].conclusion))
            throw RuleError(rule + ": premise " + std::to_string(i) + " is " + to_string(premises[i].conclusion) +
                            ", needs " + to_string(in.premises[i]));
    return {in.conclusion, rule, std::move(b), std::move(premises)};
}

std::size_t height(const BaProof& p) {
    std::size_t h = 0;
    for (auto& q : p.premises) h = std::max(h, height(q));
    return h + 1;
}

std::size_t node_count(const BaProof& p) {
    std::size_t n = 1;
    for (auto& q : p.premises) n += node_count(q);
    return n;
}

std::set<std::string> rules_used(const BaProof& p) {
    std::set<std::string> out{p.rule};
    for (auto& q : p.premises)
        for (auto& r : rules_used(q)) out.insert(r);
    return out;
}

bool all_formulas(const BaProof& p, bool (*pred)(const Formula&)) {
    if (!pred(p.conclusion.ante) || !pred(p.conclusion.cons)) return false;
    for (auto& q : p.premises)
        if (!all_formulas(q, pred)) return false;
    return true;
}

}  // namespace bakit
