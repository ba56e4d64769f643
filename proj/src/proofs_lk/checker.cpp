#include <algorithm>

#include "bakit/proofs_lk.hpp"

namespace bakit {

std::string LkReport::summary() const {
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

void check_rec(const LkProof& p, const ClassPredicate& cls, std::vector<std::size_t>& path, LkReport& r) {
    auto diag = [&](const std::string& kind, const std::string& msg) {
        r.diagnostics.push_back({path, p.rule, kind, msg});
    };
    for (std::size_t i = 0; i < p.premises.size(); ++i) {
        path.push_back(i);
        check_rec(p.premises[i], cls, path, r);
        path.pop_back();
    }
    std::vector<LkSequent> prem;
    for (auto& q : p.premises) prem.push_back(q.conclusion);
    LkInstance in;
    try {
        in = lk_instantiate(p.rule, p.bind, prem);
    } catch (const RuleError& e) {
        std::string m = e.what();
        diag(m.find("premises") != std::string::npos ? "arity" : "binding", m);
        return;
    }
    for (auto& e : in.premise_errors) diag("premise", e);
    for (auto& e : in.side_errors) diag("side-condition", e);
    if (!in.premise_errors.empty()) return;
    if (!(in.conclusion == p.conclusion))
        diag("mismatch", "expected " + to_string(in.conclusion) + ", found " + to_string(p.conclusion));
    if (p.rule == "ind") {
        auto it = p.bind.find("A");
        if (it != p.bind.end() && !cls(std::get<Formula>(it->second)))
            diag("class", "induction formula is outside " + cls.name);
    }
}

void walk(const LkProof& p, const std::function<void(const LkProof&)>& f) {
    f(p);
    for (auto& q : p.premises) walk(q, f);
}

}  // namespace

LkReport check_lk(const LkProof& p, const ClassPredicate& cls) {
    LkReport r;
    std::vector<std::size_t> path;
    check_rec(p, cls, path, r);
    return r;
}

LkProof lk_node(const std::string& rule, Bindings b, std::vector<LkProof> premises) {
    std::vector<LkSequent> prem;
    for (auto& q : premises) prem.push_back(q.conclusion);
    LkInstance in = lk_instantiate(rule, b, prem);
    if (!in.premise_errors.empty()) throw RuleError(in.premise_errors.front());
    if (!in.side_errors.empty()) throw RuleError(in.side_errors.front());
    return {in.conclusion, rule, std::move(b), std::move(premises)};
}

std::size_t lk_height(const LkProof& p) {
    std::size_t h = 0;
    for (auto& q : p.premises) h = std::max(h, lk_height(q));
    return h + 1;
}

std::size_t lk_node_count(const LkProof& p) {
    std::size_t n = 1;
    for (auto& q : p.premises) n += lk_node_count(q);
    return n;
}

std::vector<Formula> cut_formulas(const LkProof& p) {
    std::vector<Formula> out;
    walk(p, [&](const LkProof& q) {
        if (q.rule == "Cut") out.push_back(std::get<Formula>(q.bind.at("A")));
    });
    return out;
}

std::vector<Formula> lk_all_formulas(const LkProof& p) {
    std::vector<Formula> out;
    walk(p, [&](const LkProof& q) {
        out.insert(out.end(), q.conclusion.ante.begin(), q.conclusion.ante.end());
        out.insert(out.end(), q.conclusion.cons.begin(), q.conclusion.cons.end());
    });
    return out;
}

std::set<std::string> lk_rules_used(const LkProof& p) {
    std::set<std::string> out;
    walk(p, [&](const LkProof& q) { out.insert(q.rule); });
    return out;
}

}  // namespace bakit
