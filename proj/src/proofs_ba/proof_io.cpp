#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bakit/proofs_ba.hpp"

namespace bakit {

using json = nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& p : out) {
        auto a = p.find_first_not_of(" \t");
        auto b = p.find_last_not_of(" \t");
        p = a == std::string::npos ? "" : p.substr(a, b - a + 1);
    }
    if (out.size() == 1 && out[0].empty()) out.clear();
    return out;
}

BaProof from_json(const json& j, Language lang) {
    BaProof p{parse_sequent(j.at("conclusion").get<std::string>(), lang), j.at("rule").get<std::string>(), {}, {}};
    const RuleSig& sig = rule_signature(p.rule);
    json bind = j.value("bind", json::object());
    for (auto& [name, kind] : sig.metas) {
        if (!bind.contains(name)) continue;
        p.bind[name] = parse_meta(bind.at(name).get<std::string>(), kind, lang);
    }
    for (auto& [k, v] : bind.items()) {
        bool known = false;
        for (auto& m : sig.metas) known = known || m.first == k;
        if (!known) throw RuleError(p.rule + ": unexpected binding " + k);
    }
    for (auto& q : j.value("premises", json::array())) p.premises.push_back(from_json(q, lang));
    return p;
}

json to_json(const BaProof& p) {
    json j;
    j["conclusion"] = to_string(p.conclusion);
    j["rule"] = p.rule;
    j["bind"] = json::object();
    for (auto& [k, v] : p.bind) j["bind"][k] = meta_to_string(v);
    j["premises"] = json::array();
    for (auto& q : p.premises) j["premises"].push_back(to_json(q));
    return j;
}

}  // namespace

std::string meta_to_string(const Meta& m) {
    if (auto f = std::get_if<Formula>(&m)) return to_string(*f);
    if (auto t = std::get_if<Term>(&m)) return to_string(*t);
    if (auto v = std::get_if<std::string>(&m)) return *v;
    std::string out;
    if (auto vs = std::get_if<std::vector<std::string>>(&m))
        for (auto& v : *vs) out += (out.empty() ? "" : ",") + v;
    if (auto ts = std::get_if<std::vector<Term>>(&m))
        for (auto& t : *ts) out += (out.empty() ? "" : ", ") + to_string(t);
    return out;
}

Meta parse_meta(const std::string& text, MetaKind k, Language lang) {
    switch (k) {
    case MetaKind::Formula: return parse_formula(text, lang);
    case MetaKind::Term: return parse_term(text, lang);
    case MetaKind::Var: {
        auto v = split(text);
        if (v.size() != 1) throw RuleError("expected one variable, got '" + text + "'");
        return v[0];
    }
    case MetaKind::Vars: return split(text);
    case MetaKind::Terms: {
        std::vector<Term> ts;
        for (auto& s : split(text)) ts.push_back(parse_term(s, lang));
        return ts;
    }
    }
    return {};
}

BaProof ba_proof_from_json(const std::string& text, Language lang) {
    try {
        return from_json(json::parse(text), lang);
    } catch (const json::exception& e) {
        throw RuleError(std::string("bad proof json: ") + e.what());
    }
}

std::string ba_proof_to_json(const BaProof& p, int indent) { return to_json(p).dump(indent); }

BaProof load_ba_proof(const std::string& path, Language lang) {
    std::ifstream in(path);
    if (!in) throw RuleError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ba_proof_from_json(ss.str(), lang);
}

}  // namespace bakit
