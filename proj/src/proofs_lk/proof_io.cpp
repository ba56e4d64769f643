#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bakit/proofs_lk.hpp"

namespace bakit {

using json = nlohmann::json;

namespace {

LkProof from_json(const json& j) {
    LkProof p{parse_lk_sequent(j.at("conclusion").get<std::string>()), j.at("rule").get<std::string>(), {}, {}};
    json bind = j.value("bind", json::object());
    for (auto& [k, v] : bind.items()) {
        std::string text = v.get<std::string>();
        MetaKind kind = lk_meta_kind(k);
        if (kind == MetaKind::Formula)
            p.bind[k] = parse_formula(text, Language::Lc, Dialect::Classical);
        else
            p.bind[k] = parse_meta(text, kind, Language::Lc);
    }
    for (auto& q : j.value("premises", json::array())) p.premises.push_back(from_json(q));
    return p;
}

json to_json(const LkProof& p) {
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

LkProof lk_proof_from_json(const std::string& text) {
    try {
        return from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw RuleError(std::string("bad proof json: ") + e.what());
    }
}

std::string lk_proof_to_json(const LkProof& p, int indent) { return to_json(p).dump(indent); }

LkProof load_lk_proof(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RuleError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return lk_proof_from_json(ss.str());
}

}  // namespace bakit
