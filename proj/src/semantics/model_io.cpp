#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bakit/semantics.hpp"

namespace bakit {

using json = nlohmann::json;

namespace {

ElementId elem(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return ElementId::infinity();
        throw EvalError("bad element " + j.dump());
    }
    return ElementId::nat(j.get<std::uint64_t>());
}

json elem_json(const ElementId& e) {
    if (e.inf) return "inf";
    return e.n;
}

StructureSpec structure(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "StdN") {
        StructureSpec s = StructureSpec::std_n();
        s.monus_enabled = j.value("monus", true);
        return s;
    }
    if (kind == "NStar") return StructureSpec::n_star();
    if (kind != "FiniteTable") throw EvalError("unknown structure kind " + kind);
    FiniteTable t;
    for (auto& e : j.at("carrier")) t.carrier.push_back(elem(e));
    for (auto& e : j.value("succ", json::array())) t.succ[elem(e[0])] = elem(e[1]);
    for (auto& e : j.value("add", json::array())) t.add[{elem(e[0]), elem(e[1])}] = elem(e[2]);
    for (auto& e : j.value("mul", json::array())) t.mul[{elem(e[0]), elem(e[1])}] = elem(e[2]);
    for (auto& e : j.value("monus_table", json::array())) t.monus[{elem(e[0]), elem(e[1])}] = elem(e[2]);
    for (auto& e : j.value("lt", json::array())) t.lt.insert({elem(e[0]), elem(e[1])});
    return StructureSpec::finite(std::move(t), j.value("monus", false));
}

json structure_json(const StructureSpec& s) {
    json j;
    j["kind"] = to_string(s.kind);
    if (s.kind == StructureSpec::Kind::StdN) {
        if (!s.monus_enabled) j["monus"] = false;
        return j;
    }
    if (s.kind == StructureSpec::Kind::NStar) return j;
    const FiniteTable& t = s.table;
    j["monus"] = s.monus_enabled;
    for (auto& e : t.carrier) j["carrier"].push_back(elem_json(e));
    for (auto& [a, b] : t.succ) j["succ"].push_back({elem_json(a), elem_json(b)});
    for (auto& [k, v] : t.add) j["add"].push_back({elem_json(k.first), elem_json(k.second), elem_json(v)});
    for (auto& [k, v] : t.mul) j["mul"].push_back({elem_json(k.first), elem_json(k.second), elem_json(v)});
    for (auto& [k, v] : t.monus)
        j["monus_table"].push_back({elem_json(k.first), elem_json(k.second), elem_json(v)});
    for (auto& [a, b] : t.lt) j["lt"].push_back({elem_json(a), elem_json(b)});
    return j;
}

}  // namespace

KripkeModel model_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw EvalError(std::string("bad model json: ") + e.what());
    }
    KripkeModel m;
    for (auto& n : j.at("nodes"))
        m.nodes.push_back({n.at("id").get<int>(), n.value("reflexive", false), structure(n.at("structure"))});
    for (auto& e : j.value("edges", json::array())) m.edges.insert({e[0].get<int>(), e[1].get<int>()});
    return m;
}

std::string model_to_json(const KripkeModel& m) {
    json j;
    j["nodes"] = json::array();
    for (auto& n : m.nodes)
        j["nodes"].push_back({{"id", n.id}, {"reflexive", n.reflexive}, {"structure", structure_json(n.structure)}});
    j["edges"] = json::array();
    for (auto& [a, b] : m.edges) j["edges"].push_back({a, b});
    return j.dump(2);
}

KripkeModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EvalError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return model_from_json(ss.str());
}

}  // namespace bakit
