#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "bakit/harness.hpp"

namespace bakit {

namespace {

nlohmann::json assertion_json(const Assertion& a) {
    nlohmann::json ev = nlohmann::json::object();
    for (auto& [k, v] : a.evidence) ev[k] = v;
    return {{"description", a.description}, {"expected", a.expected}, {"actual", a.actual},
            {"pass", a.pass},               {"unknown", a.unknown},   {"provenance", a.provenance},
            {"evidence", ev}};
}

std::string status(const ScenarioReport& r) {
    if (r.unknown()) return "UNKNOWN";
    return r.pass() ? "PASS" : "FAIL";
}

}  // namespace

std::string report_text(const ScenarioReport& r) {
    std::ostringstream out;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
    out << status(r) << "  " << r.name << "  (" << r.assertions.size() << " assertions, " << secs << " s)\n";
    for (auto& a : r.assertions) {
        out << "  " << (a.pass ? "ok  " : a.unknown ? "??  " : "XX  ") << a.description;
        if (!a.pass) out << "  [expected " << a.expected << ", got " << a.actual << "]";
        out << "\n";
        if (!a.evidence.empty()) {
            out << "      ";
            for (std::size_t i = 0; i < a.evidence.size(); ++i)
                out << (i ? ", " : "") << a.evidence[i].first << "=" << a.evidence[i].second;
            out << "\n";
        }
    }
    return out.str();
}

std::string report_json(const std::vector<ScenarioReport>& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& r : rs) {
        nlohmann::json as = nlohmann::json::array();
        for (auto& a : r.assertions) as.push_back(assertion_json(a));
        arr.push_back({{"name", r.name}, {"status", status(r)}, {"seconds", r.seconds}, {"assertions", as}});
    }
    return nlohmann::json{{"scenarios", arr}, {"exit_code", exit_code(rs)}}.dump(2);
}

int exit_code(const std::vector<ScenarioReport>& rs) {
    bool unknown = false, fail = false;
    for (auto& r : rs) {
        for (auto& a : r.assertions) {
            if (a.unknown)
                unknown = true;
            else if (!a.pass)
                fail = true;
        }
        if (r.assertions.empty()) fail = true;
    }
    if (fail) return 1;
    return unknown ? 2 : 0;
}

std::string verdict_text(const Verdict& v) {
    std::ostringstream out;
    out << to_string(v.truth);
    if (v.params_sampled) out << " (parameters sampled)";
    if (v.evidence) {
        out << "\n  node " << v.evidence->node;
        for (auto& [k, e] : v.evidence->asg) out << ", " << k << "=" << to_string(e);
    }
    return out.str();
}

std::string verdict_json(const Verdict& v) {
    nlohmann::json j{{"truth", to_string(v.truth)}, {"params_sampled", v.params_sampled}};
    if (v.evidence) {
        nlohmann::json asg = nlohmann::json::object();
        for (auto& [k, e] : v.evidence->asg) asg[k] = to_string(e);
        j["evidence"] = {{"node", v.evidence->node}, {"assignment", asg}};
    }
    return j.dump(2);
}

}  // namespace bakit
