#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bakit/semantics.hpp"

namespace bakit {

struct Assertion {
    std::string description;
    std::string expected;  // True, False or ok
    std::string actual;
    bool pass = false;
    bool unknown = false;  // an Unknown verdict where True/False was expected
    std::string provenance;
    std::vector<std::pair<std::string, std::string>> evidence;
};

struct ScenarioReport {
    std::string name;
    std::vector<Assertion> assertions;
    double seconds = 0;

    bool pass() const;
    bool unknown() const;
};

std::vector<std::string> scenario_names();
std::string default_fixture_dir();
// throws std::invalid_argument for an unregistered name
ScenarioReport run_scenario(const std::string& name, const std::string& fixture_dir = default_fixture_dir());
std::vector<ScenarioReport> run_scenarios(const std::vector<std::string>& names, bool parallel,
                                          const std::string& fixture_dir = default_fixture_dir());

// positive formulas in the single free variable x
const std::vector<std::string>& overspill_corpus();

std::string report_text(const ScenarioReport& r);
std::string report_json(const std::vector<ScenarioReport>& rs);
// 0 all pass, 1 any failure, 2 any unknown verdict
int exit_code(const std::vector<ScenarioReport>& rs);

std::string verdict_text(const Verdict& v);
std::string verdict_json(const Verdict& v);

}  // namespace bakit
