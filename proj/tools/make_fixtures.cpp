#include <filesystem>
#include <fstream>
#include <iostream>

#include "json.hpp"

#include "ba_lemmas.hpp"
#include "lk_lemmas.hpp"

namespace fs = std::filesystem;
using namespace bakit;

int main(int argc, char** argv) {
    fs::path root = argc > 1 ? argv[1] : "fixtures";
    fs::create_directories(root / "ba");
    nlohmann::json index = nlohmann::json::array();
    int bad = 0;
    for (auto& f : lemmas::ba_fixtures()) {
        CheckReport r = check_proof(f.proof, TheoryPack::by_name(f.theory));
        if (!r.ok()) {
            std::cerr << f.name << ": " << r.summary() << "\n";
            ++bad;
            continue;
        }
        std::ofstream(root / "ba" / (f.name + ".json")) << ba_proof_to_json(f.proof) << "\n";
        nlohmann::json e = {{"file", f.name + ".json"}, {"theory", f.theory},
                            {"conclusion", to_string(f.proof.conclusion)}, {"nodes", node_count(f.proof)}};
        if (!f.graph.empty()) e["uniqueness"] = {{"graph", f.graph}, {"out", f.out}};
        index.push_back(e);
        std::cout << f.name << "  " << to_string(f.proof.conclusion) << "  (" << node_count(f.proof) << " nodes)\n";
    }
    std::ofstream(root / "ba" / "index.json") << index.dump(1) << "\n";

    fs::create_directories(root / "lk");
    nlohmann::json lk_index = nlohmann::json::array();
    for (auto& f : lemmas::lk_fixtures()) {
        LkReport r = check_lk(f.proof, ClassPredicate::by_name(f.cls));
        if (!r.ok()) {
            std::cerr << f.name << ": " << r.summary() << "\n";
            ++bad;
            continue;
        }
        std::ofstream(root / "lk" / (f.name + ".json")) << lk_proof_to_json(f.proof) << "\n";
        lk_index.push_back({{"file", f.name + ".json"}, {"class", f.cls},
                            {"conclusion", to_string(f.proof.conclusion)}, {"nodes", lk_node_count(f.proof)}});
        std::cout << f.name << "  " << to_string(f.proof.conclusion) << "  (" << lk_node_count(f.proof) << " nodes)\n";
    }
    std::ofstream(root / "lk" / "index.json") << lk_index.dump(1) << "\n";
    return bad ? 1 : 0;
}
