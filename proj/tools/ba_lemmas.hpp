#pragma once

#include <string>
#include <vector>

#include "bakit/proofs_ba.hpp"

namespace bakit::lemmas {

struct Fixture {
    std::string name;
    std::string theory;  // ba, ba-u, ba-c
    BaProof proof;
    // uniqueness conditionals: graph formula and its output variable
    std::string graph;
    std::string out;
};

std::vector<Fixture> ba_fixtures();

}  // namespace bakit::lemmas
