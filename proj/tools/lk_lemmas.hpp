#pragma once

#include <string>
#include <vector>

#include "bakit/proofs_lk.hpp"

namespace bakit::lemmas {

struct LkFixture {
    std::string name;
    std::string cls;  // class whose cuts are kept
    LkProof proof;
};

std::vector<LkFixture> lk_fixtures();

}  // namespace bakit::lemmas
