#pragma once

#include <vector>

#include "bakit/semantics.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

namespace bakit::testgen {

// up to four nodes, transitive, no standard node above an extended one
KripkeModel random_model(Gen& g);

std::vector<oracle::Node> oracle_frame(const KripkeModel& m);

}  // namespace bakit::testgen
