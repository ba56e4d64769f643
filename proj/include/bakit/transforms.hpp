#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bakit/syntax.hpp"

namespace bakit {

struct TransformError : std::invalid_argument {
    std::string code;  // NotQuantifierFree, NotDeltaZero, BadTotalizerInput
    TransformError(std::string code, const std::string& msg)
        : std::invalid_argument(code + ": " + msg), code(std::move(code)) {}
};

// blocks become T
Formula positive_part(const Formula& f);
// blocks keep their shape with positive parts on both sides
Formula semi_positive_part(const Formula& f);

Formula open_positive(const Formula& f);
Formula open_negation(const Formula& f);

Formula bounded_negation(const Formula& f);

// eliminates cut-off subtraction, innermost-leftmost occurrence first
Formula star_translate(const Formula& f);
// one replacement step; returns false at the fixpoint
bool star_step(const Formula& f, Formula& out);

struct TotalizerInput {
    Formula A;
    std::vector<std::string> xs;
    std::string y;
    std::vector<std::string> zs;
};

struct TotalizerParts {
    Formula U;  // U(t)
    Formula B;
    Formula C;
    Formula D;
};

// U(x) with u+v+w <= x written as u+v+w < Sx
Formula uniqueness_bound(const Term& x, const VarSet& avoid);
TotalizerParts sigma1_totalizer_parts(const TotalizerInput& in);
Formula sigma1_totalizer(const TotalizerInput& in);

}  // namespace bakit
