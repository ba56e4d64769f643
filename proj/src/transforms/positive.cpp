#include "bakit/transforms.hpp"

namespace bakit {

using K = Formula::Kind;

Formula positive_part(const Formula& f) {
    switch (f.kind()) {
    case K::And: return Formula::conj(positive_part(f.left()), positive_part(f.right()));
    case K::Or: return Formula::disj(positive_part(f.left()), positive_part(f.right()));
    case K::Exists: return Formula::exists(f.var(), positive_part(f.body()));
    case K::Block:
    case K::Imp:
    case K::Neg:
    case K::Forall: return Formula::top();
    default: return f;
    }
}

Formula semi_positive_part(const Formula& f) {
    switch (f.kind()) {
    case K::And: return Formula::conj(semi_positive_part(f.left()), semi_positive_part(f.right()));
    case K::Or: return Formula::disj(semi_positive_part(f.left()), semi_positive_part(f.right()));
    case K::Exists: return Formula::exists(f.var(), semi_positive_part(f.body()));
    case K::Block: return Formula::block(f.vars(), positive_part(f.left()), positive_part(f.right()));
    case K::Imp: return Formula::imp(positive_part(f.left()), positive_part(f.right()));
    case K::Neg: return Formula::neg(positive_part(f.body()));
    case K::Forall: return Formula::forall(f.var(), positive_part(f.body()));
    default: return f;
    }
}

}  // namespace bakit
