#include "bakit/transforms.hpp"

namespace bakit {

using K = Formula::Kind;

namespace {

void require_qf(const Formula& f) {
    if (!is_quantifier_free(f)) throw TransformError("NotQuantifierFree", to_string(f));
}

Formula pos(const Formula& f);

Formula neg(const Formula& f) {
    switch (f.kind()) {
    case K::Top: return Formula::bot();
    case K::Bot: return Formula::top();
    case K::Eq: return Formula::disj(Formula::lt(f.lterm(), f.rterm()), Formula::lt(f.rterm(), f.lterm()));
    case K::Lt: return Formula::disj(Formula::eq(f.lterm(), f.rterm()), Formula::lt(f.rterm(), f.lterm()));
    case K::And: return Formula::disj(neg(f.left()), neg(f.right()));
    case K::Or: return Formula::conj(neg(f.left()), neg(f.right()));
    case K::Block:
    case K::Imp: return Formula::conj(pos(f.left()), neg(f.right()));
    case K::Neg: return Formula::conj(pos(f.body()), Formula::top());
    default: throw TransformError("NotQuantifierFree", to_string(f));
    }
}

Formula pos(const Formula& f) {
    switch (f.kind()) {
    case K::Top:
    case K::Bot:
    case K::Eq:
    case K::Lt: return f;
    case K::And: return Formula::conj(pos(f.left()), pos(f.right()));
    case K::Or: return Formula::disj(pos(f.left()), pos(f.right()));
    case K::Block:
    case K::Imp: return Formula::disj(neg(f.left()), pos(f.right()));
    case K::Neg: return Formula::disj(neg(f.body()), Formula::bot());
    default: throw TransformError("NotQuantifierFree", to_string(f));
    }
}

}  // namespace

Formula open_positive(const Formula& f) {
    require_qf(f);
    return pos(f);
}

Formula open_negation(const Formula& f) {
    require_qf(f);
    return neg(f);
}

Formula bounded_negation(const Formula& f) {
    if (!is_delta0(f)) throw TransformError("NotDeltaZero", to_string(f));
    std::string x;
    Term bound = Term::zero();
    Formula body = Formula::top();
    if (bounded_exists_parts(f, x, bound, body))
        return Formula::block({x}, Formula::lt(Term::var(x), bound), bounded_negation(body));
    if (bounded_forall_parts(f, x, bound, body))
        return Formula::exists(x, Formula::conj(Formula::lt(Term::var(x), bound), bounded_negation(body)));
    switch (f.kind()) {
    case K::Top: return Formula::bot();
    case K::Bot: return Formula::top();
    case K::Eq: return Formula::disj(Formula::lt(f.rterm(), f.lterm()), Formula::lt(f.lterm(), f.rterm()));
    case K::Lt: return Formula::disj(Formula::lt(f.rterm(), f.lterm()), Formula::eq(f.lterm(), f.rterm()));
    case K::And: return Formula::disj(bounded_negation(f.left()), bounded_negation(f.right()));
    case K::Or: return Formula::conj(bounded_negation(f.left()), bounded_negation(f.right()));
    case K::Block:
    case K::Imp: return Formula::conj(f.left(), bounded_negation(f.right()));
    case K::Neg: return Formula::conj(f.body(), Formula::top());
    default: throw TransformError("NotDeltaZero", to_string(f));
    }
}

}  // namespace bakit
