#include <optional>

#include "bakit/transforms.hpp"

namespace bakit {

using K = Formula::Kind;
using TK = Term::Kind;

namespace {

// innermost-leftmost monus subterm
std::optional<Term> innermost_monus(const Term& t) {
    switch (t.kind()) {
    case TK::Succ: return innermost_monus(t.arg());
    case TK::Add:
    case TK::Mul:
    case TK::Monus: {
        if (auto l = innermost_monus(t.lhs())) return l;
        if (auto r = innermost_monus(t.rhs())) return r;
        if (t.kind() == TK::Monus) return t;
        return std::nullopt;
    }
    default: return std::nullopt;
    }
}

Term replace_term(const Term& t, const Term& from, const Term& to) {
    if (t == from) return to;
    switch (t.kind()) {
    case TK::Succ: return Term::succ(replace_term(t.arg(), from, to));
    case TK::Add: return Term::add(replace_term(t.lhs(), from, to), replace_term(t.rhs(), from, to));
    case TK::Mul: return Term::mul(replace_term(t.lhs(), from, to), replace_term(t.rhs(), from, to));
    case TK::Monus: return Term::monus(replace_term(t.lhs(), from, to), replace_term(t.rhs(), from, to));
    default: return t;
    }
}

// leftmost atom containing a monus
std::optional<Formula> first_atom(const Formula& f) {
    switch (f.kind()) {
    case K::Eq:
    case K::Lt:
        if (f.has_monus()) return f;
        return std::nullopt;
    case K::And:
    case K::Or:
    case K::Block:
    case K::Imp: {
        if (auto l = first_atom(f.left())) return l;
        return first_atom(f.right());
    }
    case K::Exists:
    case K::Forall:
    case K::Neg: return first_atom(f.body());
    default: return std::nullopt;
    }
}

Formula replace_atom(const Formula& f, const Formula& from, const Formula& to) {
    if (f == from) return to;
    switch (f.kind()) {
    case K::And: return Formula::conj(replace_atom(f.left(), from, to), replace_atom(f.right(), from, to));
    case K::Or: return Formula::disj(replace_atom(f.left(), from, to), replace_atom(f.right(), from, to));
    case K::Block:
        return Formula::block(f.vars(), replace_atom(f.left(), from, to), replace_atom(f.right(), from, to));
    case K::Imp: return Formula::imp(replace_atom(f.left(), from, to), replace_atom(f.right(), from, to));
    case K::Exists: return Formula::exists(f.var(), replace_atom(f.body(), from, to));
    case K::Forall: return Formula::forall(f.var(), replace_atom(f.body(), from, to));
    case K::Neg: return Formula::neg(replace_atom(f.body(), from, to));
    default: return f;
    }
}

}  // namespace

bool star_step(const Formula& f, Formula& out) {
    auto atom = first_atom(f);
    if (!atom) return false;
    auto l = innermost_monus(atom->lterm());
    Term m = l ? *l : *innermost_monus(atom->rterm());
    const Term& t = m.lhs();
    const Term& s = m.rhs();
    std::string z = fresh_var("z", all_vars(f));
    Term zv = Term::var(z);
    Term lt = replace_term(atom->lterm(), m, zv);
    Term rt = replace_term(atom->rterm(), m, zv);
    Formula bz = atom->is(K::Eq) ? Formula::eq(lt, rt) : Formula::lt(lt, rt);
    Formula guard = Formula::disj(Formula::conj(Formula::lt(t, s), Formula::eq(zv, Term::zero())),
                                  Formula::eq(t, Term::add(s, zv)));
    out = replace_atom(f, *atom, Formula::exists(z, Formula::conj(guard, bz)));
    return true;
}

Formula star_translate(const Formula& f) {
    Formula cur = f;
    Formula next = f;
    while (star_step(cur, next)) cur = next;
    return cur;
}

}  // namespace bakit
