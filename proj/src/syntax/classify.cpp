#include "bakit/syntax.hpp"

namespace bakit {

using K = Formula::Kind;

bool bounded_exists_parts(const Formula& f, std::string& x, Term& bound, Formula& body) {
    if (!f.is(K::Exists)) return false;
    const Formula& b = f.body();
    if (!b.is(K::And) || !b.left().is(K::Lt)) return false;
    const Term& l = b.left().lterm();
    if (!l.is_var() || l.name() != f.var()) return false;
    if (vars_of(b.left().rterm()).count(f.var())) return false;
    x = f.var();
    bound = b.left().rterm();
    body = b.right();
    return true;
}

bool bounded_forall_parts(const Formula& f, std::string& x, Term& bound, Formula& body) {
    const Formula* guard = nullptr;
    const Formula* rest = nullptr;
    std::string v;
    if (f.is(K::Block) && f.vars().size() == 1) {
        v = f.vars()[0];
        guard = &f.left();
        rest = &f.right();
    } else if (f.is(K::Forall) && f.body().is(K::Imp)) {
        v = f.var();
        guard = &f.body().left();
        rest = &f.body().right();
    } else {
        return false;
    }
    if (!guard->is(K::Lt)) return false;
    const Term& l = guard->lterm();
    if (!l.is_var() || l.name() != v) return false;
    if (vars_of(guard->rterm()).count(v)) return false;
    x = v;
    bound = guard->rterm();
    body = *rest;
    return true;
}

bool is_quantifier_free(const Formula& f) {
    switch (f.kind()) {
    case K::Exists:
    case K::Forall: return false;
    case K::Block:
        return f.vars().empty() && is_quantifier_free(f.left()) && is_quantifier_free(f.right());
    case K::And:
    case K::Or:
    case K::Imp: return is_quantifier_free(f.left()) && is_quantifier_free(f.right());
    case K::Neg: return is_quantifier_free(f.body());
    default: return true;
    }
}

bool is_positive(const Formula& f) {
    switch (f.kind()) {
    case K::And:
    case K::Or: return is_positive(f.left()) && is_positive(f.right());
    case K::Exists: return is_positive(f.body());
    case K::Block:
    case K::Neg:
    case K::Imp:
    case K::Forall: return false;
    default: return true;
    }
}

bool is_delta0(const Formula& f) {
    if (f.is_atomic()) return true;
    std::string x;
    Term bound = Term::zero();
    Formula body = Formula::top();
    switch (f.kind()) {
    case K::And:
    case K::Or:
    case K::Imp: return is_delta0(f.left()) && is_delta0(f.right());
    case K::Neg: return is_delta0(f.body());
    case K::Exists: return bounded_exists_parts(f, x, bound, body) && is_delta0(body);
    case K::Forall: return bounded_forall_parts(f, x, bound, body) && is_delta0(body);
    case K::Block:
        if (f.vars().empty()) return is_delta0(f.left()) && is_delta0(f.right());
        return bounded_forall_parts(f, x, bound, body) && is_delta0(body);
    default: return false;
    }
}

namespace {

// closure of a base class under conjunction, disjunction and unbounded existentials
template <class Base>
bool existential_closure(const Formula& f, Base base) {
    if (base(f)) return true;
    switch (f.kind()) {
    case K::And:
    case K::Or: return existential_closure(f.left(), base) && existential_closure(f.right(), base);
    case K::Exists: return existential_closure(f.body(), base);
    default: return false;
    }
}

bool is_exists_one(const Formula& f) { return existential_closure(f, is_quantifier_free); }
bool is_sigma_one(const Formula& f) { return existential_closure(f, is_delta0); }

bool is_pi_two(const Formula& f) {
    return f.is(K::Block) && f.left().is(K::Top) && is_sigma_one(f.right());
}

}  // namespace

bool in_class(const Formula& f, FormulaClass c) {
    switch (c) {
    case FormulaClass::Atomic: return f.is_atomic();
    case FormulaClass::QuantifierFree: return is_quantifier_free(f);
    case FormulaClass::Positive:
    case FormulaClass::ExistsOnePos: return is_positive(f);
    case FormulaClass::ExistsOne: return is_exists_one(f);
    case FormulaClass::DeltaZero: return is_delta0(f);
    case FormulaClass::SigmaOne: return is_sigma_one(f);
    case FormulaClass::PiTwo: return is_pi_two(f);
    }
    return false;
}

std::set<FormulaClass> classify(const Formula& f) {
    std::set<FormulaClass> out;
    for (auto c : {FormulaClass::Atomic, FormulaClass::QuantifierFree, FormulaClass::Positive,
                   FormulaClass::ExistsOne, FormulaClass::ExistsOnePos, FormulaClass::DeltaZero,
                   FormulaClass::SigmaOne, FormulaClass::PiTwo})
        if (in_class(f, c)) out.insert(c);
    return out;
}

std::string to_string(FormulaClass c) {
    switch (c) {
    case FormulaClass::Atomic: return "Atomic";
    case FormulaClass::QuantifierFree: return "QuantifierFree";
    case FormulaClass::Positive: return "Positive";
    case FormulaClass::ExistsOne: return "ExistsOne";
    case FormulaClass::ExistsOnePos: return "ExistsOnePos";
    case FormulaClass::DeltaZero: return "DeltaZero";
    case FormulaClass::SigmaOne: return "SigmaOne";
    case FormulaClass::PiTwo: return "PiTwo";
    }
    return "?";
}

}  // namespace bakit
