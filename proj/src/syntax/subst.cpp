#include "bakit/syntax.hpp"

#include <algorithm>

namespace bakit {

namespace {

void collect_term_vars(const Term& t, VarSet& out) {
    switch (t.kind()) {
    case Term::Kind::Var: out.insert(t.name()); break;
    case Term::Kind::Zero: break;
    case Term::Kind::Succ: collect_term_vars(t.arg(), out); break;
    default:
        collect_term_vars(t.lhs(), out);
        collect_term_vars(t.rhs(), out);
    }
}

void collect_free(const Formula& f, VarSet& bound, VarSet& out) {
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::Top:
    case K::Bot: return;
    case K::Eq:
    case K::Lt: {
        VarSet vs;
        collect_term_vars(f.lterm(), vs);
        collect_term_vars(f.rterm(), vs);
        for (auto& v : vs)
            if (!bound.count(v)) out.insert(v);
        return;
    }
    case K::And:
    case K::Or:
    case K::Imp:
        collect_free(f.left(), bound, out);
        collect_free(f.right(), bound, out);
        return;
    case K::Neg: collect_free(f.body(), bound, out); return;
    case K::Exists:
    case K::Forall:
    case K::Block: {
        std::vector<std::string> added;
        for (auto& v : f.vars())
            if (bound.insert(v).second) added.push_back(v);
        if (f.is(K::Block)) {
            collect_free(f.left(), bound, out);
            collect_free(f.right(), bound, out);
        } else {
            collect_free(f.body(), bound, out);
        }
        for (auto& v : added) bound.erase(v);
        return;
    }
    }
}

void collect_bound(const Formula& f, VarSet& out) {
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::Exists:
    case K::Forall:
    case K::Block:
        for (auto& v : f.vars()) out.insert(v);
        break;
    default: break;
    }
    switch (f.kind()) {
    case K::And:
    case K::Or:
    case K::Imp:
    case K::Block:
        collect_bound(f.left(), out);
        collect_bound(f.right(), out);
        break;
    case K::Exists:
    case K::Forall:
    case K::Neg: collect_bound(f.body(), out); break;
    default: break;
    }
}

const Term* lookup(const Substitution& s, const std::string& v) {
    for (auto& [x, t] : s)
        if (x == v) return &t;
    return nullptr;
}

Formula subst_rec(const Formula& f, const Substitution& s) {
    using K = Formula::Kind;
    if (s.empty()) return f;
    switch (f.kind()) {
    case K::Top:
    case K::Bot: return f;
    case K::Eq: return Formula::eq(substitute(f.lterm(), s), substitute(f.rterm(), s));
    case K::Lt: return Formula::lt(substitute(f.lterm(), s), substitute(f.rterm(), s));
    case K::And: return Formula::conj(subst_rec(f.left(), s), subst_rec(f.right(), s));
    case K::Or: return Formula::disj(subst_rec(f.left(), s), subst_rec(f.right(), s));
    case K::Imp: return Formula::imp(subst_rec(f.left(), s), subst_rec(f.right(), s));
    case K::Neg: return Formula::neg(subst_rec(f.body(), s));
    case K::Exists:
    case K::Forall:
    case K::Block: {
        Substitution inner;
        for (auto& [x, t] : s) {
            if (std::find(f.vars().begin(), f.vars().end(), x) != f.vars().end()) continue;
            if (!occurs_free(x, f)) continue;
            VarSet tv = vars_of(t);
            for (auto& b : f.vars())
                if (tv.count(b)) throw CaptureViolation(b, b);
            inner.emplace_back(x, t);
        }
        if (inner.empty()) return f;
        if (f.is(K::Block))
            return Formula::block(f.vars(), subst_rec(f.left(), inner), subst_rec(f.right(), inner));
        if (f.is(K::Exists)) return Formula::exists(f.var(), subst_rec(f.body(), inner));
        return Formula::forall(f.var(), subst_rec(f.body(), inner));
    }
    }
    return f;
}

Term rename_term(const Term& t, const std::string& from, const std::string& to) {
    return substitute(t, Substitution{{from, Term::var(to)}});
}

Formula rename_rec(const Formula& f, const std::string& from, const std::string& to, bool bound) {
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::Top:
    case K::Bot: return f;
    case K::Eq:
        return bound ? Formula::eq(rename_term(f.lterm(), from, to), rename_term(f.rterm(), from, to)) : f;
    case K::Lt:
        return bound ? Formula::lt(rename_term(f.lterm(), from, to), rename_term(f.rterm(), from, to)) : f;
    case K::And: return Formula::conj(rename_rec(f.left(), from, to, bound), rename_rec(f.right(), from, to, bound));
    case K::Or: return Formula::disj(rename_rec(f.left(), from, to, bound), rename_rec(f.right(), from, to, bound));
    case K::Imp: return Formula::imp(rename_rec(f.left(), from, to, bound), rename_rec(f.right(), from, to, bound));
    case K::Neg: return Formula::neg(rename_rec(f.body(), from, to, bound));
    case K::Exists:
    case K::Forall:
    case K::Block: {
        bool binds = std::find(f.vars().begin(), f.vars().end(), from) != f.vars().end();
        bool inner = binds ? true : bound;
        std::vector<std::string> vars = f.vars();
        if (binds) std::replace(vars.begin(), vars.end(), from, to);
        if (f.is(K::Block))
            return Formula::block(vars, rename_rec(f.left(), from, to, inner), rename_rec(f.right(), from, to, inner));
        if (f.is(K::Exists)) return Formula::exists(vars[0], rename_rec(f.body(), from, to, inner));
        return Formula::forall(vars[0], rename_rec(f.body(), from, to, inner));
    }
    }
    return f;
}

Formula desugar_rec(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::Lt: {
        VarSet avoid = vars_of(f.lterm());
        for (auto& v : vars_of(f.rterm())) avoid.insert(v);
        std::string x = fresh_var("x", avoid);
        return Formula::exists(x, Formula::eq(Term::add(f.lterm(), Term::succ(Term::var(x))), f.rterm()));
    }
    case K::And: return Formula::conj(desugar_rec(f.left()), desugar_rec(f.right()));
    case K::Or: return Formula::disj(desugar_rec(f.left()), desugar_rec(f.right()));
    case K::Imp: return Formula::imp(desugar_rec(f.left()), desugar_rec(f.right()));
    case K::Neg: return Formula::neg(desugar_rec(f.body()));
    case K::Exists: return Formula::exists(f.var(), desugar_rec(f.body()));
    case K::Forall: return Formula::forall(f.var(), desugar_rec(f.body()));
    case K::Block: return Formula::block(f.vars(), desugar_rec(f.left()), desugar_rec(f.right()));
    default: return f;
    }
}

}  // namespace

VarSet vars_of(const Term& t) {
    VarSet out;
    collect_term_vars(t, out);
    return out;
}

VarSet free_vars(const Formula& f) {
    VarSet bound, out;
    collect_free(f, bound, out);
    return out;
}

VarSet free_vars(const Sequent& s) {
    VarSet out = free_vars(s.ante);
    for (auto& v : free_vars(s.cons)) out.insert(v);
    return out;
}

VarSet bound_vars(const Formula& f) {
    VarSet out;
    collect_bound(f, out);
    return out;
}

VarSet all_vars(const Formula& f) {
    VarSet out = free_vars(f);
    for (auto& v : bound_vars(f)) out.insert(v);
    return out;
}

bool occurs_free(const std::string& v, const Formula& f) { return free_vars(f).count(v) > 0; }

Term substitute(const Term& t, const Substitution& s) {
    switch (t.kind()) {
    case Term::Kind::Var:
        if (auto r = lookup(s, t.name())) return *r;
        return t;
    case Term::Kind::Zero: return t;
    case Term::Kind::Succ: return Term::succ(substitute(t.arg(), s));
    case Term::Kind::Add: return Term::add(substitute(t.lhs(), s), substitute(t.rhs(), s));
    case Term::Kind::Mul: return Term::mul(substitute(t.lhs(), s), substitute(t.rhs(), s));
    case Term::Kind::Monus: return Term::monus(substitute(t.lhs(), s), substitute(t.rhs(), s));
    }
    return t;
}

Formula substitute(const Formula& f, const Substitution& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i].first == s[j].first) throw std::invalid_argument("substitution domain repeats " + s[i].first);
    return subst_rec(f, s);
}

Formula substitute(const Formula& f, const std::string& x, const Term& t) {
    return subst_rec(f, Substitution{{x, t}});
}

Formula rename_bound(const Formula& f, const std::string& from, const std::string& to) {
    if (all_vars(f).count(to)) throw std::invalid_argument("rename target " + to + " already occurs");
    return rename_rec(f, from, to, false);
}

std::string fresh_var(const std::string& base, const VarSet& avoid) {
    std::string v = base.empty() ? std::string("v") : base;
    while (avoid.count(v)) v += '\'';
    return v;
}

Formula desugar_order(const Formula& f) { return desugar_rec(f); }

Formula to_classical(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::And: return Formula::conj(to_classical(f.left()), to_classical(f.right()));
    case K::Or: return Formula::disj(to_classical(f.left()), to_classical(f.right()));
    case K::Exists: return Formula::exists(f.var(), to_classical(f.body()));
    case K::Imp: return Formula::imp(to_classical(f.left()), to_classical(f.right()));
    case K::Neg: return Formula::neg(to_classical(f.body()));
    case K::Forall: return Formula::forall(f.var(), to_classical(f.body()));
    case K::Block: {
        Formula inner = f.left().is(K::Top) && !f.vars().empty()
                            ? to_classical(f.right())
                            : Formula::imp(to_classical(f.left()), to_classical(f.right()));
        for (auto it = f.vars().rbegin(); it != f.vars().rend(); ++it) inner = Formula::forall(*it, inner);
        return inner;
    }
    default: return f;
    }
}

}  // namespace bakit
