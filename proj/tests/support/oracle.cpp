#include "support/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace bakit::oracle {

using K = Formula::Kind;
using TK = Term::Kind;

V term(const Term& t, const Env& env) {
    switch (t.kind()) {
    case TK::Var: return env.at(t.name());
    case TK::Zero: return {};
    case TK::Succ: {
        V a = term(t.arg(), env);
        return a.inf ? a : V{false, a.n + 1};
    }
    default: break;
    }
    V a = term(t.lhs(), env), b = term(t.rhs(), env);
    switch (t.kind()) {
    case TK::Add: return (a.inf || b.inf) ? V{true, 0} : V{false, a.n + b.n};
    case TK::Mul:
        if ((!a.inf && a.n == 0) || (!b.inf && b.n == 0)) return {};
        return (a.inf || b.inf) ? V{true, 0} : V{false, a.n * b.n};
    default:
        if (a.inf || b.inf) throw std::runtime_error("monus at inf");
        return {false, a.n >= b.n ? a.n - b.n : 0};
    }
}

namespace {

bool less(V a, V b) {
    if (b.inf) return true;
    if (a.inf) return false;
    return a.n < b.n;
}

bool atom(const Formula& f, const Env& env) {
    switch (f.kind()) {
    case K::Top: return true;
    case K::Bot: return false;
    case K::Eq: return term(f.lterm(), env) == term(f.rterm(), env);
    default: return less(term(f.lterm(), env), term(f.rterm(), env));
    }
}

// x<s guard with x not in s
bool guard(const Formula& g, const std::string& x, Term& s) {
    if (!g.is(K::Lt) || !g.lterm().is_var() || g.lterm().name() != x) return false;
    if (vars_of(g.rterm()).count(x)) return false;
    s = g.rterm();
    return true;
}

std::uint64_t ceiling(const Term& t, const Env& env, std::uint64_t cap) {
    switch (t.kind()) {
    case TK::Var: {
        auto it = env.find(t.name());
        return it == env.end() ? cap : it->second.n;
    }
    case TK::Zero: return 0;
    case TK::Succ: return ceiling(t.arg(), env, cap) + 1;
    case TK::Add: return ceiling(t.lhs(), env, cap) + ceiling(t.rhs(), env, cap);
    case TK::Mul: return ceiling(t.lhs(), env, cap) * ceiling(t.rhs(), env, cap);
    default: return ceiling(t.lhs(), env, cap);
    }
}

}  // namespace

bool truth(const Formula& f, Env env, std::uint64_t limit) {
    switch (f.kind()) {
    case K::And: return truth(f.left(), env, limit) && truth(f.right(), env, limit);
    case K::Or: return truth(f.left(), env, limit) || truth(f.right(), env, limit);
    case K::Exists: {
        Term s = Term::zero();
        std::uint64_t top = limit;
        bool bounded = f.body().is(K::And) && guard(f.body().left(), f.var(), s);
        if (bounded) {
            V v = term(s, env);
            if (v.n == 0 && !v.inf) return false;
            if (!v.inf) top = v.n - 1;
        }
        for (std::uint64_t c = 0; c <= top; ++c) {
            env[f.var()] = {false, c};
            if (truth(f.body(), env, limit)) return true;
        }
        return false;
    }
    case K::Block: {
        const auto& xs = f.vars();
        Term s = Term::zero();
        std::uint64_t top = limit;
        if (xs.size() == 1 && guard(f.left(), xs[0], s)) {
            V v = term(s, env);
            if (v.n == 0 && !v.inf) return true;
            if (!v.inf) top = v.n - 1;
        }
        std::vector<std::uint64_t> idx(xs.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < xs.size(); ++i) env[xs[i]] = {false, idx[i]};
            if (truth(f.left(), env, limit) && !truth(f.right(), env, limit)) return false;
            std::size_t i = 0;
            while (i < xs.size() && idx[i] == top) idx[i++] = 0;
            if (i == xs.size()) return true;
            ++idx[i];
        }
    }
    case K::Imp: return !truth(f.left(), env, limit) || truth(f.right(), env, limit);
    case K::Neg: return !truth(f.body(), env, limit);
    case K::Forall: {
        for (std::uint64_t c = 0; c <= limit; ++c) {
            env[f.var()] = {false, c};
            if (!truth(f.body(), env, limit)) return false;
        }
        return true;
    }
    default: return atom(f, env);
    }
}

std::uint64_t term_ceiling(const Formula& f, const Env& env, std::uint64_t cap) {
    switch (f.kind()) {
    case K::Eq:
    case K::Lt: return std::max(ceiling(f.lterm(), env, cap), ceiling(f.rterm(), env, cap));
    case K::And:
    case K::Or:
    case K::Block:
    case K::Imp: return std::max(term_ceiling(f.left(), env, cap), term_ceiling(f.right(), env, cap));
    case K::Exists:
    case K::Forall:
    case K::Neg: return term_ceiling(f.body(), env, cap);
    default: return 0;
    }
}

bool forces(const std::vector<Node>& frame, int k, const Formula& f, Env env) {
    switch (f.kind()) {
    case K::And: return forces(frame, k, f.left(), env) && forces(frame, k, f.right(), env);
    case K::Or: return forces(frame, k, f.left(), env) || forces(frame, k, f.right(), env);
    case K::Exists: {
        Term s = Term::zero();
        if (!(f.body().is(K::And) && guard(f.body().left(), f.var(), s)))
            throw std::runtime_error("unguarded quantifier");
        V v = term(s, env);
        if (v.inf) throw std::runtime_error("inf bound");
        for (std::uint64_t c = 0; c < v.n; ++c) {
            env[f.var()] = {false, c};
            if (forces(frame, k, f.body(), env)) return true;
        }
        return false;
    }
    case K::Block: {
        std::vector<int> later = frame[k].above;
        if (frame[k].reflexive) later.push_back(k);
        const auto& xs = f.vars();
        Term s = Term::zero();
        if (xs.size() > 1 || (xs.size() == 1 && !guard(f.left(), xs[0], s)))
            throw std::runtime_error("unguarded block");
        for (int k2 : later) {
            if (xs.empty()) {
                if (forces(frame, k2, f.left(), env) && !forces(frame, k2, f.right(), env)) return false;
                continue;
            }
            V v = term(s, env);
            if (v.inf) throw std::runtime_error("inf bound");
            for (std::uint64_t c = 0; c < v.n; ++c) {
                env[xs[0]] = {false, c};
                if (forces(frame, k2, f.left(), env) && !forces(frame, k2, f.right(), env)) return false;
            }
        }
        return true;
    }
    default: return atom(f, env);
    }
}

}  // namespace bakit::oracle
