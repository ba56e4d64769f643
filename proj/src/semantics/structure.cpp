#include "bakit/semantics.hpp"

namespace bakit {

using TK = Term::Kind;

std::string to_string(const ElementId& e) { return e.inf ? "inf" : std::to_string(e.n); }

std::string to_string(StructureSpec::Kind k) {
    switch (k) {
    case StructureSpec::Kind::StdN: return "StdN";
    case StructureSpec::Kind::NStar: return "NStar";
    default: return "FiniteTable";
    }
}

std::string to_string(const Truth3& t) {
    switch (t.value) {
    case Truth::True: return "True";
    case Truth::False: return "False";
    default: return "Unknown(" + std::to_string(t.bound) + ")";
    }
}

bool StructureSpec::contains(const ElementId& e) const {
    switch (kind) {
    case Kind::StdN: return !e.inf;
    case Kind::NStar: return true;
    default:
        for (auto& c : table.carrier)
            if (c == e) return true;
        return false;
    }
}

namespace {

const ElementId kInf = ElementId::infinity();

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw EvalError("arithmetic overflow");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw EvalError("arithmetic overflow");
    return r;
}

template <class Map, class Key>
ElementId lookup(const Map& m, const Key& k, const char* op) {
    auto it = m.find(k);
    if (it == m.end()) throw EvalError(std::string("table has no entry for ") + op);
    return it->second;
}

}  // namespace

ElementId eval_term(const StructureSpec& s, const Term& t, const Assignment& asg) {
    switch (t.kind()) {
    case TK::Var: {
        auto it = asg.find(t.name());
        if (it == asg.end()) throw EvalError("unassigned variable " + t.name());
        return it->second;
    }
    case TK::Zero: return ElementId::nat(0);
    case TK::Succ: {
        ElementId a = eval_term(s, t.arg(), asg);
        if (s.kind == StructureSpec::Kind::Finite) return lookup(s.table.succ, a, "S");
        if (a.inf) return kInf;
        return ElementId::nat(checked_add(a.n, 1));
    }
    case TK::Add:
    case TK::Mul:
    case TK::Monus: {
        ElementId a = eval_term(s, t.lhs(), asg);
        ElementId b = eval_term(s, t.rhs(), asg);
        if (t.kind() == TK::Monus && !s.monus_enabled) throw EvalError("cut-off subtraction is disabled");
        if (s.kind == StructureSpec::Kind::Finite) {
            auto key = std::make_pair(a, b);
            if (t.kind() == TK::Add) return lookup(s.table.add, key, "+");
            if (t.kind() == TK::Mul) return lookup(s.table.mul, key, "*");
            return lookup(s.table.monus, key, "-.");
        }
        if (t.kind() == TK::Add) {
            if (a.inf || b.inf) return kInf;
            return ElementId::nat(checked_add(a.n, b.n));
        }
        if (t.kind() == TK::Mul) {
            if ((!a.inf && a.n == 0) || (!b.inf && b.n == 0)) return ElementId::nat(0);
            if (a.inf || b.inf) return kInf;
            return ElementId::nat(checked_mul(a.n, b.n));
        }
        if (a.inf || b.inf) throw EvalError("cut-off subtraction is undefined at inf");
        return ElementId::nat(a.n > b.n ? a.n - b.n : 0);
    }
    }
    throw EvalError("bad term");
}

bool eval_atom(const StructureSpec& s, const Formula& f, const Assignment& asg) {
    switch (f.kind()) {
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Eq: return eval_term(s, f.lterm(), asg) == eval_term(s, f.rterm(), asg);
    case Formula::Kind::Lt: {
        ElementId a = eval_term(s, f.lterm(), asg);
        ElementId b = eval_term(s, f.rterm(), asg);
        if (s.kind == StructureSpec::Kind::Finite) return s.table.lt.count({a, b}) > 0;
        if (b.inf) return true;
        if (a.inf) return false;
        return a.n < b.n;
    }
    default: throw EvalError("not an atom: " + to_string(f));
    }
}

}  // namespace bakit
