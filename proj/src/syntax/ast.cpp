#include "bakit/syntax.hpp"

#include <algorithm>

namespace bakit {

struct Term::Node {
    Kind kind;
    std::string name;
    Term l{nullptr};
    Term r{nullptr};
    bool monus = false;
    std::size_t size = 1;
};

Term Term::var(std::string name) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->name = std::move(name);
    return Term(n);
}

Term Term::zero() {
    static const Term z = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Zero;
        return Term(n);
    }();
    return z;
}

Term Term::succ(Term t) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Succ;
    n->monus = t.has_monus();
    n->size = t.size() + 1;
    n->l = std::move(t);
    return Term(n);
}

static Term binary_term(Term::Kind k, Term l, Term r);

Term Term::add(Term l, Term r) { return binary_term(Kind::Add, std::move(l), std::move(r)); }
Term Term::mul(Term l, Term r) { return binary_term(Kind::Mul, std::move(l), std::move(r)); }
Term Term::monus(Term l, Term r) { return binary_term(Kind::Monus, std::move(l), std::move(r)); }

Term::Kind Term::kind() const { return n_->kind; }
const std::string& Term::name() const { return n_->name; }
const Term& Term::arg() const { return n_->l; }
const Term& Term::lhs() const { return n_->l; }
const Term& Term::rhs() const { return n_->r; }
bool Term::has_monus() const { return n_->monus; }
std::size_t Term::size() const { return n_->size; }

struct TermAccess {
    static Term make(Term::Kind k, Term l, Term r) {
        auto n = std::make_shared<Term::Node>();
        n->kind = k;
        n->monus = k == Term::Kind::Monus || l.has_monus() || r.has_monus();
        n->size = l.size() + r.size() + 1;
        n->l = std::move(l);
        n->r = std::move(r);
        return Term(n);
    }
};

static Term binary_term(Term::Kind k, Term l, Term r) { return TermAccess::make(k, std::move(l), std::move(r)); }

std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (a.n_ == b.n_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    switch (a.kind()) {
    case Term::Kind::Var: return a.name() <=> b.name();
    case Term::Kind::Zero: return std::strong_ordering::equal;
    case Term::Kind::Succ: return a.arg() <=> b.arg();
    default:
        if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
        return a.rhs() <=> b.rhs();
    }
}

bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

struct Formula::Node {
    Kind kind;
    Term tl{Term::zero()};
    Term tr{Term::zero()};
    Formula a{nullptr};
    Formula b{nullptr};
    std::vector<std::string> vars;
    bool monus = false;
    std::size_t size = 1;
    std::size_t depth = 1;
};

struct FormulaAccess {
    static Formula make(std::shared_ptr<Formula::Node> n) { return Formula(std::move(n)); }
    static std::shared_ptr<Formula::Node> node(Formula::Kind k) {
        auto n = std::make_shared<Formula::Node>();
        n->kind = k;
        return n;
    }
};

namespace {

Formula make_leaf(Formula::Kind k) { return FormulaAccess::make(FormulaAccess::node(k)); }

Formula make_atom(Formula::Kind k, Term l, Term r) {
    auto n = FormulaAccess::node(k);
    n->monus = l.has_monus() || r.has_monus();
    n->tl = std::move(l);
    n->tr = std::move(r);
    return FormulaAccess::make(n);
}

Formula make_bin(Formula::Kind k, Formula a, Formula b, std::vector<std::string> vars = {}) {
    auto n = FormulaAccess::node(k);
    n->monus = a.has_monus() || b.has_monus();
    n->size = a.size() + b.size() + 1;
    n->depth = std::max(a.depth(), b.depth()) + 1;
    n->a = std::move(a);
    n->b = std::move(b);
    n->vars = std::move(vars);
    return FormulaAccess::make(n);
}

Formula make_un(Formula::Kind k, Formula a, std::vector<std::string> vars = {}) {
    auto n = FormulaAccess::node(k);
    n->monus = a.has_monus();
    n->size = a.size() + 1;
    n->depth = a.depth() + 1;
    n->a = std::move(a);
    n->vars = std::move(vars);
    return FormulaAccess::make(n);
}

}  // namespace

Formula Formula::top() {
    static const Formula t = make_leaf(Kind::Top);
    return t;
}
Formula Formula::bot() {
    static const Formula f = make_leaf(Kind::Bot);
    return f;
}
Formula Formula::eq(Term l, Term r) { return make_atom(Kind::Eq, std::move(l), std::move(r)); }
Formula Formula::lt(Term l, Term r) { return make_atom(Kind::Lt, std::move(l), std::move(r)); }
Formula Formula::conj(Formula a, Formula b) { return make_bin(Kind::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return make_bin(Kind::Or, std::move(a), std::move(b)); }
Formula Formula::exists(std::string v, Formula body) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    return make_un(Kind::Exists, std::move(body), {std::move(v)});
}
Formula Formula::block(std::vector<std::string> vars, Formula ante, Formula cons) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].empty()) throw std::invalid_argument("empty variable name");
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw std::invalid_argument("repeated block variable " + vars[i]);
    }
    return make_bin(Kind::Block, std::move(ante), std::move(cons), std::move(vars));
}
Formula Formula::neg(Formula a) { return make_un(Kind::Neg, std::move(a)); }
Formula Formula::imp(Formula a, Formula b) { return make_bin(Kind::Imp, std::move(a), std::move(b)); }
Formula Formula::forall(std::string v, Formula body) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    return make_un(Kind::Forall, std::move(body), {std::move(v)});
}

Formula::Kind Formula::kind() const { return n_->kind; }
const Term& Formula::lterm() const { return n_->tl; }
const Term& Formula::rterm() const { return n_->tr; }
const Formula& Formula::left() const { return n_->a; }
const Formula& Formula::right() const { return n_->b; }
const Formula& Formula::body() const { return n_->a; }
const std::string& Formula::var() const { return n_->vars.front(); }
const std::vector<std::string>& Formula::vars() const { return n_->vars; }
bool Formula::has_monus() const { return n_->monus; }
std::size_t Formula::size() const { return n_->size; }
std::size_t Formula::depth() const { return n_->depth; }

bool Formula::is_atomic() const {
    switch (kind()) {
    case Kind::Top:
    case Kind::Bot:
    case Kind::Eq:
    case Kind::Lt: return true;
    default: return false;
    }
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    if (a.n_ == b.n_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    using K = Formula::Kind;
    switch (a.kind()) {
    case K::Top:
    case K::Bot: return std::strong_ordering::equal;
    case K::Eq:
    case K::Lt:
        if (auto c = a.lterm() <=> b.lterm(); c != 0) return c;
        return a.rterm() <=> b.rterm();
    case K::And:
    case K::Or:
    case K::Imp:
        if (auto c = a.left() <=> b.left(); c != 0) return c;
        return a.right() <=> b.right();
    case K::Block:
        if (auto c = a.vars() <=> b.vars(); c != 0) return c;
        if (auto c = a.left() <=> b.left(); c != 0) return c;
        return a.right() <=> b.right();
    case K::Exists:
    case K::Forall:
        if (auto c = a.var() <=> b.var(); c != 0) return c;
        return a.body() <=> b.body();
    case K::Neg: return a.body() <=> b.body();
    }
    return std::strong_ordering::equal;
}

bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

Term numeral(std::uint64_t n) {
    Term t = Term::zero();
    for (std::uint64_t i = 0; i < n; ++i) t = Term::succ(t);
    return t;
}

bool numeral_value(const Term& t, std::uint64_t& n) {
    std::uint64_t k = 0;
    const Term* cur = &t;
    while (cur->kind() == Term::Kind::Succ) {
        ++k;
        cur = &cur->arg();
    }
    if (cur->kind() != Term::Kind::Zero) return false;
    n = k;
    return true;
}

ParseError::ParseError(const std::string& msg, std::size_t p)
    : std::runtime_error("parse error at " + std::to_string(p) + ": " + msg), pos(p) {}

CaptureViolation::CaptureViolation(std::string b, std::string v)
    : std::runtime_error("variable " + v + " would be captured by quantifier on " + b),
      binder(std::move(b)), variable(std::move(v)) {}

Formula le(const Term& s, const Term& t) { return Formula::disj(Formula::lt(s, t), Formula::eq(s, t)); }

Formula divides(const Term& s, const Term& t) {
    VarSet avoid = vars_of(s);
    for (auto& v : vars_of(t)) avoid.insert(v);
    std::string x = fresh_var("x", avoid);
    return Formula::exists(x, Formula::eq(Term::mul(s, Term::var(x)), t));
}

}  // namespace bakit
