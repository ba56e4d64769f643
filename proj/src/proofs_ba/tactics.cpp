#include "bakit/proofs_ba.hpp"

namespace bakit::tac {

namespace {

const Formula& ante(const BaProof& p) { return p.conclusion.ante; }
const Formula& cons(const BaProof& p) { return p.conclusion.cons; }

VarSet avoid_of(std::initializer_list<Term> ts, const Formula& f) {
    VarSet a = all_vars(f);
    for (auto& t : ts)
        for (auto& v : vars_of(t)) a.insert(v);
    return a;
}

std::string take(const std::string& base, VarSet& avoid) {
    std::string v = fresh_var(base, avoid);
    avoid.insert(v);
    return v;
}

}  // namespace

BaProof ax1(const Formula& a) { return make_node("BQC-Ax1", {{"A", a}}, {}); }
BaProof ax2(const Formula& a) { return make_node("BQC-Ax2", {{"A", a}}, {}); }
BaProof ax3(const Formula& a) { return make_node("BQC-Ax3", {{"A", a}}, {}); }

BaProof cut(const BaProof& ab, const BaProof& bc) {
    return make_node("BQC-R14", {{"A", ante(ab)}, {"B", cons(ab)}, {"C", cons(bc)}}, {ab, bc});
}

BaProof pair(const BaProof& ab, const BaProof& ac) {
    return make_node("BQC-R15", {{"A", ante(ab)}, {"B", cons(ab)}, {"C", cons(ac)}}, {ab, ac});
}

BaProof left(const BaProof& abc) {
    const Formula& c = cons(abc);
    if (!c.is(Formula::Kind::And)) throw RuleError("left: consequent is not a conjunction");
    return make_node("BQC-R15rev",
                     {{"A", ante(abc)}, {"B", c.left()}, {"C", c.right()}, {"i", std::string("1")}}, {abc});
}

BaProof right(const BaProof& abc) {
    const Formula& c = cons(abc);
    if (!c.is(Formula::Kind::And)) throw RuleError("right: consequent is not a conjunction");
    return make_node("BQC-R15rev",
                     {{"A", ante(abc)}, {"B", c.left()}, {"C", c.right()}, {"i", std::string("2")}}, {abc});
}

BaProof cases(const BaProof& ba, const BaProof& ca) {
    return make_node("BQC-R16", {{"A", cons(ba)}, {"B", ante(ba)}, {"C", ante(ca)}}, {ba, ca});
}

BaProof inst(const BaProof& p, const std::vector<std::string>& xs, const std::vector<Term>& ts) {
    return make_node("BQC-R17", {{"A", ante(p)}, {"B", cons(p)}, {"xs", xs}, {"ts", ts}}, {p});
}

BaProof inst(const BaProof& p, const std::string& x, const Term& t) {
    return inst(p, std::vector<std::string>{x}, std::vector<Term>{t});
}

BaProof proj1(const Formula& a, const Formula& b) { return left(ax1(Formula::conj(a, b))); }
BaProof proj2(const Formula& a, const Formula& b) { return right(ax1(Formula::conj(a, b))); }

BaProof inj1(const Formula& b, const Formula& c) {
    Formula d = Formula::disj(b, c);
    return make_node("BQC-R16rev", {{"A", d}, {"B", b}, {"C", c}, {"i", std::string("1")}}, {ax1(d)});
}

BaProof inj2(const Formula& b, const Formula& c) {
    Formula d = Formula::disj(b, c);
    return make_node("BQC-R16rev", {{"A", d}, {"B", b}, {"C", c}, {"i", std::string("2")}}, {ax1(d)});
}

BaProof eq_refl(const Term& s) {
    return inst(make_node("BQC-Ax6", {{"x", std::string("x")}}, {}), "x", s);
}

BaProof eq_subst(const Term& s, const Term& t, const Formula& atom, const std::string& x) {
    VarSet avoid = avoid_of({s, t}, atom);
    avoid.insert(x);
    std::string a = take("a", avoid), b = take("b", avoid);
    Formula pa = substitute(atom, x, Term::var(a));
    BaProof ax = make_node("BQC-Ax7", {{"x", a}, {"y", b}, {"A", pa}}, {});
    return inst(ax, {a, b}, {s, t});
}

BaProof eq_sym(const Term& s, const Term& t) {
    Formula st = Formula::eq(s, t);
    VarSet avoid = avoid_of({s, t}, Formula::top());
    std::string x = take("x", avoid);
    BaProof sub = eq_subst(s, t, Formula::eq(Term::var(x), s), x);  // s=t & s=s => t=s
    BaProof prep = pair(ax1(st), cut(ax2(st), eq_refl(s)));
    return cut(prep, sub);
}

BaProof eq_trans(const Term& r, const Term& s, const Term& t) {
    Formula rs = Formula::eq(r, s), st = Formula::eq(s, t);
    VarSet avoid = avoid_of({r, s, t}, Formula::top());
    std::string x = take("x", avoid);
    BaProof sub = eq_subst(s, t, Formula::eq(r, Term::var(x)), x);  // s=t & r=s => r=t
    BaProof swap = pair(proj2(rs, st), proj1(rs, st));
    return cut(swap, sub);
}

BaProof by_cases(const BaProof& split, const BaProof& c1, const BaProof& c2) {
    const Formula& g = ante(split);
    const Formula& d = cons(split);
    if (!d.is(Formula::Kind::Or)) throw RuleError("by_cases: split is not a disjunction");
    BaProof both = pair(ax1(g), split);
    BaProof dist = make_node("BQC-Ax4", {{"A", g}, {"B", d.left()}, {"C", d.right()}}, {});
    return cut(cut(both, dist), cases(c1, c2));
}

BaProof weaken_left(const BaProof& ab, const Formula& x) { return cut(proj1(ante(ab), x), ab); }
BaProof weaken_right(const BaProof& ab, const Formula& x) { return cut(proj2(x, ante(ab)), ab); }

BaProof chain(const BaProof& ta, const BaProof& ab) { return cut(ta, ab); }

}  // namespace bakit::tac
