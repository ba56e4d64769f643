#include <optional>

#include "bakit/proofs_lk.hpp"

namespace bakit {

using namespace tac;
using K = Formula::Kind;

namespace {

using FL = std::vector<Formula>;

const Formula& ante(const BaProof& p) { return p.conclusion.ante; }
const Formula& cons(const BaProof& p) { return p.conclusion.cons; }

// T & A1 & ... & An and A1 | (... | (An | F))
Formula cj(const FL& l) {
    Formula out = Formula::top();
    for (auto& f : l) out = Formula::conj(out, f);
    return out;
}

Formula dj(const FL& l) {
    Formula out = Formula::bot();
    for (auto it = l.rbegin(); it != l.rend(); ++it) out = Formula::disj(*it, out);
    return out;
}

FL slice(const FL& l, std::size_t from, std::size_t to) { return FL(l.begin() + from, l.begin() + to); }

FL cat(FL a, const FL& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::optional<BaProof> pick(const Formula& x, const Formula& y) {
    if (x == y) return ax1(x);
    if (!x.is(K::And)) return std::nullopt;
    if (auto r = pick(x.left(), y)) return cut(proj1(x.left(), x.right()), *r);
    if (auto r = pick(x.right(), y)) return cut(proj2(x.left(), x.right()), *r);
    return std::nullopt;
}

// X => Y from the conjuncts of X
BaProof conj_to(const Formula& x, const Formula& y) {
    if (y.is(K::Top)) return ax2(x);
    if (auto r = pick(x, y)) return *r;
    if (y.is(K::And)) return pair(conj_to(x, y.left()), conj_to(x, y.right()));
    throw RuleError("bridge: " + to_string(y) + " is not available in " + to_string(x));
}

std::optional<BaProof> inject(const Formula& y, const Formula& x) {
    if (x == y) return ax1(x);
    if (!x.is(K::Or)) return std::nullopt;
    if (auto r = inject(y, x.left())) return cut(*r, inj1(x.left(), x.right()));
    if (auto r = inject(y, x.right())) return cut(*r, inj2(x.left(), x.right()));
    return std::nullopt;
}

// Y => X into the disjuncts of X
BaProof disj_from(const Formula& y, const Formula& x) {
    if (y.is(K::Bot)) return ax3(x);
    if (auto r = inject(y, x)) return *r;
    if (y.is(K::Or)) return cases(disj_from(y.left(), x), disj_from(y.right(), x));
    throw RuleError("bridge: " + to_string(y) + " is not available in " + to_string(x));
}

BaProof restructure(const BaProof& p, const Formula& a, const Formula& c) {
    return cut(cut(conj_to(a, ante(p)), p), disj_from(cons(p), c));
}

BaProof ba_axiom(const std::string& rule, const std::vector<Term>& ts) {
    static const char* names[] = {"x", "y"};
    Bindings b;
    std::vector<std::string> xs;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        b[names[i]] = std::string(names[i]);
        xs.push_back(names[i]);
    }
    return inst(make_node(rule, b, {}), xs, ts);
}

// from X => s = t and X => A[w/s] get X => A[w/t]
BaProof rw(const BaProof& eq, const BaProof& fact, const Formula& atom, const std::string& w) {
    return cut(pair(eq, fact), eq_subst(cons(eq).lterm(), cons(eq).rterm(), atom, w));
}

BaProof lift(const BaProof& p, const Formula& x) { return cut(ax2(x), p); }

// B[x/t] => E x. B
BaProof exists_intro(const Formula& ex, const Term& t) {
    BaProof w = make_node("BQC-R18rev", {{"B", ex.body()}, {"A", ex}, {"x", ex.var()}}, {ax1(ex)});
    if (t == Term::var(ex.var())) return w;
    return inst(w, ex.var(), t);
}

BaProof axiom_case(const LkProof& p, const Formula& x, const Formula& d) {
    const std::string& r = p.rule;
    auto T = [&](const char* k) { return std::get<Term>(p.bind.at(k)); };
    auto fact = [&](const Formula& f) { return *pick(x, f); };
    auto out = [&](const BaProof& q) { return cut(q, disj_from(cons(q), d)); };
    VarSet avoid;
    for (auto& [k, m] : p.bind)
        if (auto t = std::get_if<Term>(&m)) avoid.merge(vars_of(*t));
    std::string w = fresh_var("w", avoid);
    Term W = Term::var(w);
    if (r == "=-ref") return out(lift(eq_refl(T("s")), x));
    if (r == "=-eqv") {
        Term s = T("s"), t = T("t"), s2 = T("s'"), t2 = T("t'");
        BaProof ts2 = rw(fact(Formula::eq(s, t)), fact(Formula::eq(s, s2)), Formula::eq(W, s2), w);
        return out(cut(pair(ts2, fact(Formula::eq(s2, t2))), eq_trans(t, s2, t2)));
    }
    if (r == "S-fnc") {
        Term s = T("s"), t = T("t");
        BaProof refl = lift(eq_refl(Term::succ(s)), x);
        return out(rw(fact(Formula::eq(s, t)), refl, Formula::eq(Term::succ(s), Term::succ(W)), w));
    }
    if (r == "+-fnc" || r == "·-fnc" || r == "<-rel") {
        Term s = T("s"), t = T("t"), s2 = T("s'"), t2 = T("t'");
        auto op = [&](const Term& a, const Term& b) {
            if (r == "+-fnc") return Formula::eq(Term::add(s, s2), Term::add(a, b));
            if (r == "·-fnc") return Formula::eq(Term::mul(s, s2), Term::mul(a, b));
            return Formula::lt(a, b);
        };
        BaProof base = r == "<-rel" ? fact(Formula::lt(s, s2)) : lift(eq_refl(r == "+-fnc" ? Term::add(s, s2) : Term::mul(s, s2)), x);
        BaProof one = rw(fact(Formula::eq(s, t)), base, op(W, s2), w);
        return out(rw(fact(Formula::eq(s2, t2)), one, op(t, W), w));
    }
    if (r == "S-pos") return out(cut(fact(cj(p.conclusion.ante).right()), ba_axiom("BA-Ax1", {T("s")})));
    if (r == "S-inj") return out(cut(fact(cj(p.conclusion.ante).right()), ba_axiom("BA-Ax2", {T("s"), T("t")})));
    if (r == "+-0") return out(lift(ba_axiom("BA-Ax3", {T("s")}), x));
    if (r == "+-S") return out(lift(ba_axiom("BA-Ax4", {T("s"), T("t")}), x));
    if (r == "·-0") return out(lift(ba_axiom("BA-Ax5", {T("s")}), x));
    if (r == "·-S") return out(lift(ba_axiom("BA-Ax6", {T("s"), T("t")}), x));
    throw std::invalid_argument("lk_pos_to_ba: unsupported rule " + r);
}

BaProof translate(const LkProof& p) {
    const LkSequent& s = p.conclusion;
    for (auto& f : cat(s.ante, s.cons))
        if (!is_positive(f)) throw std::invalid_argument("lk_pos_to_ba: " + to_string(f) + " is not positive");
    Formula X = cj(s.ante), D = dj(s.cons);
    const std::string& r = p.rule;
    std::vector<BaProof> q;
    for (auto& pr : p.premises) q.push_back(translate(pr));
    auto F = [&](const char* k) { return std::get<Formula>(p.bind.at(k)); };

    if (r == "Ax" || r == "⇒⊤") return cut(*pick(X, s.cons.front()), disj_from(s.cons.front(), D));
    if (r == "⊥⇒") return cut(*pick(X, Formula::bot()), ax3(D));
    if (r == "Ex⇒" || r == "⇒Ex" || r == "W⇒" || r == "⇒W" || r == "C⇒" || r == "⇒C" || r == "∧⇒L" ||
        r == "∧⇒R" || r == "⇒∨L" || r == "⇒∨R")
        return restructure(q[0], X, D);

    if (r == "Cut") {
        const LkSequent& l = p.premises[0].conclusion;
        const LkSequent& rr = p.premises[1].conclusion;
        Formula g = cj(l.ante), d1 = dj(slice(l.cons, 1, l.cons.size()));
        Formula g2 = cj(slice(rr.ante, 0, rr.ante.size() - 1));
        Formula a = F("A");
        BaProof split = cut(conj_to(X, g), q[0]);
        BaProof c1 = cut(cut(conj_to(Formula::conj(X, a), Formula::conj(g2, a)), q[1]), disj_from(cons(q[1]), D));
        BaProof c2 = cut(proj2(X, d1), disj_from(d1, D));
        return by_cases(split, c1, c2);
    }
    if (r == "⇒∧") {
        const LkSequent& l = p.premises[0].conclusion;
        const LkSequent& rr = p.premises[1].conclusion;
        Formula a = l.cons.front(), b = rr.cons.front();
        Formula d1 = dj(slice(l.cons, 1, l.cons.size())), d2 = dj(slice(rr.cons, 1, rr.cons.size()));
        Formula xa = Formula::conj(X, a);
        BaProof inner = by_cases(cut(conj_to(xa, cj(rr.ante)), q[1]),
                                 cut(conj_to(Formula::conj(xa, b), Formula::conj(a, b)), disj_from(Formula::conj(a, b), D)),
                                 cut(proj2(xa, d2), disj_from(d2, D)));
        return by_cases(cut(conj_to(X, cj(l.ante)), q[0]), inner, cut(proj2(X, d1), disj_from(d1, D)));
    }
    if (r == "∨⇒") {
        const LkSequent& l = p.premises[0].conclusion;
        const LkSequent& rr = p.premises[1].conclusion;
        Formula a = l.ante.back(), b = rr.ante.back();
        Formula ab = s.ante.back();
        auto branch = [&](const Formula& f, const BaProof& pr) {
            return cut(cut(conj_to(Formula::conj(X, f), ante(pr)), pr), disj_from(cons(pr), D));
        };
        return by_cases(*pick(X, ab), branch(a, q[0]), branch(b, q[1]));
    }
    if (r == "⇒∃") {
        Formula ex = F("A");
        Formula inst_f = p.premises[0].conclusion.cons.front();
        Formula rest = cons(q[0]).right();
        BaProof intro = cut(exists_intro(ex, std::get<Term>(p.bind.at("t"))), disj_from(ex, D));
        return cut(q[0], cases(intro, disj_from(rest, D)));
    }
    if (r == "∃⇒") {
        Formula ex = F("A");
        std::string y = std::get<std::string>(p.bind.at("y"));
        Formula c = substitute(ex.body(), ex.var(), Term::var(y));
        Formula ey = Formula::exists(y, c);
        BaProof alpha = ax1(ex);
        if (y != ex.var()) {
            BaProof w = make_node("BQC-R18rev", {{"B", c}, {"A", ey}, {"x", y}}, {ax1(ey)});
            w = inst(w, y, Term::var(ex.var()));
            alpha = make_node("BQC-R18", {{"B", ante(w)}, {"A", ey}, {"x", ex.var()}}, {w});
        }
        Formula g = cj(slice(s.ante, 0, s.ante.size() - 1));
        BaProof to_ey = pair(proj1(g, ex), cut(proj2(g, ex), alpha));
        BaProof ax5 = make_node("BQC-Ax5", {{"A", g}, {"B", c}, {"x", y}}, {});
        BaProof body = cut(cut(conj_to(Formula::conj(g, c), ante(q[0])), q[0]), disj_from(cons(q[0]), D));
        BaProof elim = make_node("BQC-R18", {{"B", Formula::conj(g, c)}, {"A", D}, {"x", y}}, {body});
        return cut(cut(to_ey, ax5), elim);
    }
    if (r == "ind") {
        Formula a = F("A");
        std::string x = std::get<std::string>(p.bind.at("x"));
        Term t = std::get<Term>(p.bind.at("t"));
        const LkSequent& pr = p.premises[0].conclusion;
        Formula g = cj(slice(pr.ante, 0, pr.ante.size() - 1));
        Formula d = dj(slice(pr.cons, 1, pr.cons.size()));
        Formula aS = substitute(a, x, Term::succ(Term::var(x)));
        Formula c = Formula::conj(g, Formula::disj(a, d));
        Formula cS = Formula::conj(g, Formula::disj(aS, d));
        BaProof step2 = by_cases(proj2(g, Formula::disj(a, d)),
                                 cut(cut(conj_to(Formula::conj(c, a), ante(q[0])), q[0]), disj_from(cons(q[0]), cS.right())),
                                 cut(proj2(c, d), inj2(aS, d)));
        BaProof step = pair(proj1(g, Formula::disj(a, d)), step2);
        BaProof ind = make_node("BA-IndRule", {{"A", c}, {"x", x}}, {step});
        if (!(t == Term::var(x))) ind = inst(ind, x, t);
        Formula a0 = substitute(a, x, Term::zero());
        BaProof into = pair(conj_to(X, g), cut(*pick(X, a0), inj1(a0, d)));
        return cut(cut(into, ind), proj2(g, cons(ind).right()));
    }
    return axiom_case(p, X, D);
}

}  // namespace

LkSequent ba_to_lk(const Sequent& s) {
    LkSequent out;
    if (!s.ante.is(K::Top)) out.ante.push_back(to_classical(s.ante));
    if (!s.cons.is(K::Bot)) out.cons.push_back(to_classical(s.cons));
    return out;
}

Sequent lk_to_ba_sequent(const LkSequent& s) {
    std::optional<Formula> a, c;
    for (auto& f : s.ante) a = a ? Formula::conj(*a, f) : f;
    for (auto& f : s.cons) c = c ? Formula::disj(*c, f) : f;
    return {a.value_or(Formula::top()), c.value_or(Formula::bot())};
}

BaProof lk_pos_to_ba(const LkProof& p) {
    static const std::set<std::string> banned = {"¬⇒", "⇒¬", "→⇒", "⇒→", "∀⇒", "⇒∀"};
    for (auto& r : lk_rules_used(p))
        if (banned.count(r)) throw std::invalid_argument("lk_pos_to_ba: rule " + r + " is not positive");
    BaProof q = translate(p);
    Sequent target = lk_to_ba_sequent(p.conclusion);
    return restructure(q, target.ante, target.cons);
}

}  // namespace bakit
