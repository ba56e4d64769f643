#include "ba_lemmas.hpp"

#include <functional>

namespace bakit::lemmas {

using namespace tac;

namespace {

Formula P(const std::string& s) { return parse_formula(s, Language::Lc); }
Term T(const std::string& s) { return parse_term(s, Language::Lc); }
Term V(const std::string& s) { return Term::var(s); }
Formula top() { return Formula::top(); }

const Formula& ante(const BaProof& p) { return p.conclusion.ante; }
const Formula& cons(const BaProof& p) { return p.conclusion.cons; }

BaProof node(const std::string& rule, Bindings b, std::vector<BaProof> prem = {}) {
    return make_node(rule, std::move(b), std::move(prem));
}

// BA axiom over the schematic variables x, y instantiated to ts
BaProof axiom(const std::string& rule, const std::vector<Term>& ts) {
    static const char* names[] = {"x", "y", "z"};
    Bindings b;
    std::vector<std::string> xs;
    bool same = true;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        b[names[i]] = std::string(names[i]);
        xs.push_back(names[i]);
        same = same && ts[i] == V(names[i]);
    }
    BaProof p = node(rule, b);
    return same ? p : inst(p, xs, ts);
}

BaProof lt_def(const Term& a, const Term& b, const std::string& z, bool rev) {
    BaProof p = node(rev ? "BA-LtDefRev" : "BA-LtDef", {{"x", std::string("x")}, {"y", std::string("y")}, {"z", z}});
    return inst(p, {"x", "y"}, {a, b});
}

BaProof lift(const BaProof& p, const Formula& g) {
    if (ante(p) == g) return p;
    if (!ante(p).is(Formula::Kind::Top)) throw RuleError("lift: antecedent is not T");
    return cut(ax2(g), p);
}

BaProof sym(const BaProof& p) { return cut(p, eq_sym(cons(p).lterm(), cons(p).rterm())); }

BaProof trans(const BaProof& p, const BaProof& q) {
    return cut(pair(p, q), eq_trans(cons(p).lterm(), cons(p).rterm(), cons(q).rterm()));
}

BaProof chain_eq(std::initializer_list<BaProof> ps) {
    auto it = ps.begin();
    BaProof acc = *it;
    for (++it; it != ps.end(); ++it) acc = trans(acc, *it);
    return acc;
}

// from G => s = t and G => A(s) get G => A(t)
BaProof rw(const BaProof& eq, const BaProof& fact, const Formula& atom, const std::string& w) {
    return cut(pair(eq, fact), eq_subst(cons(eq).lterm(), cons(eq).rterm(), atom, w));
}

// from G => s = t get G => C(s) = C(t)
BaProof cong(const BaProof& eq, const std::function<Term(const Term&)>& c) {
    const Term& s = cons(eq).lterm();
    VarSet avoid = all_vars(cons(eq));
    std::string w = fresh_var("h", avoid);
    Term cs = c(s);
    BaProof refl = lift(eq_refl(cs), ante(eq));
    return rw(eq, refl, Formula::eq(cs, c(V(w))), w);
}

BaProof congS(const BaProof& eq) {
    return cong(eq, [](const Term& t) { return Term::succ(t); });
}

BaProof r18(const BaProof& p, const std::string& x) {
    return node("BQC-R18", {{"B", ante(p)}, {"A", cons(p)}, {"x", x}}, {p});
}

// B => E x. B
BaProof witness(const Formula& ex) {
    return node("BQC-R18rev", {{"B", ex.body()}, {"A", ex}, {"x", ex.var()}}, {ax1(ex)});
}

// from A & B => C get A => ![xs](B -> C)
BaProof intro(const BaProof& p, const std::vector<std::string>& xs = {}) {
    const Formula& a = ante(p);
    return node("BQC-R19", {{"A", a.left()}, {"B", a.right()}, {"C", cons(p)}, {"xs", xs}}, {p});
}

BaProof compose(const BaProof& p, const BaProof& q) {
    const Formula& pc = cons(p);
    const Formula& qc = cons(q);
    return cut(pair(p, q), node("BQC-Ax8", {{"xs", std::vector<std::string>{}},
                                            {"A", pc.left()}, {"B", pc.right()}, {"C", qc.right()}}));
}

// G => (B -> A) and G => (C -> A) give G => (B | C -> A)
BaProof join(const BaProof& p, const BaProof& q) {
    return cut(pair(p, q), node("BQC-Ax10", {{"xs", std::vector<std::string>{}},
                                             {"A", cons(p).right()}, {"B", cons(p).left()}, {"C", cons(q).left()}}));
}

BaProof induction(const Formula& a, const std::string& x, const BaProof& base, const BaProof& step) {
    return cut(base, node("BA-IndRule", {{"A", a}, {"x", x}}, {step}));
}

BaProof swap(const Formula& a, const Formula& b) { return pair(proj2(a, b), proj1(a, b)); }

// T & X => C from X => C
BaProof under_top(const BaProof& p) { return cut(proj2(top(), ante(p)), p); }

Term add(const Term& a, const Term& b) { return Term::add(a, b); }
Term S(const Term& a) { return Term::succ(a); }

// T => 0 + u = u
BaProof zero_add() {
    Formula a = P("0 + u = u");
    BaProof base = axiom("BA-Ax3", {T("0")});
    BaProof e1 = lift(axiom("BA-Ax4", {T("0"), V("u")}), a);
    BaProof step = trans(e1, congS(ax1(a)));
    return induction(a, "u", base, step);
}

// T => Sy + u = S(y + u)
BaProof succ_add() {
    Formula a = P("Sy + u = S(y + u)");
    BaProof base = trans(axiom("BA-Ax3", {T("Sy")}), sym(congS(axiom("BA-Ax3", {V("y")}))));
    BaProof e1 = lift(axiom("BA-Ax4", {T("Sy"), V("u")}), a);
    BaProof e2 = congS(ax1(a));
    BaProof e3 = sym(congS(lift(axiom("BA-Ax4", {V("y"), V("u")}), a)));
    return induction(a, "u", base, chain_eq({e1, e2, e3}));
}

// T => (a + b) + c = a + (b + c)
BaProof add_assoc() {
    Formula a = P("(a + b) + c = a + (b + c)");
    auto plus_a = [](const Term& t) { return add(V("a"), t); };
    BaProof base = trans(axiom("BA-Ax3", {T("a + b")}), sym(cong(axiom("BA-Ax3", {V("b")}), plus_a)));
    BaProof e1 = lift(axiom("BA-Ax4", {T("a + b"), V("c")}), a);
    BaProof e2 = congS(ax1(a));
    BaProof e3 = trans(cong(lift(axiom("BA-Ax4", {V("b"), V("c")}), a), plus_a),
                       lift(axiom("BA-Ax4", {V("a"), T("b + c")}), a));
    return induction(a, "c", base, chain_eq({e1, e2, sym(e3)}));
}

// T => (y + u = y + v -> u = v)
BaProof cancel_left() {
    BaProof za = zero_add();
    Formula b0 = P("0 + u = 0 + v");
    Formula h0 = Formula::conj(top(), b0);
    BaProof base = intro(chain_eq({sym(lift(za, h0)), proj2(top(), b0), lift(inst(za, "u", V("v")), h0)}));

    BaProof sa = succ_add();
    Formula p = P("Sy + u = Sy + v");
    Formula h = Formula::conj(top(), p);
    BaProof e = chain_eq({sym(lift(sa, h)), proj2(top(), p), lift(inst(sa, "u", V("v")), h)});
    BaProof lem = intro(cut(e, axiom("BA-Ax2", {T("y + u"), T("y + v")})));
    Formula c = P("(y + u = y + v -> u = v)");
    BaProof step = compose(lift(lem, c), ax1(c));
    return induction(c, "y", base, step);
}

// y + v < y => y < y, by way of associativity
BaProof shifted_lt(const std::string& v, const BaProof& assoc) {
    Term y = V("y"), tv = V(v);
    BaProof d = lt_def(add(y, tv), y, "z", false);
    Formula k = Formula::eq(add(add(y, tv), S(V("z"))), y);
    BaProof as1 = lift(inst(assoc, {"a", "b", "c"}, {y, tv, S(V("z"))}), k);
    BaProof as2 = cong(lift(axiom("BA-Ax4", {tv, V("z")}), k), [&](const Term& t) { return add(y, t); });
    BaProof e = chain_eq({sym(as2), sym(as1), ax1(k)});
    Formula wx = P("E w. y + Sw = y");
    BaProof wit = inst(witness(wx), "w", add(tv, V("z")));
    BaProof inner = cut(cut(e, wit), lt_def(y, y, "w", true));
    return cut(d, r18(inner, "z"));
}

// T => (x < x -> F)
BaProof not_lt_self() {
    Formula h0 = P("T & 0 < 0");
    BaProof p0 = cut(proj2(top(), P("0 < 0")), lt_def(T("0"), T("0"), "z", false));
    Formula k0 = P("0 + Sz = 0");
    BaProof e0 = trans(sym(lift(axiom("BA-Ax4", {T("0"), V("z")}), k0)), ax1(k0));
    BaProof base = intro(cut(p0, r18(cut(e0, axiom("BA-Ax1", {T("0 + z")})), "z")));
    (void)h0;

    Formula lt = P("Sx < Sx");
    BaProof p1 = cut(proj2(top(), lt), lt_def(T("Sx"), T("Sx"), "z", false));
    Formula k = P("Sx + Sz = Sx");
    BaProof s1 = congS(lift(axiom("BA-Ax4", {V("x"), V("z")}), k));
    BaProof s2 = congS(sym(lift(inst(succ_add(), {"y", "u"}, {V("x"), V("z")}), k)));
    BaProof s3 = sym(lift(axiom("BA-Ax4", {T("Sx"), V("z")}), k));
    BaProof e = chain_eq({s1, s2, s3, ax1(k)});
    BaProof dec = cut(e, axiom("BA-Ax2", {T("x + Sz"), V("x")}));
    BaProof inner = cut(dec, witness(P("E z. x + Sz = x")));
    BaProof lem = intro(cut(cut(p1, r18(inner, "z")), lt_def(V("x"), V("x"), "z", true)));
    Formula n = P("(x < x -> F)");
    BaProof step = compose(lift(lem, n), ax1(n));
    return induction(n, "x", base, step);
}

// A & B => distributed four-way disjunction over A = a1 | a2, B = b1 | b2
BaProof distribute(const Formula& a, const Formula& b) {
    const Formula &a1 = a.left(), &a2 = a.right(), &b1 = b.left(), &b2 = b.right();
    Formula d1 = Formula::disj(Formula::conj(a1, b1), Formula::conj(a1, b2));
    Formula d2 = Formula::disj(Formula::conj(a2, b1), Formula::conj(a2, b2));
    auto part = [&](const Formula& ai, bool first) {
        BaProof s = cut(swap(b, ai), node("BQC-Ax4", {{"A", ai}, {"B", b1}, {"C", b2}}));
        return cut(s, first ? inj1(d1, d2) : inj2(d1, d2));
    };
    BaProof head = cut(swap(a, b), node("BQC-Ax4", {{"A", b}, {"B", a1}, {"C", a2}}));
    return cut(head, cases(part(a1, true), part(a2, false)));
}

// T => (c -> u = v) for the cross case x < y together with x = y + w
BaProof cross_case(const Formula& c, bool lt_first, const std::string& w, const BaProof& nls,
                   const BaProof& assoc) {
    Formula h = Formula::conj(top(), c);
    BaProof g = proj2(top(), c);
    BaProof lt = lt_first ? left(left(g)) : left(right(g));
    BaProof eq = lt_first ? right(g) : left(g);
    BaProof moved = rw(eq, lt, Formula::lt(V("h"), V("y")), "h");
    BaProof yy = intro(cut(moved, shifted_lt(w, assoc)));
    Formula r = P("u = v");
    BaProof from_bot = intro(under_top(ax3(r)));
    return compose(compose(yy, inst(nls, "x", V("y"))), from_bot);
}

BaProof cutoff_unique(const BaProof& cancel, const BaProof& nls, const BaProof& assoc) {
    Formula au = P("(x < y & u = 0) | x = y + u");
    Formula av = P("(x < y & v = 0) | x = y + v");
    Formula both = Formula::conj(au, av);
    BaProof dist = intro(under_top(distribute(au, av)));

    Formula c11 = Formula::conj(au.left(), av.left());
    BaProof g11 = proj2(top(), c11);
    BaProof k11 = intro(trans(right(left(g11)), sym(right(right(g11)))));

    Formula c22 = Formula::conj(au.right(), av.right());
    BaProof g22 = proj2(top(), c22);
    BaProof k22 = compose(intro(trans(sym(left(g22)), right(g22))), cancel);

    BaProof k12 = cross_case(Formula::conj(au.left(), av.right()), true, "v", nls, assoc);
    BaProof k21 = cross_case(Formula::conj(au.right(), av.left()), false, "u", nls, assoc);
    BaProof all = join(join(k11, k12), join(k21, k22));
    (void)both;
    return compose(dist, all);
}

BaProof padded_unique(const BaProof& cu) {
    Formula au = P("((x < y & u = 0) | x = y + u) & (T -> T)");
    Formula av = P("((x < y & v = 0) | x = y + v) & (T -> T)");
    Formula both = Formula::conj(au, av);
    BaProof g = proj2(top(), both);
    BaProof strip = intro(pair(left(left(g)), left(right(g))));
    return compose(strip, cu);
}

BaProof eq_unique(const std::string& graph_u, const std::string& graph_v) {
    Formula c = Formula::conj(P(graph_u), P(graph_v));
    BaProof g = proj2(top(), c);
    return intro(trans(left(g), sym(right(g))));
}

BaProof refl_x() { return node("BQC-Ax6", {{"x", std::string("x")}}); }

BaProof or_comm() {
    Formula a = P("y = 0"), b = P("x = 0");
    return cases(inj2(a, b), inj1(a, b));
}

BaProof exists_intro() { return cut(refl_x(), inst(witness(P("E y. x = y")), "y", V("x"))); }

BaProof exists_and() {
    BaProof ax5 = node("BQC-Ax5", {{"A", P("x = 0")}, {"B", P("y = x")}, {"x", std::string("y")}});
    BaProof h = ax1(P("x = 0 & y = x"));
    BaProof e = trans(right(h), left(h));
    return cut(ax5, r18(cut(e, witness(P("E y. y = 0"))), "y"));
}

BaProof block_part(const std::string& rule) {
    return node("BQC-R19", {{"A", top()}, {"B", top()}, {"C", cons(axiom(rule, {V("y")}))}, {"xs", std::vector<std::string>{"y"}}},
                {cut(ax2(P("T & T")), axiom(rule, {V("y")}))});
}

BaProof block_conj() {
    BaProof p1 = block_part("BA-Ax3"), p2 = block_part("BA-Ax5");
    BaProof ax9 = node("BQC-Ax9", {{"xs", std::vector<std::string>{"y"}}, {"A", top()},
                                   {"B", cons(p1).right()}, {"C", cons(p2).right()}});
    return cut(pair(p1, p2), ax9);
}

BaProof block_inst() {
    BaProof p1 = block_part("BA-Ax3");
    Formula b = P("y + 0 = y");
    BaProof a11 = node("BQC-Ax11", {{"xs", std::vector<std::string>{"y"}}, {"ts", std::vector<Term>{T("SS0")}},
                                    {"A", top()}, {"B", b}});
    BaProof a12 = node("BQC-Ax12", {{"xs", std::vector<std::string>{"y"}}, {"ys", std::vector<std::string>{}},
                                    {"A", top()}, {"B", P("SS0 + 0 = SS0")}});
    return cut(cut(p1, a11), a12);
}

BaProof exists_block() {
    Formula hx = P("(T & x = Sz) & x = 0");
    BaProof h = ax1(hx);
    BaProof e = trans(sym(right(left(h))), right(h));
    BaProof q = intro(cut(e, axiom("BA-Ax1", {V("z")})));
    BaProof r = intro(q, {"z"});
    BaProof a13 = node("BQC-Ax13", {{"ys", std::vector<std::string>{}}, {"x", std::string("z")},
                                    {"A", P("(x = 0 -> F)")}, {"B", P("x = Sz")}});
    return cut(r, a13);
}

BaProof ind_axiom() {
    BaProof r = intro(cut(ax2(P("T & x + 0 = x")), axiom("BA-Ax3", {T("Sx")})), {"x"});
    BaProof a7 = node("BA-Ax7", {{"ys", std::vector<std::string>{}}, {"x", std::string("x")}, {"A", P("x + 0 = x")}});
    return cut(r, a7);
}

BaProof mul_zero_left() {
    Formula a = P("0 * x = 0");
    BaProof base = axiom("BA-Ax5", {T("0")});
    BaProof e1 = lift(axiom("BA-Ax6", {T("0"), V("x")}), a);
    BaProof e2 = lift(axiom("BA-Ax3", {T("0 * x")}), a);
    return induction(a, "x", base, chain_eq({e1, e2, ax1(a)}));
}

BaProof mul_one(const BaProof& za) {
    BaProof e1 = axiom("BA-Ax6", {V("x"), T("0")});
    BaProof e2 = cong(axiom("BA-Ax5", {V("x")}), [](const Term& t) { return add(t, V("x")); });
    return chain_eq({e1, e2, inst(za, "u", V("x"))});
}

BaProof monus_self() {
    BaProof le = cut(refl_x(), inj2(P("x < x"), P("x = x")));
    return cut(le, axiom("BAc-MonusLe", {V("x"), V("x")}));
}

BaProof monus_succ() {
    BaProof le = cut(eq_refl(T("0")), inj2(P("0 < 0"), P("0 = 0")));
    return cut(le, axiom("BAc-MonusGt", {T("0"), T("0")}));
}

BaProof u_cancel() {
    BaProof u = make_node("Theory(U)", {}, {}, TheoryPack::ba_u());
    u = make_node("BQC-R17", {{"A", ante(u)}, {"B", cons(u)}, {"xs", std::vector<std::string>{"x", "y", "z"}},
                              {"ts", std::vector<Term>{V("u"), V("v"), V("w")}}}, {u}, TheoryPack::ba_u());
    return make_node("BQC-R19", {{"A", top()}, {"B", ante(u)}, {"C", cons(u)}, {"xs", std::vector<std::string>{}}},
                     {cut(proj2(top(), ante(u)), u)}, TheoryPack::ba_u());
}

BaProof lt_succ() {
    BaProof e = trans(axiom("BA-Ax4", {V("x"), T("0")}), congS(axiom("BA-Ax3", {V("x")})));
    BaProof w = inst(witness(P("E z. x + Sz = Sx")), "z", T("0"));
    return cut(cut(e, w), lt_def(V("x"), T("Sx"), "z", true));
}

BaProof imp_refl() { return intro(proj2(top(), P("x = 0"))); }

}  // namespace

std::vector<Fixture> ba_fixtures() {
    BaProof za = zero_add();
    BaProof assoc = add_assoc();
    BaProof cancel = cancel_left();
    BaProof nls = not_lt_self();
    BaProof cu = cutoff_unique(cancel, nls, assoc);
    std::vector<Fixture> out = {
        {"refl", "ba", refl_x(), "", ""},
        {"zero_add", "ba", za, "", ""},
        {"succ_add", "ba", succ_add(), "", ""},
        {"add_assoc", "ba", assoc, "", ""},
        {"cancel_left", "ba", cancel, "", ""},
        {"not_lt_self", "ba", nls, "", ""},
        {"cutoff_unique_cond", "ba", cu, "(x < y & z = 0) | x = y + z", "z"},
        {"cutoff_unique_cond_padded", "ba", padded_unique(cu), "((x < y & z = 0) | x = y + z) & (T -> T)", "z"},
        {"eq_unique_cond", "ba", eq_unique("u = x", "v = x"), "z = x", "z"},
        {"monus_unique_cond", "ba-c", eq_unique("u = x -. y", "v = x -. y"), "z = x -. y", "z"},
        {"eq_sym", "ba", eq_sym(V("x"), V("y")), "", ""},
        {"eq_trans", "ba", eq_trans(V("x"), V("y"), V("z")), "", ""},
        {"or_comm", "ba", or_comm(), "", ""},
        {"exists_intro", "ba", exists_intro(), "", ""},
        {"exists_and", "ba", exists_and(), "", ""},
        {"block_conj", "ba", block_conj(), "", ""},
        {"block_inst", "ba", block_inst(), "", ""},
        {"exists_block", "ba", exists_block(), "", ""},
        {"ind_axiom", "ba", ind_axiom(), "", ""},
        {"mul_zero_left", "ba", mul_zero_left(), "", ""},
        {"mul_one", "ba", mul_one(za), "", ""},
        {"monus_self", "ba-c", monus_self(), "", ""},
        {"monus_succ", "ba-c", monus_succ(), "", ""},
        {"u_cancel", "ba-u", u_cancel(), "", ""},
        {"lt_succ", "ba", lt_succ(), "", ""},
        {"imp_refl", "ba", imp_refl(), "", ""},
    };
    return out;
}

}  // namespace bakit::lemmas
