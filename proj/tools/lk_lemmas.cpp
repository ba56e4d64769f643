#include "lk_lemmas.hpp"

namespace bakit::lemmas {

namespace {

Formula P(const std::string& s) { return parse_formula(s, Language::Lc, Dialect::Classical); }
Term T(const std::string& s) { return parse_term(s, Language::Lc); }

const Formula& head(const LkProof& p) { return p.conclusion.cons.front(); }

LkProof ref(const Term& s) { return lk::axiom("=-ref", {s}); }

// from G => p = q and G' => q = r
LkProof trans(const LkProof& pq, const LkProof& qr) {
    Term p = head(pq).lterm(), q = head(pq).rterm(), r = head(qr).rterm();
    LkProof e = lk::cut(ref(p), lk::axiom("=-eqv", {p, p, q, r}), Formula::eq(p, p));
    e = lk::cut(qr, e, head(qr));
    return lk::cut(pq, e, head(pq));
}

LkProof sym(const LkProof& pq) {
    Term p = head(pq).lterm(), q = head(pq).rterm();
    Formula pp = Formula::eq(p, p);
    LkProof e = lk::cut(ref(p), lk::axiom("=-eqv", {p, q, p, p}), pp);
    e = lk::cut(ref(p), e, pp);
    return lk::cut(pq, e, head(pq));
}

// => E through a cut on T -> E
LkProof via_imp(const LkProof& p) {
    Formula e = head(p);
    Formula te = Formula::imp(Formula::top(), e);
    LkProof left = lk::imp_r(p, Formula::top(), e);
    LkProof right = lk::imp_l(lk_node("⇒⊤", {}, {}), lk::ax(e), Formula::top(), e);
    return lk::cut(left, right, te);
}

// G => D with D first, through a cut on ~~D
LkProof via_double_neg(const LkProof& p) {
    Formula d = head(p);
    Formula nn = Formula::neg(Formula::neg(d));
    LkProof left = lk::neg_r(lk::neg_l(p, d), Formula::neg(d));
    LkProof right = lk::neg_l(lk::neg_r(lk::ax(d), d), Formula::neg(d));
    return lk::cut(left, right, nn);
}

LkProof sum_one_one() {
    // S0 + S0 = S(S0 + 0) = SS0
    Term one = T("S0");
    LkProof a = lk::axiom("+-S", {one, T("0")});
    LkProof b = lk::cut(lk::axiom("+-0", {one}), lk::axiom("S-fnc", {T("S0 + 0"), one}), P("S0 + 0 = S0"));
    return trans(a, b);
}

LkProof zero_add() {
    // 0 + x = x by induction on x
    Formula a = P("0 + x = x");
    LkProof step = trans(lk::axiom("+-S", {T("0"), T("x")}), lk::axiom("S-fnc", {T("0 + x"), T("x")}));
    LkProof ind = lk::ind(step, a, "x", T("x"));
    return lk::cut(lk::axiom("+-0", {T("0")}), ind, P("0 + 0 = 0"));
}

LkProof succ_cong(const Term& s, const Term& t) {
    // s = t -> Ss = St
    Formula st = Formula::eq(s, t);
    return lk::imp_r(lk::axiom("S-fnc", {s, t}), st, Formula::eq(Term::succ(s), Term::succ(t)));
}

LkProof imp_chain() {
    Formula a = P("x = y"), b = P("S x = S y"), c = P("S S x = S S y");
    Formula ab = Formula::imp(a, b), bc = Formula::imp(b, c);
    LkProof use1 = lk::imp_l(lk::ax(a), lk::ax(b), a, b);
    LkProof step1 = lk::cut(succ_cong(T("x"), T("y")), use1, ab);
    LkProof use2 = lk::imp_l(lk::ax(b), lk::ax(c), b, c);
    LkProof step2 = lk::cut(succ_cong(T("S x"), T("S y")), use2, bc);
    return lk::cut(step1, step2, b);
}

LkProof forall_cut() {
    Formula all = P("A v. v = v");
    Formula ex = P("E u. u = S0");
    LkProof left = lk::all_r(ref(T("a")), all, "a");
    LkProof right = lk::all_l(lk::ex_r(ref(T("S0")), ex, T("S0")), all, T("S0"));
    return lk::cut(left, right, all);
}

LkProof or_comm_cut() {
    Formula x0 = P("x = 0"), y0 = P("y = 0");
    Formula d = Formula::disj(x0, y0), e = Formula::disj(y0, x0);
    LkProof body = lk::or_l(lk::or_r(lk::ax(x0), e, false), lk::or_r(lk::ax(y0), e, true), x0, y0);
    body = adapt(body, {{d}, {e}});
    LkProof left = lk::imp_r(body, d, e);
    LkProof right = lk::imp_l(lk::ax(d), lk::ax(e), d, e);
    return lk::cut(left, right, Formula::imp(d, e));
}

LkProof exists_elim_cut() {
    Formula all = P("A v. (v = S0 -> S0 = v)");
    Formula ex = P("E u. u = S0"), ex2 = P("E u. S0 = u");
    Formula aS = P("a = S0"), Sa = P("S0 = a");
    LkProof left = lk::all_r(lk::imp_r(sym(lk::ax(aS)), aS, Sa), all, "a");
    Formula bS = P("b = S0"), Sb = P("S0 = b");
    LkProof use = lk::imp_l(lk::ax(bS), lk::ex_r(lk::ax(Sb), ex2, T("b")), bS, Sb);
    LkProof right = lk::ex_l(lk::all_l(use, all, T("b")), ex, "b");
    return lk::cut(left, right, all);
}

LkProof exists_neg_cut() {
    // => E u. u = 0 through ~~(E u. u = 0)
    Formula ex = P("E u. u = 0");
    return via_double_neg(lk::ex_r(ref(T("0")), ex, T("0")));
}

LkProof delta0_mixed() {
    // x = 0 => x = 0 & x = x, keeping a bounded cut and removing an unbounded one
    Formula all = P("A v. v = v");
    LkProof refl = lk::cut(lk::all_r(ref(T("a")), all, "a"), lk::all_l(lk::ax(P("x = x")), all, T("x")), all);
    LkProof x0 = via_double_neg(lk::ax(P("x = 0")));
    return lk::and_r(x0, refl, P("x = 0"), P("x = x"));
}

LkProof pos_only() {
    // => (E u. u = S0) | F with a positive cut
    Formula ex = P("E u. u = S0");
    LkProof p = lk::ex_r(ref(T("S0")), ex, T("S0"));
    LkProof q = lk::or_r(lk::ax(ex), Formula::disj(ex, Formula::bot()), true);
    return lk::cut(p, q, ex);
}

LkProof sym_cut() {
    // x = y => y = x through x = y -> y = x
    Formula xy = P("x = y"), yx = P("y = x");
    LkProof left = lk::imp_r(sym(lk::ax(xy)), xy, yx);
    LkProof right = lk::imp_l(lk::ax(xy), lk::ax(yx), xy, yx);
    return lk::cut(left, right, Formula::imp(xy, yx));
}

LkProof lt_rewrite() {
    // x = y, x < z => y < z, through ~(y < z)
    LkProof rel = lk::cut(ref(T("z")), lk::axiom("<-rel", {T("x"), T("y"), T("z"), T("z")}), P("z = z"));
    return via_double_neg(rel);
}

LkProof exists_pair() {
    // E u. u = x & x = u through A v. v = v
    Formula all = P("A v. v = v");
    Formula ex = P("E u. (u = x & x = u)");
    Formula xx = P("x = x");
    LkProof both = adapt(lk::and_r(lk::ax(xx), lk::ax(xx), xx, xx), {{xx}, {Formula::conj(xx, xx)}});
    LkProof right = lk::all_l(lk::ex_r(both, ex, T("x")), all, T("x"));
    return lk::cut(lk::all_r(ref(T("a")), all, "a"), right, all);
}

}  // namespace

std::vector<LkFixture> lk_fixtures() {
    return {
        {"sum_via_imp_cut", "pos", via_imp(sum_one_one())},
        {"sum_one_one", "pos", sum_one_one()},
        {"double_neg_cut", "pos", via_double_neg(lk::ax(P("x = x")))},
        {"exists_neg_cut", "pos", exists_neg_cut()},
        {"forall_cut", "pos", forall_cut()},
        {"imp_chain", "pos", imp_chain()},
        {"ind_zero_add", "pos", zero_add()},
        {"ind_with_neg_cut", "pos", via_double_neg(zero_add())},
        {"ind_via_imp_cut", "pos", via_imp(zero_add())},
        {"or_comm_cut", "pos", or_comm_cut()},
        {"exists_elim_cut", "pos", exists_elim_cut()},
        {"delta0_mixed", "delta0", delta0_mixed()},
        {"pos_only_cuts", "pos", pos_only()},
        {"sym_cut", "pos", sym_cut()},
        {"lt_rewrite", "pos", lt_rewrite()},
        {"exists_pair", "pos", exists_pair()},
    };
}

}  // namespace bakit::lemmas
