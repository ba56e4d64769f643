#include <algorithm>

#include "bakit/proofs_lk.hpp"

namespace bakit {

namespace {

using FL = std::vector<Formula>;

LkProof swap_ante(const LkProof& p, std::size_t i) { return lk_node("Ex⇒", {{"i", std::to_string(i)}}, {p}); }
LkProof swap_cons(const LkProof& p, std::size_t i) { return lk_node("⇒Ex", {{"i", std::to_string(i)}}, {p}); }

// moves antecedent position j to position k >= j
LkProof ante_forward(LkProof p, std::size_t j, std::size_t k) {
    for (; j < k; ++j) p = swap_ante(p, j);
    return p;
}

// moves antecedent position j to position k <= j
LkProof ante_back(LkProof p, std::size_t j, std::size_t k) {
    for (; j > k; --j) p = swap_ante(p, j - 1);
    return p;
}

LkProof cons_back(LkProof p, std::size_t j, std::size_t k) {
    for (; j > k; --j) p = swap_cons(p, j - 1);
    return p;
}

bool dup(const FL& l, std::size_t& a, std::size_t& b) {
    for (a = 0; a < l.size(); ++a)
        for (b = a + 1; b < l.size(); ++b)
            if (l[a] == l[b]) return true;
    return false;
}

std::size_t count(const FL& l, const Formula& f) { return std::count(l.begin(), l.end(), f); }

bool subset(const FL& a, const FL& b) {
    for (auto& f : a)
        if (std::find(b.begin(), b.end(), f) == b.end()) return false;
    return true;
}

void collect_vars(const LkProof& p, VarSet& out) {
    for (auto& f : p.conclusion.ante) out.merge(all_vars(f));
    for (auto& f : p.conclusion.cons) out.merge(all_vars(f));
    for (auto& [k, m] : p.bind) {
        if (auto f = std::get_if<Formula>(&m)) out.merge(all_vars(*f));
        if (auto t = std::get_if<Term>(&m)) out.merge(vars_of(*t));
        if (auto v = std::get_if<std::string>(&m); v && k != "i") out.insert(*v);
    }
    for (auto& q : p.premises) collect_vars(q, out);
}

}  // namespace

bool fits(const LkSequent& s, const LkSequent& target) {
    return subset(s.ante, target.ante) && subset(s.cons, target.cons);
}

LkProof adapt(const LkProof& p0, const LkSequent& target) {
    if (p0.conclusion == target) return p0;
    if (!fits(p0.conclusion, target))
        throw std::invalid_argument("adapt: " + to_string(p0.conclusion) + " does not fit " + to_string(target));
    LkProof p = p0;
    std::size_t a, b;
    while (dup(p.conclusion.ante, a, b)) {
        std::size_t n = p.conclusion.ante.size();
        p = ante_forward(p, b, n - 1);
        p = ante_forward(p, a, n - 2);
        p = lk_node("C⇒", {}, {p});
    }
    while (dup(p.conclusion.cons, a, b)) {
        p = cons_back(p, a, 0);
        p = cons_back(p, b, 1);
        p = lk_node("⇒C", {}, {p});
    }
    for (auto& f : target.ante)
        while (count(p.conclusion.ante, f) < count(target.ante, f)) p = lk_node("W⇒", {{"A", f}}, {p});
    for (auto& f : target.cons)
        while (count(p.conclusion.cons, f) < count(target.cons, f)) p = lk_node("⇒W", {{"A", f}}, {p});
    for (std::size_t i = 0; i < target.ante.size(); ++i) {
        const FL& l = p.conclusion.ante;
        std::size_t j = std::find(l.begin() + i, l.end(), target.ante[i]) - l.begin();
        p = ante_back(p, j, i);
    }
    for (std::size_t i = 0; i < target.cons.size(); ++i) {
        const FL& l = p.conclusion.cons;
        std::size_t j = std::find(l.begin() + i, l.end(), target.cons[i]) - l.begin();
        p = cons_back(p, j, i);
    }
    return p;
}

LkProof subst_proof(const LkProof& p, const std::string& x, const Term& t) {
    bool free = false;
    for (auto& f : p.conclusion.ante) free = free || occurs_free(x, f);
    for (auto& f : p.conclusion.cons) free = free || occurs_free(x, f);
    if (!free) return p;
    std::vector<LkProof> prem = p.premises;
    Bindings b = p.bind;
    VarSet tv = vars_of(t);
    const char* binder = nullptr;
    if (p.rule == "∃⇒" || p.rule == "⇒∀") binder = "y";
    if (p.rule == "ind") binder = "x";
    if (binder) {
        std::string y = std::get<std::string>(b.at(binder));
        if (y == x || tv.count(y)) {
            VarSet avoid = tv;
            avoid.insert(x);
            collect_vars(p, avoid);
            std::string y2 = fresh_var(y, avoid);
            prem[0] = subst_proof(prem[0], y, Term::var(y2));
            b[binder] = y2;
            if (p.rule == "ind") b["A"] = substitute(std::get<Formula>(b.at("A")), y, Term::var(y2));
        }
    }
    for (auto& q : prem) q = subst_proof(q, x, t);
    for (auto& [k, m] : b) {
        if (auto f = std::get_if<Formula>(&m)) m = substitute(*f, x, t);
        if (auto s = std::get_if<Term>(&m)) m = substitute(*s, {{x, t}});
    }
    return lk_node(p.rule, b, prem);
}

namespace lk {

namespace {

LkProof to_last_ante(const LkProof& p, const Formula& a) {
    const FL& l = p.conclusion.ante;
    auto it = std::find(l.rbegin(), l.rend(), a);
    if (it == l.rend()) return lk_node("W⇒", {{"A", a}}, {p});
    return ante_forward(p, l.size() - 1 - (it - l.rbegin()), l.size() - 1);
}

LkProof to_first_cons(const LkProof& p, const Formula& a) {
    const FL& l = p.conclusion.cons;
    auto it = std::find(l.begin(), l.end(), a);
    if (it == l.end()) return lk_node("⇒W", {{"A", a}}, {p});
    return cons_back(p, it - l.begin(), 0);
}

}  // namespace

LkProof ax(const Formula& a) { return lk_node("Ax", {{"A", a}}, {}); }

LkProof cut(const LkProof& left, const LkProof& right, const Formula& a) {
    return lk_node("Cut", {{"A", a}}, {to_first_cons(left, a), to_last_ante(right, a)});
}

LkProof and_r(const LkProof& pa, const LkProof& pb, const Formula& a, const Formula& b) {
    return lk_node("⇒∧", {}, {to_first_cons(pa, a), to_first_cons(pb, b)});
}

LkProof and_l(const LkProof& p, const Formula& conj, bool first) {
    return lk_node(first ? "∧⇒L" : "∧⇒R", {{"A", conj}}, {to_last_ante(p, first ? conj.left() : conj.right())});
}

LkProof or_r(const LkProof& p, const Formula& disj, bool first) {
    return lk_node(first ? "⇒∨L" : "⇒∨R", {{"A", disj}}, {to_first_cons(p, first ? disj.left() : disj.right())});
}

LkProof or_l(const LkProof& pa, const LkProof& pb, const Formula& a, const Formula& b) {
    return lk_node("∨⇒", {}, {to_last_ante(pa, a), to_last_ante(pb, b)});
}

LkProof imp_r(const LkProof& p, const Formula& a, const Formula& b) {
    return lk_node("⇒→", {}, {to_last_ante(to_first_cons(p, b), a)});
}

LkProof imp_l(const LkProof& pa, const LkProof& pb, const Formula& a, const Formula& b) {
    return lk_node("→⇒", {}, {to_first_cons(pa, a), to_last_ante(pb, b)});
}

LkProof neg_r(const LkProof& p, const Formula& a) { return lk_node("⇒¬", {}, {to_last_ante(p, a)}); }
LkProof neg_l(const LkProof& p, const Formula& a) { return lk_node("¬⇒", {}, {to_first_cons(p, a)}); }

LkProof ex_r(const LkProof& p, const Formula& ex, const Term& t) {
    return lk_node("⇒∃", {{"A", ex}, {"t", t}}, {to_first_cons(p, substitute(ex.body(), ex.var(), t))});
}

LkProof ex_l(const LkProof& p, const Formula& ex, const std::string& y) {
    return lk_node("∃⇒", {{"A", ex}, {"y", y}}, {to_last_ante(p, substitute(ex.body(), ex.var(), Term::var(y)))});
}

LkProof all_r(const LkProof& p, const Formula& all, const std::string& y) {
    return lk_node("⇒∀", {{"A", all}, {"y", y}}, {to_first_cons(p, substitute(all.body(), all.var(), Term::var(y)))});
}

LkProof all_l(const LkProof& p, const Formula& all, const Term& t) {
    return lk_node("∀⇒", {{"A", all}, {"t", t}}, {to_last_ante(p, substitute(all.body(), all.var(), t))});
}

LkProof ind(const LkProof& p, const Formula& a, const std::string& x, const Term& t) {
    Formula step = substitute(a, x, Term::succ(Term::var(x)));
    return lk_node("ind", {{"A", a}, {"x", x}, {"t", t}}, {to_last_ante(to_first_cons(p, step), a)});
}

LkProof axiom(const std::string& rule, const std::vector<Term>& ts) {
    static const char* keys[] = {"s", "t", "s'", "t'"};
    Bindings b;
    for (std::size_t i = 0; i < ts.size() && i < 4; ++i) b[keys[i]] = ts[i];
    return lk_node(rule, b, {});
}

}  // namespace lk

}  // namespace bakit
