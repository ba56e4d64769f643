#include <algorithm>

#include "bakit/proofs_lk.hpp"

namespace bakit {

namespace {

using FL = std::vector<Formula>;
using K = Formula::Kind;

std::size_t degree(const Formula& f) {
    switch (f.kind()) {
    case K::And:
    case K::Or:
    case K::Imp:
    case K::Block: return 1 + degree(f.left()) + degree(f.right());
    case K::Neg:
    case K::Exists:
    case K::Forall: return 1 + degree(f.body());
    default: return 0;
    }
}

bool has(const FL& l, const Formula& f) { return std::find(l.begin(), l.end(), f) != l.end(); }

FL without(const FL& l, const Formula& f) {
    FL out;
    for (auto& g : l)
        if (!(g == f)) out.push_back(g);
    return out;
}

FL cat(FL a, const FL& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

bool right_principal(const LkProof& p, const Formula& a) {
    static const std::set<std::string> rules = {"⇒∧", "⇒∨L", "⇒∨R", "⇒¬", "⇒→", "⇒∃", "⇒∀"};
    return rules.count(p.rule) && !p.conclusion.cons.empty() && p.conclusion.cons.front() == a;
}

bool left_principal(const LkProof& p, const Formula& a) {
    static const std::set<std::string> rules = {"∧⇒L", "∧⇒R", "∨⇒", "¬⇒", "→⇒", "∃⇒", "∀⇒"};
    return rules.count(p.rule) && !p.conclusion.ante.empty() && p.conclusion.ante.back() == a;
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

LkSequent dedup(const LkSequent& s) {
    LkSequent out;
    for (auto& f : s.ante)
        if (!has(out.ante, f)) out.ante.push_back(f);
    for (auto& f : s.cons)
        if (!has(out.cons, f)) out.cons.push_back(f);
    return out;
}

struct Measure {
    std::size_t deg, height;
    bool operator<(const Measure& o) const { return deg != o.deg ? deg < o.deg : height < o.height; }
};

class Eliminator {
public:
    Eliminator(const ClassPredicate& cls, CutElimStats& st) : cls_(cls), st_(st) {}

    LkProof run(const LkProof& p) {
        std::vector<LkProof> prem;
        for (auto& q : p.premises) prem.push_back(run(q));
        if (p.rule == "Cut") {
            const Formula& a = std::get<Formula>(p.bind.at("A"));
            if (!cls_(a)) {
                ++st_.eliminated;
                return adapt(mix(prem[0], prem[1], a, nullptr), p.conclusion);
            }
        }
        return lk_node(p.rule, p.bind, prem);
    }

private:
    const ClassPredicate& cls_;
    CutElimStats& st_;

    std::string fresh(const std::string& base, const LkProof& p1, const LkProof& p2) {
        VarSet avoid;
        collect_vars(p1, avoid);
        collect_vars(p2, avoid);
        return fresh_var(base, avoid);
    }

    // removes the binder variable of an eigenvariable or induction node from everything the mix brings in
    LkProof rename_binder(const LkProof& p, const LkProof& other) {
        const char* key = nullptr;
        if (p.rule == "∃⇒" || p.rule == "⇒∀") key = "y";
        if (p.rule == "ind") key = "x";
        if (!key) return p;
        std::string y = std::get<std::string>(p.bind.at(key));
        std::string y2 = fresh(y, p, other);
        Bindings b = p.bind;
        b[key] = y2;
        if (p.rule == "ind") b["A"] = substitute(std::get<Formula>(b.at("A")), y, Term::var(y2));
        return {p.conclusion, p.rule, b, {subst_proof(p.premises[0], y, Term::var(y2))}};
    }

    // re-applies the last rule of p to new premises
    LkProof rebuild(const LkProof& p, const std::vector<LkProof>& q) {
        const std::string& r = p.rule;
        auto F = [&](const char* k) { return std::get<Formula>(p.bind.at(k)); };
        auto first = [&](std::size_t i) { return p.premises[i].conclusion.cons.front(); };
        auto last = [&](std::size_t i) { return p.premises[i].conclusion.ante.back(); };
        if (r == "Ex⇒" || r == "⇒Ex" || r == "W⇒" || r == "⇒W" || r == "C⇒" || r == "⇒C") return q[0];
        if (r == "Cut") return lk::cut(q[0], q[1], F("A"));
        if (r == "⇒∧") return lk::and_r(q[0], q[1], first(0), first(1));
        if (r == "∨⇒") return lk::or_l(q[0], q[1], last(0), last(1));
        if (r == "→⇒") return lk::imp_l(q[0], q[1], first(0), last(1));
        if (r == "∧⇒L" || r == "∧⇒R") return lk::and_l(q[0], F("A"), r == "∧⇒L");
        if (r == "⇒∨L" || r == "⇒∨R") return lk::or_r(q[0], F("A"), r == "⇒∨L");
        if (r == "¬⇒") return lk::neg_l(q[0], first(0));
        if (r == "⇒¬") return lk::neg_r(q[0], last(0));
        if (r == "⇒→") return lk::imp_r(q[0], last(0), first(0));
        if (r == "∃⇒") return lk::ex_l(q[0], F("A"), std::get<std::string>(p.bind.at("y")));
        if (r == "⇒∀") return lk::all_r(q[0], F("A"), std::get<std::string>(p.bind.at("y")));
        if (r == "⇒∃") return lk::ex_r(q[0], F("A"), std::get<Term>(p.bind.at("t")));
        if (r == "∀⇒") return lk::all_l(q[0], F("A"), std::get<Term>(p.bind.at("t")));
        if (r == "ind")
            return lk::ind(q[0], F("A"), std::get<std::string>(p.bind.at("x")), std::get<Term>(p.bind.at("t")));
        throw std::logic_error("mix: cannot reduce through " + r);
    }

    LkProof cut_or_mix(const LkProof& l, const LkProof& r, const Formula& b, const Measure& m) {
        if (!cls_(b)) return mix(l, r, b, &m);
        if (!has(l.conclusion.cons, b)) return l;
        if (!has(r.conclusion.ante, b)) return r;
        return lk::cut(adapt(l, dedup(l.conclusion)), adapt(r, dedup(r.conclusion)), b);
    }

    LkProof mix(const LkProof& p1, const LkProof& p2, const Formula& a, const Measure* parent) {
        ++st_.mix_calls;
        Measure m{degree(a), lk_height(p1) + lk_height(p2)};
        if (parent) {
            ++st_.measure_checks;
            if (!(m < *parent)) throw std::logic_error("mix: reduction measure did not decrease");
        }
        const LkSequent& s1 = p1.conclusion;
        const LkSequent& s2 = p2.conclusion;
        if (!has(s1.cons, a)) return p1;
        if (!has(s2.ante, a)) return p2;
        if (p1.rule == "Ax") return p2;
        if (p2.rule == "Ax") return p1;
        LkSequent target{cat(s1.ante, without(s2.ante, a)), cat(without(s1.cons, a), s2.cons)};

        if (!right_principal(p1, a)) {
            LkProof p = rename_binder(p1, p2);
            std::vector<LkProof> q = p.premises;
            for (auto& x : q) {
                if (!has(x.conclusion.cons, a)) continue;
                x = mix(x, p2, a, &m);
                if (fits(x.conclusion, target)) return x;
            }
            return rebuild(p, q);
        }
        if (!left_principal(p2, a)) {
            LkProof p = rename_binder(p2, p1);
            std::vector<LkProof> q = p.premises;
            for (auto& x : q) {
                if (!has(x.conclusion.ante, a)) continue;
                x = mix(p1, x, a, &m);
                if (fits(x.conclusion, target)) return x;
            }
            return rebuild(p, q);
        }

        // both principal
        auto done = [&](const LkProof& x) { return fits(x.conclusion, target); };
        auto mix1 = [&](const LkProof& q) { return mix(q, p2, a, &m); };
        auto mix2 = [&](const LkProof& q) { return mix(p1, q, a, &m); };
        switch (a.kind()) {
        case K::And: {
            bool l = p2.rule == "∧⇒L";
            LkProof q1 = mix1(p1.premises[l ? 0 : 1]);
            if (done(q1)) return q1;
            LkProof q2 = mix2(p2.premises[0]);
            if (done(q2)) return q2;
            return cut_or_mix(q1, q2, l ? a.left() : a.right(), m);
        }
        case K::Or: {
            bool l = p1.rule == "⇒∨L";
            LkProof q1 = mix1(p1.premises[0]);
            if (done(q1)) return q1;
            LkProof q2 = mix2(p2.premises[l ? 0 : 1]);
            if (done(q2)) return q2;
            return cut_or_mix(q1, q2, l ? a.left() : a.right(), m);
        }
        case K::Neg: {
            LkProof q1 = mix1(p1.premises[0]);
            if (done(q1)) return q1;
            LkProof q2 = mix2(p2.premises[0]);
            if (done(q2)) return q2;
            return cut_or_mix(q2, q1, a.body(), m);
        }
        case K::Imp: {
            LkProof q = mix1(p1.premises[0]);
            if (done(q)) return q;
            LkProof r1 = mix2(p2.premises[0]);
            if (done(r1)) return r1;
            LkProof r2 = mix2(p2.premises[1]);
            if (done(r2)) return r2;
            LkProof x = cut_or_mix(r1, q, a.left(), m);
            if (done(x)) return x;
            return cut_or_mix(x, r2, a.right(), m);
        }
        case K::Exists: {
            Term t = std::get<Term>(p1.bind.at("t"));
            std::string y = std::get<std::string>(p2.bind.at("y"));
            LkProof q1 = mix1(p1.premises[0]);
            if (done(q1)) return q1;
            LkProof q2 = mix2(subst_proof(p2.premises[0], y, t));
            if (done(q2)) return q2;
            return cut_or_mix(q1, q2, substitute(a.body(), a.var(), t), m);
        }
        case K::Forall: {
            Term t = std::get<Term>(p2.bind.at("t"));
            std::string y = std::get<std::string>(p1.bind.at("y"));
            LkProof q1 = mix1(subst_proof(p1.premises[0], y, t));
            if (done(q1)) return q1;
            LkProof q2 = mix2(p2.premises[0]);
            if (done(q2)) return q2;
            return cut_or_mix(q1, q2, substitute(a.body(), a.var(), t), m);
        }
        default: throw std::logic_error("mix: no reduction for " + to_string(a));
        }
    }
};

}  // namespace

LkProof eliminate_cuts_outside(const LkProof& p, const ClassPredicate& cls, CutElimStats* stats) {
    LkReport r = check_lk(p, cls);
    if (!r.ok()) throw std::invalid_argument("eliminate_cuts_outside: proof does not check\n" + r.summary());
    CutElimStats local;
    Eliminator e(cls, stats ? *stats : local);
    return e.run(p);
}

}  // namespace bakit
