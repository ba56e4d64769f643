#include <map>

#include "bakit/proofs_lk.hpp"

namespace bakit {

using K = Formula::Kind;

std::string to_string(const LkSequent& s) {
    std::string out;
    for (std::size_t i = 0; i < s.ante.size(); ++i) out += (i ? ", " : "") + to_string(s.ante[i]);
    out += s.ante.empty() ? "=>" : " =>";
    for (std::size_t i = 0; i < s.cons.size(); ++i) out += (i ? ", " : " ") + to_string(s.cons[i]);
    return out;
}

LkSequent parse_lk_sequent(const std::string& text) {
    auto [l, r] = parse_sequent_lists(text, Language::Lc, Dialect::Classical);
    return {l, r};
}

ClassPredicate ClassPredicate::pos() { return {"pos", [](const Formula& f) { return is_positive(f); }}; }
ClassPredicate ClassPredicate::delta0() { return {"delta0", [](const Formula& f) { return is_delta0(f); }}; }
ClassPredicate ClassPredicate::open() { return {"open", [](const Formula& f) { return is_quantifier_free(f); }}; }
ClassPredicate ClassPredicate::any() { return {"any", [](const Formula&) { return true; }}; }

ClassPredicate ClassPredicate::by_name(const std::string& n) {
    if (n == "pos") return pos();
    if (n == "delta0") return delta0();
    if (n == "open") return open();
    if (n == "any") return any();
    throw std::invalid_argument("unknown class " + n);
}

namespace {

const std::map<std::string, std::size_t>& arity_table() {
    static const std::map<std::string, std::size_t> t = {
        {"Ax", 0},   {"Ex⇒", 1},  {"⇒Ex", 1},  {"W⇒", 1},    {"⇒W", 1},    {"C⇒", 1},    {"⇒C", 1},
        {"Cut", 2},  {"⇒⊤", 0},   {"⊥⇒", 0},   {"¬⇒", 1},    {"⇒¬", 1},    {"∧⇒L", 1},   {"∧⇒R", 1},
        {"⇒∧", 2},   {"∨⇒", 2},   {"⇒∨L", 1},  {"⇒∨R", 1},   {"→⇒", 2},    {"⇒→", 1},    {"∃⇒", 1},
        {"⇒∃", 1},   {"∀⇒", 1},   {"⇒∀", 1},   {"=-ref", 0}, {"=-eqv", 0}, {"S-fnc", 0}, {"+-fnc", 0},
        {"·-fnc", 0}, {"<-rel", 0}, {"S-pos", 0}, {"S-inj", 0}, {"+-0", 0},  {"+-S", 0},   {"·-0", 0},
        {"·-S", 0},  {"ind", 1},
    };
    return t;
}

template <class T>
const T& get(const Bindings& b, const char* k) {
    auto it = b.find(k);
    if (it == b.end()) throw RuleError(std::string("missing binding ") + k);
    if (auto p = std::get_if<T>(&it->second)) return *p;
    throw RuleError(std::string("binding ") + k + " has the wrong kind");
}

Formula F(const Bindings& b, const char* k) { return get<Formula>(b, k); }
Term T(const Bindings& b, const char* k) { return get<Term>(b, k); }
std::string V(const Bindings& b, const char* k) { return get<std::string>(b, k); }

using FL = std::vector<Formula>;

FL cat(const FL& a, const FL& b) {
    FL out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

FL front(const Formula& f, const FL& rest) {
    FL out{f};
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

FL back(const FL& rest, const Formula& f) {
    FL out = rest;
    out.push_back(f);
    return out;
}

Formula eq(const Term& a, const Term& b) { return Formula::eq(a, b); }

}  // namespace

std::vector<std::string> lk_rule_ids() {
    std::vector<std::string> out;
    for (auto& [k, v] : arity_table()) out.push_back(k);
    return out;
}

MetaKind lk_meta_kind(const std::string& key) {
    if (key == "A") return MetaKind::Formula;
    if (key == "x" || key == "y" || key == "i") return MetaKind::Var;
    return MetaKind::Term;
}

LkInstance lk_instantiate(const std::string& rule, const Bindings& b, const std::vector<LkSequent>& prem) {
    auto it = arity_table().find(rule);
    if (it == arity_table().end()) throw RuleError("unknown rule " + rule);
    if (prem.size() != it->second)
        throw RuleError(rule + ": expected " + std::to_string(it->second) + " premises, got " +
                        std::to_string(prem.size()));
    LkInstance in;
    auto side = [&](const std::string& m) { in.side_errors.push_back(rule + ": " + m); };
    auto bad = [&](const std::string& m) { in.premise_errors.push_back(rule + ": " + m); };
    auto set = [&](FL a, FL c) { in.conclusion = {std::move(a), std::move(c)}; };
    // last antecedent formula / first succedent formula of premise i
    auto last = [&](std::size_t i, const char* what) -> const Formula* {
        if (prem[i].ante.empty()) {
            bad(std::string("premise has an empty antecedent, needs ") + what);
            return nullptr;
        }
        return &prem[i].ante.back();
    };
    auto first = [&](std::size_t i, const char* what) -> const Formula* {
        if (prem[i].cons.empty()) {
            bad(std::string("premise has an empty succedent, needs ") + what);
            return nullptr;
        }
        return &prem[i].cons.front();
    };
    auto init = [&](std::size_t i) { return FL(prem[i].ante.begin(), prem[i].ante.end() - 1); };
    auto tail = [&](std::size_t i) { return FL(prem[i].cons.begin() + 1, prem[i].cons.end()); };
    auto expect = [&](const Formula* got, const Formula& want) {
        if (got && !(*got == want)) bad("active formula is " + to_string(*got) + ", expected " + to_string(want));
        return got && *got == want;
    };
    auto free_in = [](const std::string& y, const FL& fs) {
        for (auto& f : fs)
            if (occurs_free(y, f)) return true;
        return false;
    };

    try {
        if (rule == "Ax") {
            Formula a = F(b, "A");
            set({a}, {a});
        } else if (rule == "Ex⇒" || rule == "⇒Ex") {
            std::size_t i = std::stoul(V(b, "i"));
            FL l = prem[0].ante, r = prem[0].cons;
            FL& side_list = rule == "Ex⇒" ? l : r;
            if (i + 1 >= side_list.size())
                bad("position " + std::to_string(i) + " out of range");
            else
                std::swap(side_list[i], side_list[i + 1]);
            set(l, r);
        } else if (rule == "W⇒") {
            set(back(prem[0].ante, F(b, "A")), prem[0].cons);
        } else if (rule == "⇒W") {
            set(prem[0].ante, front(F(b, "A"), prem[0].cons));
        } else if (rule == "C⇒") {
            const FL& l = prem[0].ante;
            if (l.size() < 2 || !(l[l.size() - 1] == l[l.size() - 2]))
                bad("last two antecedent formulas differ");
            else
                set(FL(l.begin(), l.end() - 1), prem[0].cons);
        } else if (rule == "⇒C") {
            const FL& r = prem[0].cons;
            if (r.size() < 2 || !(r[0] == r[1]))
                bad("first two succedent formulas differ");
            else
                set(prem[0].ante, FL(r.begin() + 1, r.end()));
        } else if (rule == "Cut") {
            Formula a = F(b, "A");
            bool ok = expect(first(0, "the cut formula"), a);
            ok = expect(last(1, "the cut formula"), a) && ok;
            if (ok) set(cat(prem[0].ante, init(1)), cat(tail(0), prem[1].cons));
        } else if (rule == "⇒⊤") {
            set({}, {Formula::top()});
        } else if (rule == "⊥⇒") {
            set({Formula::bot()}, {});
        } else if (rule == "¬⇒") {
            if (auto a = first(0, "the negated formula")) set(back(prem[0].ante, Formula::neg(*a)), tail(0));
        } else if (rule == "⇒¬") {
            if (auto a = last(0, "the negated formula")) set(init(0), front(Formula::neg(*a), prem[0].cons));
        } else if (rule == "∧⇒L" || rule == "∧⇒R") {
            Formula a = F(b, "A");
            if (!a.is(K::And)) throw RuleError(rule + ": A is not a conjunction");
            if (expect(last(0, "a conjunct"), rule == "∧⇒L" ? a.left() : a.right())) set(back(init(0), a), prem[0].cons);
        } else if (rule == "⇒∨L" || rule == "⇒∨R") {
            Formula a = F(b, "A");
            if (!a.is(K::Or)) throw RuleError(rule + ": A is not a disjunction");
            if (expect(first(0, "a disjunct"), rule == "⇒∨L" ? a.left() : a.right())) set(prem[0].ante, front(a, tail(0)));
        } else if (rule == "⇒∧") {
            auto a = first(0, "a conjunct");
            auto c = first(1, "a conjunct");
            if (a && c) set(cat(prem[0].ante, prem[1].ante), front(Formula::conj(*a, *c), cat(tail(0), tail(1))));
        } else if (rule == "∨⇒") {
            auto a = last(0, "a disjunct");
            auto c = last(1, "a disjunct");
            if (a && c) set(back(cat(init(0), init(1)), Formula::disj(*a, *c)), cat(prem[0].cons, prem[1].cons));
        } else if (rule == "→⇒") {
            auto a = first(0, "the antecedent");
            auto c = last(1, "the consequent");
            if (a && c) set(back(cat(prem[0].ante, init(1)), Formula::imp(*a, *c)), cat(tail(0), prem[1].cons));
        } else if (rule == "⇒→") {
            auto a = last(0, "the antecedent");
            auto c = first(0, "the consequent");
            if (a && c) set(init(0), front(Formula::imp(*a, *c), tail(0)));
        } else if (rule == "∃⇒" || rule == "⇒∀") {
            Formula a = F(b, "A");
            std::string y = V(b, "y");
            bool ex = rule == "∃⇒";
            if (!a.is(ex ? K::Exists : K::Forall)) throw RuleError(rule + ": A has the wrong quantifier");
            Formula inst = substitute(a.body(), a.var(), Term::var(y));
            if (ex) {
                if (expect(last(0, "the instance"), inst)) {
                    if (free_in(y, init(0)) || free_in(y, prem[0].cons) || occurs_free(y, a))
                        side("eigenvariable " + y + " is free in the conclusion");
                    set(back(init(0), a), prem[0].cons);
                }
            } else if (expect(first(0, "the instance"), inst)) {
                if (free_in(y, prem[0].ante) || free_in(y, tail(0)) || occurs_free(y, a))
                    side("eigenvariable " + y + " is free in the conclusion");
                set(prem[0].ante, front(a, tail(0)));
            }
        } else if (rule == "⇒∃" || rule == "∀⇒") {
            Formula a = F(b, "A");
            Term t = T(b, "t");
            bool ex = rule == "⇒∃";
            if (!a.is(ex ? K::Exists : K::Forall)) throw RuleError(rule + ": A has the wrong quantifier");
            Formula inst = substitute(a.body(), a.var(), t);
            if (ex) {
                if (expect(first(0, "the instance"), inst)) set(prem[0].ante, front(a, tail(0)));
            } else if (expect(last(0, "the instance"), inst)) {
                set(back(init(0), a), prem[0].cons);
            }
        } else if (rule == "ind") {
            Formula a = F(b, "A");
            std::string x = V(b, "x");
            Term t = T(b, "t");
            Term vx = Term::var(x);
            bool ok = expect(last(0, "the induction hypothesis"), a);
            ok = expect(first(0, "the induction step"), substitute(a, x, Term::succ(vx))) && ok;
            if (ok) {
                if (free_in(x, init(0)) || free_in(x, tail(0))) side(x + " is free in the context");
                set(back(init(0), substitute(a, x, Term::zero())), front(substitute(a, x, t), tail(0)));
            }
        } else {
            // equality and arithmetical axioms
            auto s = [&] { return T(b, "s"); };
            auto t = [&] { return T(b, "t"); };
            auto s2 = [&] { return T(b, "s'"); };
            auto t2 = [&] { return T(b, "t'"); };
            if (rule == "=-ref") {
                set({}, {eq(s(), s())});
            } else if (rule == "=-eqv") {
                set({eq(s(), t()), eq(s2(), t2()), eq(s(), s2())}, {eq(t(), t2())});
            } else if (rule == "S-fnc") {
                set({eq(s(), t())}, {eq(Term::succ(s()), Term::succ(t()))});
            } else if (rule == "+-fnc") {
                set({eq(s(), t()), eq(s2(), t2())}, {eq(Term::add(s(), s2()), Term::add(t(), t2()))});
            } else if (rule == "·-fnc") {
                set({eq(s(), t()), eq(s2(), t2())}, {eq(Term::mul(s(), s2()), Term::mul(t(), t2()))});
            } else if (rule == "<-rel") {
                set({eq(s(), t()), eq(s2(), t2()), Formula::lt(s(), s2())}, {Formula::lt(t(), t2())});
            } else if (rule == "S-pos") {
                set({eq(Term::succ(s()), Term::zero())}, {});
            } else if (rule == "S-inj") {
                set({eq(Term::succ(s()), Term::succ(t()))}, {eq(s(), t())});
            } else if (rule == "+-0") {
                set({}, {eq(Term::add(s(), Term::zero()), s())});
            } else if (rule == "+-S") {
                set({}, {eq(Term::add(s(), Term::succ(t())), Term::succ(Term::add(s(), t())))});
            } else if (rule == "·-0") {
                set({}, {eq(Term::mul(s(), Term::zero()), Term::zero())});
            } else if (rule == "·-S") {
                set({}, {eq(Term::mul(s(), Term::succ(t())), Term::add(Term::mul(s(), t()), s()))});
            }
        }
    } catch (const CaptureViolation& e) {
        side(e.variable + " is captured by " + e.binder);
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const RuleError*>(&e)) throw;
        throw RuleError(rule + ": " + e.what());
    }
    return in;
}

}  // namespace bakit
