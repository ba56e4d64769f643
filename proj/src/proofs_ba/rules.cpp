#include <algorithm>

#include "bakit/proofs_ba.hpp"

namespace bakit {

using MK = MetaKind;

TheoryPack TheoryPack::ba() { return {}; }

TheoryPack TheoryPack::ba_u() {
    TheoryPack t;
    t.name = "BA+U";
    t.extra.emplace_back("U", parse_sequent("x + z = y + z => x = y"));
    return t;
}

TheoryPack TheoryPack::ba_c() {
    TheoryPack t;
    t.name = "BA_c";
    t.lang = Language::Lc;
    t.monus_axioms = true;
    return t;
}

TheoryPack TheoryPack::eba() {
    TheoryPack t;
    t.name = "EBA";
    t.extra.emplace_back("EBA", parse_sequent("(T -> F) => F"));
    return t;
}

TheoryPack TheoryPack::by_name(const std::string& n) {
    if (n == "ba") return ba();
    if (n == "ba-u") return ba_u();
    if (n == "ba-c") return ba_c();
    if (n == "eba") return eba();
    throw RuleError("unknown theory " + n);
}

TheoryPack TheoryPack::with(const std::string& axiom, const Sequent& s) const {
    TheoryPack t = *this;
    t.name += "+" + axiom;
    t.extra.emplace_back(axiom, s);
    return t;
}

namespace {

const std::map<std::string, RuleSig>& table() {
    static const std::map<std::string, RuleSig> t = {
        {"BQC-Ax1", {{{"A", MK::Formula}}, 0}},
        {"BQC-Ax2", {{{"A", MK::Formula}}, 0}},
        {"BQC-Ax3", {{{"A", MK::Formula}}, 0}},
        {"BQC-Ax4", {{{"A", MK::Formula}, {"B", MK::Formula}, {"C", MK::Formula}}, 0}},
        {"BQC-Ax5", {{{"A", MK::Formula}, {"B", MK::Formula}, {"x", MK::Var}}, 0}},
        {"BQC-Ax6", {{{"x", MK::Var}}, 0}},
        {"BQC-Ax7", {{{"x", MK::Var}, {"y", MK::Var}, {"A", MK::Formula}}, 0}},
        {"BQC-Ax8", {{{"xs", MK::Vars}, {"A", MK::Formula}, {"B", MK::Formula}, {"C", MK::Formula}}, 0}},
        {"BQC-Ax9", {{{"xs", MK::Vars}, {"A", MK::Formula}, {"B", MK::Formula}, {"C", MK::Formula}}, 0}},
        {"BQC-Ax10", {{{"xs", MK::Vars}, {"A", MK::Formula}, {"B", MK::Formula}, {"C", MK::Formula}}, 0}},
        {"BQC-Ax11", {{{"xs", MK::Vars}, {"ts", MK::Terms}, {"A", MK::Formula}, {"B", MK::Formula}}, 0}},
        {"BQC-Ax12", {{{"xs", MK::Vars}, {"ys", MK::Vars}, {"A", MK::Formula}, {"B", MK::Formula}}, 0}},
        {"BQC-Ax13", {{{"ys", MK::Vars}, {"x", MK::Var}, {"A", MK::Formula}, {"B", MK::Formula}}, 0}},
        {"BQC-R14", {{{"A", MK::Formula}, {"B", MK::Formula}, {"C", MK::Formula}}, 2}},
        {"BQC-R15", {{{"A", MK::Formula}, {"B", MK::Formula}, {"C", MK::Formula}}, 2}},
        {"BQC-R15rev", {{{"A", MK::Formula}, {"B", MK::Formula}, {"C", MK::Formula}, {"i", MK::Var}}, 1}},
        {"BQC-R16", {{{"A", MK::Formula}, {"B", MK::Formula}, {"C", MK::Formula}}, 2}},
        {"BQC-R16rev", {{{"A", MK::Formula}, {"B", MK::Formula}, {"C", MK::Formula}, {"i", MK::Var}}, 1}},
        {"BQC-R17", {{{"A", MK::Formula}, {"B", MK::Formula}, {"xs", MK::Vars}, {"ts", MK::Terms}}, 1}},
        {"BQC-R18", {{{"B", MK::Formula}, {"A", MK::Formula}, {"x", MK::Var}}, 1}},
        {"BQC-R18rev", {{{"B", MK::Formula}, {"A", MK::Formula}, {"x", MK::Var}}, 1}},
        {"BQC-R19", {{{"A", MK::Formula}, {"B", MK::Formula}, {"C", MK::Formula}, {"xs", MK::Vars}}, 1}},
        {"BA-Ax1", {{{"x", MK::Var}}, 0}},
        {"BA-Ax2", {{{"x", MK::Var}, {"y", MK::Var}}, 0}},
        {"BA-Ax3", {{{"x", MK::Var}}, 0}},
        {"BA-Ax4", {{{"x", MK::Var}, {"y", MK::Var}}, 0}},
        {"BA-Ax5", {{{"x", MK::Var}}, 0}},
        {"BA-Ax6", {{{"x", MK::Var}, {"y", MK::Var}}, 0}},
        {"BA-Ax7", {{{"ys", MK::Vars}, {"x", MK::Var}, {"A", MK::Formula}}, 0}},
        {"BA-IndRule", {{{"A", MK::Formula}, {"x", MK::Var}}, 1}},
        {"BA-LtDef", {{{"x", MK::Var}, {"y", MK::Var}, {"z", MK::Var}}, 0}},
        {"BA-LtDefRev", {{{"x", MK::Var}, {"y", MK::Var}, {"z", MK::Var}}, 0}},
        {"BAc-MonusLe", {{{"x", MK::Var}, {"y", MK::Var}}, 0}},
        {"BAc-MonusGt", {{{"x", MK::Var}, {"y", MK::Var}}, 0}},
    };
    return t;
}

bool is_theory_rule(const std::string& r) { return r.rfind("Theory(", 0) == 0 && r.back() == ')'; }

template <class T>
const T& get(const Bindings& b, const std::string& k) {
    auto it = b.find(k);
    if (it == b.end()) throw RuleError("missing binding " + k);
    if (auto p = std::get_if<T>(&it->second)) return *p;
    throw RuleError("binding " + k + " has the wrong kind");
}

Formula F(const Bindings& b, const char* k) { return get<Formula>(b, k); }
std::string V(const Bindings& b, const char* k) { return get<std::string>(b, k); }
std::vector<std::string> VS(const Bindings& b, const char* k) { return get<std::vector<std::string>>(b, k); }
Term TV(const std::string& x) { return Term::var(x); }

std::vector<std::string> plus(std::vector<std::string> v, const std::string& x) {
    v.push_back(x);
    return v;
}

VarSet bound_of(const Sequent& s) {
    VarSet b = bound_vars(s.ante);
    for (auto& v : bound_vars(s.cons)) b.insert(v);
    return b;
}

std::string list(const VarSet& s) {
    std::string out;
    for (auto& v : s) out += (out.empty() ? "" : ",") + v;
    return out;
}

}  // namespace

std::vector<std::string> rule_ids() {
    std::vector<std::string> out;
    for (auto& [k, v] : table()) out.push_back(k);
    return out;
}

const RuleSig& rule_signature(const std::string& rule) {
    static const RuleSig theory_sig{{}, 0};
    if (is_theory_rule(rule)) return theory_sig;
    auto it = table().find(rule);
    if (it == table().end()) throw RuleError("unknown rule " + rule);
    return it->second;
}

Instance instantiate(const std::string& rule, const Bindings& b, const TheoryPack& t, const CheckOptions& o) {
    rule_signature(rule);
    Instance in{{}, {Formula::top(), Formula::top()}, {}};
    auto side = [&](const std::string& m) { in.side_errors.push_back(m); };
    auto seq = [](Formula a, Formula c) { return Sequent{std::move(a), std::move(c)}; };
    try {
        if (is_theory_rule(rule)) {
            std::string name = rule.substr(7, rule.size() - 8);
            for (auto& [n, s] : t.extra)
                if (n == name) {
                    in.conclusion = s;
                    return in;
                }
            throw RuleError("axiom " + name + " is not in theory " + t.name);
        }
        if (rule == "BQC-Ax1") {
            in.conclusion = seq(F(b, "A"), F(b, "A"));
        } else if (rule == "BQC-Ax2") {
            in.conclusion = seq(F(b, "A"), Formula::top());
        } else if (rule == "BQC-Ax3") {
            in.conclusion = seq(Formula::bot(), F(b, "A"));
        } else if (rule == "BQC-Ax4") {
            Formula a = F(b, "A"), bb = F(b, "B"), c = F(b, "C");
            in.conclusion = seq(Formula::conj(a, Formula::disj(bb, c)),
                                Formula::disj(Formula::conj(a, bb), Formula::conj(a, c)));
        } else if (rule == "BQC-Ax5") {
            Formula a = F(b, "A"), bb = F(b, "B");
            std::string x = V(b, "x");
            if (occurs_free(x, a)) side("Ax5: " + x + " is free in A");
            in.conclusion = seq(Formula::conj(a, Formula::exists(x, bb)), Formula::exists(x, Formula::conj(a, bb)));
        } else if (rule == "BQC-Ax6") {
            Term x = TV(V(b, "x"));
            in.conclusion = seq(Formula::top(), Formula::eq(x, x));
        } else if (rule == "BQC-Ax7") {
            std::string x = V(b, "x"), y = V(b, "y");
            Formula a = F(b, "A");
            if (!a.is_atomic()) side("Ax7: A is not atomic");
            if (o.strict_atomic && a.is(Formula::Kind::Lt)) side("Ax7: order atom under strict atomicity");
            in.conclusion = seq(Formula::conj(Formula::eq(TV(x), TV(y)), a),
                                a.is_atomic() ? substitute(a, x, TV(y)) : a);
        } else if (rule == "BQC-Ax8" || rule == "BQC-Ax9" || rule == "BQC-Ax10") {
            auto xs = VS(b, "xs");
            Formula a = F(b, "A"), bb = F(b, "B"), c = F(b, "C");
            auto blk = [&](Formula p, Formula q) { return Formula::block(xs, std::move(p), std::move(q)); };
            if (rule == "BQC-Ax8")
                in.conclusion = seq(Formula::conj(blk(a, bb), blk(bb, c)), blk(a, c));
            else if (rule == "BQC-Ax9")
                in.conclusion = seq(Formula::conj(blk(a, bb), blk(a, c)), blk(a, Formula::conj(bb, c)));
            else
                in.conclusion = seq(Formula::conj(blk(bb, a), blk(c, a)), blk(Formula::disj(bb, c), a));
        } else if (rule == "BQC-Ax11") {
            auto xs = VS(b, "xs");
            auto ts = get<std::vector<Term>>(b, "ts");
            Formula a = F(b, "A"), bb = F(b, "B");
            if (xs.size() != ts.size()) throw RuleError("Ax11: xs and ts differ in length");
            VarSet bound = bound_vars(a);
            for (auto& v : bound_vars(bb)) bound.insert(v);
            Substitution s;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                s.emplace_back(xs[i], ts[i]);
                for (auto& v : vars_of(ts[i]))
                    if (bound.count(v)) side("Ax11: " + v + " is bound in A or B");
            }
            Formula lhs = Formula::block(xs, a, bb);
            if (in.side_errors.empty())
                in.conclusion = seq(lhs, Formula::block(xs, substitute(a, s), substitute(bb, s)));
        } else if (rule == "BQC-Ax12") {
            auto xs = VS(b, "xs"), ys = VS(b, "ys");
            Formula lhs = Formula::block(xs, F(b, "A"), F(b, "B"));
            for (auto& y : ys)
                if (occurs_free(y, lhs)) side("Ax12: " + y + " is free on the left");
            in.conclusion = seq(lhs, Formula::block(ys, F(b, "A"), F(b, "B")));
        } else if (rule == "BQC-Ax13") {
            auto ys = VS(b, "ys");
            std::string x = V(b, "x");
            Formula a = F(b, "A"), bb = F(b, "B");
            if (occurs_free(x, a)) side("Ax13: " + x + " is free in A");
            in.conclusion = seq(Formula::block(plus(ys, x), bb, a), Formula::block(ys, Formula::exists(x, bb), a));
        } else if (rule == "BQC-R14") {
            Formula a = F(b, "A"), bb = F(b, "B"), c = F(b, "C");
            in.premises = {seq(a, bb), seq(bb, c)};
            in.conclusion = seq(a, c);
        } else if (rule == "BQC-R15") {
            Formula a = F(b, "A"), bb = F(b, "B"), c = F(b, "C");
            in.premises = {seq(a, bb), seq(a, c)};
            in.conclusion = seq(a, Formula::conj(bb, c));
        } else if (rule == "BQC-R15rev") {
            Formula a = F(b, "A"), bb = F(b, "B"), c = F(b, "C");
            std::string i = V(b, "i");
            if (i != "1" && i != "2") throw RuleError("R15rev: i must be 1 or 2");
            in.premises = {seq(a, Formula::conj(bb, c))};
            in.conclusion = seq(a, i == "1" ? bb : c);
        } else if (rule == "BQC-R16") {
            Formula a = F(b, "A"), bb = F(b, "B"), c = F(b, "C");
            in.premises = {seq(bb, a), seq(c, a)};
            in.conclusion = seq(Formula::disj(bb, c), a);
        } else if (rule == "BQC-R16rev") {
            Formula a = F(b, "A"), bb = F(b, "B"), c = F(b, "C");
            std::string i = V(b, "i");
            if (i != "1" && i != "2") throw RuleError("R16rev: i must be 1 or 2");
            in.premises = {seq(Formula::disj(bb, c), a)};
            in.conclusion = seq(i == "1" ? bb : c, a);
        } else if (rule == "BQC-R17") {
            Formula a = F(b, "A"), bb = F(b, "B");
            auto xs = VS(b, "xs");
            auto ts = get<std::vector<Term>>(b, "ts");
            if (xs.size() != ts.size()) throw RuleError("R17: xs and ts differ in length");
            Substitution s;
            for (std::size_t i = 0; i < xs.size(); ++i) s.emplace_back(xs[i], ts[i]);
            in.premises = {seq(a, bb)};
            try {
                in.conclusion = seq(substitute(a, s), substitute(bb, s));
                VarSet bound = bound_of(in.conclusion);
                for (auto& t2 : ts)
                    for (auto& v : vars_of(t2))
                        if (bound.count(v)) side("R17: " + v + " is bound in the conclusion");
            } catch (const CaptureViolation& e) {
                side("R17: " + e.variable + " is captured by " + e.binder);
            }
        } else if (rule == "BQC-R18" || rule == "BQC-R18rev") {
            Formula bb = F(b, "B"), a = F(b, "A");
            std::string x = V(b, "x");
            if (occurs_free(x, a)) side("R18: " + x + " is free in A");
            Sequent lo = seq(bb, a), hi = seq(Formula::exists(x, bb), a);
            in.premises = {rule == "BQC-R18" ? lo : hi};
            in.conclusion = rule == "BQC-R18" ? hi : lo;
        } else if (rule == "BQC-R19") {
            Formula a = F(b, "A"), bb = F(b, "B"), c = F(b, "C");
            auto xs = VS(b, "xs");
            VarSet bad;
            for (auto& x : xs)
                if (occurs_free(x, a)) bad.insert(x);
            if (!bad.empty()) side("R19: " + list(bad) + " free in A");
            in.premises = {seq(Formula::conj(a, bb), c)};
            in.conclusion = seq(a, Formula::block(xs, bb, c));
        } else if (rule == "BA-Ax1") {
            in.conclusion = seq(Formula::eq(Term::succ(TV(V(b, "x"))), Term::zero()), Formula::bot());
        } else if (rule == "BA-Ax2") {
            Term x = TV(V(b, "x")), y = TV(V(b, "y"));
            in.conclusion = seq(Formula::eq(Term::succ(x), Term::succ(y)), Formula::eq(x, y));
        } else if (rule == "BA-Ax3") {
            Term x = TV(V(b, "x"));
            in.conclusion = seq(Formula::top(), Formula::eq(Term::add(x, Term::zero()), x));
        } else if (rule == "BA-Ax4") {
            Term x = TV(V(b, "x")), y = TV(V(b, "y"));
            in.conclusion = seq(Formula::top(), Formula::eq(Term::add(x, Term::succ(y)), Term::succ(Term::add(x, y))));
        } else if (rule == "BA-Ax5") {
            Term x = TV(V(b, "x"));
            in.conclusion = seq(Formula::top(), Formula::eq(Term::mul(x, Term::zero()), Term::zero()));
        } else if (rule == "BA-Ax6") {
            Term x = TV(V(b, "x")), y = TV(V(b, "y"));
            in.conclusion =
                seq(Formula::top(), Formula::eq(Term::mul(x, Term::succ(y)), Term::add(Term::mul(x, y), x)));
        } else if (rule == "BA-Ax7") {
            auto ys = VS(b, "ys");
            std::string x = V(b, "x");
            Formula a = F(b, "A");
            auto all = plus(ys, x);
            in.conclusion = seq(Formula::block(all, a, substitute(a, x, Term::succ(TV(x)))),
                                Formula::block(all, substitute(a, x, Term::zero()), a));
        } else if (rule == "BA-IndRule") {
            Formula a = F(b, "A");
            std::string x = V(b, "x");
            in.premises = {seq(a, substitute(a, x, Term::succ(TV(x))))};
            in.conclusion = seq(substitute(a, x, Term::zero()), a);
        } else if (rule == "BA-LtDef" || rule == "BA-LtDefRev") {
            std::string x = V(b, "x"), y = V(b, "y"), z = V(b, "z");
            if (z == x || z == y) side("LtDef: " + z + " must differ from x and y");
            Formula lt = Formula::lt(TV(x), TV(y));
            Formula ex = Formula::exists(z, Formula::eq(Term::add(TV(x), Term::succ(TV(z))), TV(y)));
            in.conclusion = rule == "BA-LtDef" ? seq(lt, ex) : seq(ex, lt);
        } else if (rule == "BAc-MonusLe" || rule == "BAc-MonusGt") {
            if (!t.monus_axioms) throw RuleError("cut-off axioms are not in theory " + t.name);
            Term x = TV(V(b, "x")), y = TV(V(b, "y"));
            if (rule == "BAc-MonusLe")
                in.conclusion = seq(le(x, y), Formula::eq(Term::monus(x, y), Term::zero()));
            else
                in.conclusion =
                    seq(le(y, x), Formula::eq(Term::monus(Term::succ(x), y), Term::succ(Term::monus(x, y))));
        }
    } catch (const CaptureViolation& e) {
        side(rule + ": " + e.variable + " is captured by " + e.binder);
    } catch (const RuleError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw RuleError(rule + ": " + e.what());
    }
    return in;
}

}  // namespace bakit
