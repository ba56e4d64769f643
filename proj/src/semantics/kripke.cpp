#include <algorithm>

#include "bakit/semantics.hpp"

namespace bakit {

const KripkeNode& KripkeModel::node(int id) const {
    for (auto& n : nodes)
        if (n.id == id) return n;
    throw EvalError("no node " + std::to_string(id));
}

bool KripkeModel::precedes(int a, int b) const {
    if (a == b) return node(a).reflexive;
    return edges.count({a, b}) > 0;
}

std::vector<int> KripkeModel::strict_successors(int id) const {
    std::vector<int> out;
    if (node(id).reflexive) out.push_back(id);
    for (auto& [a, b] : edges)
        if (a == id && b != id) out.push_back(b);
    return out;
}

std::vector<int> KripkeModel::weak_successors(int id) const {
    std::vector<int> out{id};
    for (auto& [a, b] : edges)
        if (a == id && b != id) out.push_back(b);
    return out;
}

KripkeModel make_Kstar() {
    KripkeModel m;
    m.nodes.push_back({0, false, StructureSpec::n_star()});
    return m;
}

KripkeModel add_root(const KripkeModel& m, bool reflexive) {
    KripkeModel r = m;
    int id = 0;
    for (auto& n : m.nodes) id = std::max(id, n.id + 1);
    r.nodes.push_back({id, reflexive, StructureSpec::std_n()});
    for (auto& n : m.nodes) r.edges.insert({id, n.id});
    // transitive closure
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<int, int>> add;
        for (auto& [a, b] : r.edges)
            for (auto& [c, d] : r.edges)
                if (b == c && a != d && !r.edges.count({a, d})) add.emplace_back(a, d);
        for (auto& e : add) changed = r.edges.insert(e).second || changed;
    }
    return r;
}

namespace {

std::vector<ElementId> sample_of(const StructureSpec& s, std::uint64_t n) {
    if (s.kind == StructureSpec::Kind::Finite) return s.table.carrier;
    std::vector<ElementId> out;
    for (std::uint64_t i = 0; i <= n; ++i) out.push_back(ElementId::nat(i));
    if (s.kind == StructureSpec::Kind::NStar) out.push_back(ElementId::infinity());
    return out;
}

std::string edge_name(int a, int b) { return std::to_string(a) + "<" + std::to_string(b); }

bool related(const KripkeModel& m, int a, int b) { return m.precedes(a, b); }

}  // namespace

ModelReport validate_model(const KripkeModel& m, std::uint64_t sample) {
    ModelReport rep;
    std::vector<int> ids;
    for (auto& n : m.nodes) ids.push_back(n.id);
    for (int a : ids)
        for (int b : ids)
            for (int c : ids)
                if (related(m, a, b) && related(m, b, c) && !related(m, a, c))
                    rep.transitivity.push_back(edge_name(a, b) + " and " + edge_name(b, c) + " but not " +
                                               edge_name(a, c));

    for (auto& [a, b] : m.edges) {
        if (a == b) continue;
        const StructureSpec& lo = m.node(a).structure;
        const StructureSpec& hi = m.node(b).structure;
        auto xs = sample_of(lo, sample);
        bool dom_ok = true;
        for (auto& x : xs)
            if (!hi.contains(x)) {
                rep.monotonicity.push_back(edge_name(a, b) + ": " + to_string(x) + " missing above");
                dom_ok = false;
                break;
            }
        if (lo.kind == StructureSpec::Kind::StdN && hi.kind == StructureSpec::Kind::Finite) dom_ok = false;
        if (!dom_ok) continue;
        Term vx = Term::var("x"), vy = Term::var("y");
        std::vector<Term> terms{Term::succ(vx), Term::add(vx, vy), Term::mul(vx, vy)};
        if (lo.monus_enabled && hi.monus_enabled) terms.push_back(Term::monus(vx, vy));
        for (auto& x : xs) {
            for (auto& y : xs) {
                Assignment asg{{"x", x}, {"y", y}};
                std::string at = "(" + to_string(x) + "," + to_string(y) + ")";
                for (auto& t : terms) {
                    try {
                        if (eval_term(lo, t, asg) != eval_term(hi, t, asg))
                            rep.persistence.push_back(edge_name(a, b) + ": " + to_string(t) + " differs at " + at);
                    } catch (const EvalError&) {
                    }
                }
                Formula lt = Formula::lt(vx, vy);
                try {
                    if (eval_atom(lo, lt, asg) && !eval_atom(hi, lt, asg))
                        rep.persistence.push_back(edge_name(a, b) + ": x<y lost at " + at);
                } catch (const EvalError&) {
                }
            }
        }
    }
    return rep;
}

std::string to_string(OverspillReport::Outcome o) {
    switch (o) {
    case OverspillReport::Outcome::Pass: return "PASS";
    case OverspillReport::Outcome::Fail: return "FAIL";
    case OverspillReport::Outcome::Unknown: return "Unknown";
    default: return "hypothesis not met";
    }
}

OverspillReport overspill_check(const Formula& f, std::uint64_t sample_range, const EvalBound& b) {
    if (!is_positive(f)) throw std::invalid_argument("overspill needs a positive formula");
    VarSet fv = free_vars(f);
    if (fv.size() != 1) throw std::invalid_argument("overspill needs exactly one free variable");
    const std::string x = *fv.begin();
    StructureSpec ns = StructureSpec::n_star();
    OverspillReport rep;
    for (std::uint64_t n = 0; n <= sample_range; ++n) {
        if (!sat(ns, f, {{x, ElementId::nat(n)}}, b).is_true()) {
            rep.outcome = OverspillReport::Outcome::HypothesisNotMet;
            rep.failing_sample = n;
            return rep;
        }
    }
    EvalBound bi = b;
    bi.include_inf = true;
    Verdict v = sat_verdict(ns, f, {{x, ElementId::infinity()}}, bi);
    rep.witness = v.evidence;
    if (v.truth.is_true())
        rep.outcome = OverspillReport::Outcome::Pass;
    else if (v.truth.is_false())
        rep.outcome = OverspillReport::Outcome::Fail;
    else
        rep.outcome = OverspillReport::Outcome::Unknown;
    return rep;
}

}  // namespace bakit
