#include <functional>

#include "bakit/semantics.hpp"

namespace bakit {

using K = Formula::Kind;

namespace {

struct Frame {
    std::vector<int> ids;
    std::vector<const StructureSpec*> st;
    std::vector<std::vector<int>> strict;  // indices
    std::vector<std::vector<int>> weak;
};

Frame frame_of(const KripkeModel& m) {
    Frame fr;
    std::map<int, int> index;
    for (std::size_t i = 0; i < m.nodes.size(); ++i) {
        index[m.nodes[i].id] = static_cast<int>(i);
        fr.ids.push_back(m.nodes[i].id);
        fr.st.push_back(&m.nodes[i].structure);
    }
    fr.strict.resize(m.nodes.size());
    fr.weak.resize(m.nodes.size());
    for (std::size_t i = 0; i < m.nodes.size(); ++i) {
        fr.weak[i].push_back(static_cast<int>(i));
        if (m.nodes[i].reflexive) fr.strict[i].push_back(static_cast<int>(i));
    }
    for (auto& [a, b] : m.edges) {
        if (a == b) continue;
        int ia = index.at(a), ib = index.at(b);
        fr.strict[ia].push_back(ib);
        fr.weak[ia].push_back(ib);
    }
    return fr;
}

Frame single(const StructureSpec& s) {
    Frame fr;
    fr.ids = {0};
    fr.st = {&s};
    fr.strict = {{0}};
    fr.weak = {{0}};
    return fr;
}

struct Candidates {
    std::vector<ElementId> elems;
    bool exhaustive = false;
};

Verdict yes() { return {Truth3::yes(), std::nullopt, false}; }
Verdict no() { return {Truth3::no(), std::nullopt, false}; }

void merge_into(Evidence& into, const std::optional<Evidence>& ev) {
    if (!ev) return;
    for (auto& [k, v] : ev->asg) into.asg[k] = v;
    into.node = ev->node;
}

class Forcer {
public:
    Forcer(Frame fr, const EvalBound& b) : fr_(std::move(fr)), b_(b) {}

    int index_of(int id) const {
        for (std::size_t i = 0; i < fr_.ids.size(); ++i)
            if (fr_.ids[i] == id) return static_cast<int>(i);
        throw EvalError("no node " + std::to_string(id));
    }

    Candidates cands(int k) const {
        Candidates c;
        const StructureSpec& s = *fr_.st[k];
        if (s.kind == StructureSpec::Kind::Finite) {
            c.elems = s.table.carrier;
            c.exhaustive = true;
            return c;
        }
        for (std::uint64_t i = 0; i <= b_.witness_bound; ++i) c.elems.push_back(ElementId::nat(i));
        if (s.kind == StructureSpec::Kind::NStar && b_.include_inf) c.elems.push_back(ElementId::infinity());
        return c;
    }

    // exact range for a guard x < s when s evaluates to a natural in an infinite carrier
    bool bounded_range(int k, const Term& bound, const Assignment& asg, Candidates& out) const {
        const StructureSpec& s = *fr_.st[k];
        if (s.kind == StructureSpec::Kind::Finite) return false;
        ElementId v = eval_term(s, bound, asg);
        if (v.inf) return false;
        out.elems.clear();
        for (std::uint64_t i = 0; i < v.n; ++i) out.elems.push_back(ElementId::nat(i));
        out.exhaustive = true;
        return true;
    }

    Verdict atom(int k, const Formula& f, const Assignment& asg) const {
        return eval_atom(*fr_.st[k], f, asg) ? yes() : no();
    }

    Verdict closed(int k, const Formula& f, const Assignment& asg) const {
        switch (f.kind()) {
        case K::Top:
        case K::Bot:
        case K::Eq:
        case K::Lt: return atom(k, f, asg);
        case K::And: {
            Verdict a = closed(k, f.left(), asg);
            if (a.truth.is_false()) return a;
            Verdict b = closed(k, f.right(), asg);
            if (b.truth.is_false()) return b;
            if (a.truth.is_true() && b.truth.is_true()) {
                Verdict r = yes();
                if (a.evidence || b.evidence) {
                    Evidence e{fr_.ids[k], {}};
                    merge_into(e, a.evidence);
                    merge_into(e, b.evidence);
                    r.evidence = e;
                }
                return r;
            }
            return {Truth3::unknown(std::max(a.truth.bound, b.truth.bound)), std::nullopt, false};
        }
        case K::Or: {
            Verdict a = closed(k, f.left(), asg);
            if (a.truth.is_true()) return a;
            Verdict b = closed(k, f.right(), asg);
            if (b.truth.is_true()) return b;
            if (a.truth.is_false() && b.truth.is_false()) return no();
            return {Truth3::unknown(std::max(a.truth.bound, b.truth.bound)), std::nullopt, false};
        }
        case K::Exists: return exists(k, f, asg);
        case K::Block: return block(k, f.vars(), f.left(), f.right(), asg, bounded_var(f));
        case K::Imp: return block(k, {}, f.left(), f.right(), asg, nullptr);
        case K::Neg: return block(k, {}, f.body(), Formula::bot(), asg, nullptr);
        case K::Forall: {
            std::string x;
            Term bound = Term::zero();
            Formula body = Formula::top();
            if (bounded_forall_parts(f, x, bound, body))
                return block(k, {x}, f.body().left(), body, asg, &f.body().left());
            return block(k, {f.var()}, Formula::top(), f.body(), asg, nullptr);
        }
        }
        throw EvalError("bad formula");
    }

    Verdict exists(int k, const Formula& f, const Assignment& asg) const {
        const std::string& x = f.var();
        Candidates cs;
        std::string bx;
        Term bound = Term::zero();
        Formula bbody = Formula::top();
        if (!(bounded_exists_parts(f, bx, bound, bbody) && bounded_range(k, bound, asg, cs))) cs = cands(k);
        bool unknown = !cs.exhaustive;
        Assignment a = asg;
        for (auto& c : cs.elems) {
            a[x] = c;
            Verdict r = closed(k, f.body(), a);
            if (r.truth.is_true()) {
                Evidence e{fr_.ids[k], a};
                merge_into(e, r.evidence);
                e.node = fr_.ids[k];
                return {Truth3::yes(), e, false};
            }
            if (r.truth.is_unknown()) unknown = true;
        }
        if (unknown) return {Truth3::unknown(b_.witness_bound), std::nullopt, false};
        return no();
    }

    static const Formula* bounded_var(const Formula& f) {
        std::string x;
        Term bound = Term::zero();
        Formula body = Formula::top();
        if (bounded_forall_parts(f, x, bound, body)) return &f.left();
        return nullptr;
    }

    // for all strict successors and tuples: ante forced implies cons forced
    Verdict block(int k, const std::vector<std::string>& xs, const Formula& ante, const Formula& cons,
                  const Assignment& asg, const Formula* guard) const {
        bool unknown = false;
        for (int k2 : fr_.strict[k]) {
            Candidates cs;
            if (!(guard && bounded_range(k2, guard->rterm(), asg, cs))) cs = cands(k2);
            if (!xs.empty() && !cs.exhaustive) unknown = true;
            Assignment a = asg;
            std::optional<Verdict> bad;
            std::function<void(std::size_t)> go = [&](std::size_t i) {
                if (bad) return;
                if (i == xs.size()) {
                    Verdict p = closed(k2, ante, a);
                    if (p.truth.is_false()) return;
                    Verdict q = closed(k2, cons, a);
                    if (q.truth.is_true()) return;
                    if (p.truth.is_true() && q.truth.is_false()) {
                        Evidence e{fr_.ids[k2], a};
                        merge_into(e, p.evidence);
                        e.node = fr_.ids[k2];
                        bad = Verdict{Truth3::no(), e, false};
                        return;
                    }
                    unknown = true;
                    return;
                }
                for (auto& c : cs.elems) {
                    a[xs[i]] = c;
                    go(i + 1);
                    if (bad) return;
                }
                a.erase(xs[i]);
            };
            go(0);
            if (bad) return *bad;
        }
        if (unknown) return {Truth3::unknown(b_.witness_bound), std::nullopt, false};
        return yes();
    }

    // universal closure over k' >= k of the free variables not in asg
    template <class Body>
    Verdict closure(int k, const VarSet& free, const Assignment& asg, Body body) const {
        std::vector<std::string> xs;
        for (auto& v : free)
            if (!asg.count(v)) xs.push_back(v);
        bool unknown = false;
        bool sampled = false;
        std::size_t evaluated = 0;
        std::optional<Evidence> last;
        for (int k2 : fr_.weak[k]) {
            Candidates cs = cands(k2);
            if (!xs.empty() && !cs.exhaustive) sampled = true;
            Assignment a = asg;
            std::optional<Verdict> bad;
            std::function<void(std::size_t)> go = [&](std::size_t i) {
                if (bad) return;
                if (i == xs.size()) {
                    Verdict r = body(k2, a);
                    ++evaluated;
                    last = r.evidence;
                    if (r.truth.is_false()) {
                        Evidence e{fr_.ids[k2], a};
                        merge_into(e, r.evidence);
                        bad = Verdict{Truth3::no(), e, false};
                    } else if (r.truth.is_unknown()) {
                        unknown = true;
                    }
                    return;
                }
                for (auto& c : cs.elems) {
                    a[xs[i]] = c;
                    go(i + 1);
                    if (bad) return;
                }
            };
            go(0);
            if (bad) return *bad;
        }
        if (unknown) return {Truth3::unknown(b_.witness_bound), std::nullopt, sampled};
        // a witness is only meaningful when a single instance was checked
        return {Truth3::yes(), evaluated == 1 ? last : std::nullopt, sampled};
    }

    Verdict sequent_at(int k, const Formula& ante, const Formula& cons, const Assignment& a) const {
        Verdict p = closed(k, ante, a);
        if (p.truth.is_false()) return yes();
        Verdict q = closed(k, cons, a);
        if (q.truth.is_true()) return yes();
        if (p.truth.is_true() && q.truth.is_false()) {
            Verdict r = no();
            if (p.evidence || q.evidence) {
                Evidence e{fr_.ids[k], a};
                merge_into(e, p.evidence);
                merge_into(e, q.evidence);
                r.evidence = e;
            }
            return r;
        }
        return {Truth3::unknown(b_.witness_bound), std::nullopt, false};
    }

    Verdict sequent(int k, const Sequent& s) const {
        VarSet free = free_vars(s);
        return closure(k, free, {}, [&](int k2, const Assignment& a) { return sequent_at(k2, s.ante, s.cons, a); });
    }

    const Frame& frame() const { return fr_; }

private:
    Frame fr_;
    EvalBound b_;
};

}  // namespace

Verdict sat_verdict(const StructureSpec& s, const Formula& f, const Assignment& asg, const EvalBound& b) {
    Forcer fc(single(s), b);
    return fc.closure(0, free_vars(f), asg, [&](int k, const Assignment& a) { return fc.closed(k, f, a); });
}

Truth3 sat(const StructureSpec& s, const Formula& f, const Assignment& asg, const EvalBound& b) {
    return sat_verdict(s, f, asg, b).truth;
}

Verdict force(const KripkeModel& m, int k, const Formula& f, const Assignment& asg, const EvalBound& b) {
    Forcer fc(frame_of(m), b);
    int i = fc.index_of(k);
    return fc.closure(i, free_vars(f), asg, [&](int k2, const Assignment& a) { return fc.closed(k2, f, a); });
}

Verdict force_sequent(const KripkeModel& m, int k, const Sequent& s, const EvalBound& b) {
    Forcer fc(frame_of(m), b);
    return fc.sequent(fc.index_of(k), s);
}

Verdict force_rule(const KripkeModel& m, int k, const std::vector<Sequent>& premises, const Sequent& concl,
                   const EvalBound& b) {
    Forcer fc(frame_of(m), b);
    int i = fc.index_of(k);
    bool unknown = false;
    bool sampled = false;
    for (int k2 : fc.frame().weak[i]) {
        bool all = true;
        bool vacuous = false;
        for (auto& p : premises) {
            Verdict v = fc.sequent(k2, p);
            sampled = sampled || v.params_sampled;
            if (v.truth.is_false()) {
                vacuous = true;
                break;
            }
            if (v.truth.is_unknown()) all = false;
        }
        if (vacuous) continue;
        Verdict c = fc.sequent(k2, concl);
        sampled = sampled || c.params_sampled;
        if (c.truth.is_true()) continue;
        if (all && c.truth.is_false()) return c;
        unknown = true;
    }
    if (unknown) return {Truth3::unknown(b.witness_bound), std::nullopt, sampled};
    return {Truth3::yes(), std::nullopt, sampled};
}

}  // namespace bakit
