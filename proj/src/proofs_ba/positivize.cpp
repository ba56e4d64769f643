#include "bakit/proofs_ba.hpp"
#include "bakit/transforms.hpp"

namespace bakit {

namespace {

bool block_rule(const std::string& r) {
    return r == "BQC-Ax8" || r == "BQC-Ax9" || r == "BQC-Ax10" || r == "BQC-Ax11" || r == "BQC-Ax12" ||
           r == "BQC-Ax13" || r == "BA-Ax7";
}

Bindings map_formulas(const Bindings& b, Formula (*fn)(const Formula&)) {
    Bindings out = b;
    for (auto& [k, v] : out)
        if (auto f = std::get_if<Formula>(&v)) v = fn(*f);
    return out;
}

void require(const BaProof& p, const TheoryPack& t) {
    for (auto& [n, s] : t.extra)
        if (!is_positive(s.ante) || !is_positive(s.cons))
            throw std::invalid_argument("theory axiom " + n + " is not positive");
    CheckReport r = check_proof(p, t);
    if (!r.ok()) throw std::invalid_argument("input proof does not check:\n" + r.summary());
}

BaProof pos(const BaProof& p, const TheoryPack& t) {
    if (block_rule(p.rule) || p.rule == "BQC-R19") return tac::ax2(positive_part(p.conclusion.ante));
    std::vector<BaProof> prem;
    for (auto& q : p.premises) prem.push_back(pos(q, t));
    return make_node(p.rule, map_formulas(p.bind, positive_part), std::move(prem), t);
}

BaProof semi(const BaProof& p, const TheoryPack& t) {
    if (p.rule == "BQC-R19") {
        const Bindings& b = p.bind;
        BaProof q = pos(p.premises[0], t);
        BaProof r = make_node("BQC-R19", map_formulas(b, positive_part), {q}, t);
        return tac::cut(synth_semipos_to_pos(std::get<Formula>(b.at("A"))), r);
    }
    if (block_rule(p.rule)) return make_node(p.rule, map_formulas(p.bind, positive_part), {}, t);
    std::vector<BaProof> prem;
    for (auto& q : p.premises) prem.push_back(semi(q, t));
    return make_node(p.rule, map_formulas(p.bind, semi_positive_part), std::move(prem), t);
}

// proof of lhs(A) => A^E, where lhs is A itself or its semi-positive part
BaProof synth(const Formula& a, Formula (*lhs)(const Formula&)) {
    using K = Formula::Kind;
    Formula l = lhs(a);
    Formula r = positive_part(a);
    if (l == r) return tac::ax1(l);
    switch (a.kind()) {
    case K::And: {
        BaProof all = tac::ax1(l);
        return tac::pair(tac::cut(tac::left(all), synth(a.left(), lhs)),
                         tac::cut(tac::right(all), synth(a.right(), lhs)));
    }
    case K::Or: {
        Formula b = positive_part(a.left()), c = positive_part(a.right());
        return tac::cases(tac::cut(synth(a.left(), lhs), tac::inj1(b, c)),
                          tac::cut(synth(a.right(), lhs), tac::inj2(b, c)));
    }
    case K::Exists: {
        const std::string& x = a.var();
        Formula b = positive_part(a.body());
        BaProof up = make_node("BQC-R18rev", {{"B", b}, {"A", r}, {"x", x}}, {tac::ax1(r)});
        BaProof inner = tac::cut(synth(a.body(), lhs), up);
        return make_node("BQC-R18", {{"B", lhs(a.body())}, {"A", r}, {"x", x}}, {inner});
    }
    default: return tac::ax2(l);
    }
}

Formula identity(const Formula& f) { return f; }

}  // namespace

BaProof positivize_proof(const BaProof& p, const TheoryPack& t) {
    require(p, t);
    return pos(p, t);
}

BaProof semi_positivize_proof(const BaProof& p, const TheoryPack& t) {
    require(p, t);
    return semi(p, t);
}

BaProof synth_pos_upper(const Formula& a) { return synth(a, identity); }
BaProof synth_semipos_to_pos(const Formula& a) { return synth(a, semi_positive_part); }

}  // namespace bakit
