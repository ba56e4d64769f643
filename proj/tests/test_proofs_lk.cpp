#include <chrono>
#include <fstream>

#include "doctest.h"
#include "json.hpp"

#include "bakit/proofs_lk.hpp"
#include "support/oracle.hpp"
#include "support/proof_gen.hpp"

using namespace bakit;

namespace {

Formula P(const std::string& s) { return parse_formula(s, Language::Lc, Dialect::Classical); }
Term T(const std::string& s) { return parse_term(s, Language::Lc); }
LkSequent S(const std::string& s) { return parse_lk_sequent(s); }
std::string fx(const std::string& f) { return std::string(BAKIT_FIXTURE_DIR) + "/lk/" + f; }

struct Entry {
    std::string file;
    ClassPredicate cls;
    LkProof proof;
};

std::vector<Entry> corpus() {
    std::ifstream in(fx("index.json"));
    nlohmann::json idx = nlohmann::json::parse(in);
    std::vector<Entry> out;
    for (auto& e : idx) out.push_back({e["file"], ClassPredicate::by_name(e["class"]), load_lk_proof(fx(e["file"]))});
    return out;
}

LkSequent conclusion_of(const std::string& rule, const Bindings& b, const std::vector<LkSequent>& prem) {
    LkInstance in = lk_instantiate(rule, b, prem);
    REQUIRE(in.premise_errors.empty());
    return in.conclusion;
}

bool kinds_include(const LkReport& r, const std::string& kind) {
    for (auto& d : r.diagnostics)
        if (d.kind == kind) return true;
    return false;
}

bool all_positive(const LkSequent& s) {
    for (auto* l : {&s.ante, &s.cons})
        for (auto& f : *l)
            if (!is_positive(f)) return false;
    return true;
}

void check_eliminated(const LkProof& p, const ClassPredicate& cls) {
    LkProof q = eliminate_cuts_outside(p, cls);
    LkReport r = check_lk(q, cls);
    INFO(r.summary());
    CHECK(r.ok());
    CHECK(q.conclusion == p.conclusion);
    for (auto& c : cut_formulas(q)) CHECK(cls(c));
}

// every assignment from 0..2 to x, y, z satisfies the sequent classically
bool valid_small(const LkSequent& s) {
    for (std::uint64_t a = 0; a < 3; ++a)
        for (std::uint64_t b = 0; b < 3; ++b)
            for (std::uint64_t c = 0; c < 3; ++c) {
                oracle::Env env{{"x", {false, a}}, {"y", {false, b}}, {"z", {false, c}}};
                bool ante = true, cons = false;
                for (auto& f : s.ante) ante = ante && oracle::truth(f, env, 24);
                for (auto& f : s.cons) cons = cons || oracle::truth(f, env, 24);
                if (ante && !cons) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("rule conclusions follow the premises") {
    LkSequent l = S("x = 0 => x = 0, y = 0");
    LkSequent r = S("z = 0, y = 0 => z = 0");
    CHECK(conclusion_of("→⇒", {}, {l, r}) == S("x = 0, z = 0, (x = 0 -> y = 0) => y = 0, z = 0"));
    CHECK(conclusion_of("Cut", {{"A", P("x = 0")}}, {l, S("x = 0 => x = 0")}) == S("x = 0 => y = 0, x = 0"));
    CHECK(conclusion_of("+-fnc", {{"s", T("x")}, {"t", T("y")}, {"s'", T("z")}, {"t'", T("0")}}, {}) ==
          S("x = y, z = 0 => x + z = y + 0"));
    CHECK(conclusion_of("<-rel", {{"s", T("x")}, {"t", T("y")}, {"s'", T("z")}, {"t'", T("0")}}, {}) ==
          S("x = y, z = 0, x < z => y < 0"));
    CHECK(conclusion_of("W⇒", {{"A", P("T")}}, {l}) == S("x = 0, T => x = 0, y = 0"));
    CHECK(conclusion_of("⇒C", {}, {S("=> y = 0, y = 0, x = 0")}) == S("=> y = 0, x = 0"));
    CHECK(conclusion_of("Ex⇒", {{"i", std::string("0")}}, {r}) == S("y = 0, z = 0 => z = 0"));
    CHECK(conclusion_of("ind", {{"A", P("0 + x = x")}, {"x", std::string("x")}, {"t", T("S y")}},
                        {S("0 + x = x => 0 + Sx = Sx")}) == S("0 + 0 = 0 => 0 + Sy = Sy"));
    CHECK(conclusion_of("∃⇒", {{"A", P("E u. u = y")}, {"y", std::string("a")}}, {S("a = y => y = y")}) ==
          S("E u. u = y => y = y"));
    CHECK(lk_rule_ids().size() == 37);
}

TEST_CASE("checker diagnostics") {
    LkProof ax = lk::ax(P("x = 0"));
    LkProof bad = ax;
    bad.conclusion = S("x = 0 => y = 0");
    CHECK(kinds_include(check_lk(bad, ClassPredicate::pos()), "mismatch"));

    // eigenvariable free in the context
    LkProof eig{S("x = x, E u. u = x => x = x"), "∃⇒", {{"A", P("E u. u = x")}, {"y", std::string("x")}},
                {lk_node("W⇒", {{"A", P("x = x")}}, {lk::ax(P("x = x"))})}};
    eig.premises[0] = adapt(lk::ax(P("x = x")), S("x = x, x = x => x = x"));
    CHECK(kinds_include(check_lk(eig, ClassPredicate::pos()), "side-condition"));

    LkProof wrong_arity{S("=> x = x"), "=-ref", {{"s", T("x")}}, {ax}};
    CHECK(kinds_include(check_lk(wrong_arity, ClassPredicate::pos()), "arity"));
    LkProof unbound{S("=> x = x"), "=-ref", {}, {}};
    CHECK(kinds_include(check_lk(unbound, ClassPredicate::pos()), "binding"));
    LkProof shape{S("x = 0 => x = 0"), "C⇒", {}, {ax}};
    CHECK(kinds_include(check_lk(shape, ClassPredicate::pos()), "premise"));

    // induction formula outside the class
    Formula a = P("~(x = Sx)");
    LkProof prem = lk_node("⇒W", {{"A", P("~(Sx = SSx)")}}, {lk_node("W⇒", {{"A", a}}, {lk::axiom("=-ref", {T("0")})})});
    LkProof ind = lk::ind(prem, a, "x", T("x"));
    CHECK(kinds_include(check_lk(ind, ClassPredicate::pos()), "class"));
    CHECK(check_lk(ind, ClassPredicate::open()).ok());
}

TEST_CASE("adapt and substitution") {
    LkProof p = lk::axiom("S-fnc", {T("x"), T("y")});
    LkSequent target = S("z = 0, x = y, x = y => S0 = 0, Sx = Sy");
    LkProof q = adapt(p, target);
    CHECK(q.conclusion == target);
    CHECK(check_lk(q, ClassPredicate::pos()).ok());
    CHECK(fits(S("x = y => Sx = Sy"), target));
    CHECK_FALSE(fits(S("x = 0 => Sx = Sy"), target));
    CHECK_THROWS_AS(adapt(p, S("=> Sx = Sy")), std::invalid_argument);

    // the eigenvariable a is renamed away from the substituted term
    Formula ex = P("E u. u = x");
    LkProof e = lk::ex_l(lk::ex_r(adapt(lk::ax(P("a = x")), S("a = x => a = x")), P("E v. v = x"), T("a")), ex, "a");
    REQUIRE(e.conclusion == S("E u. u = x => E v. v = x"));
    LkProof s = subst_proof(e, "x", T("a + S0"));
    CHECK(check_lk(s, ClassPredicate::pos()).ok());
    CHECK(s.conclusion == S("E u. u = a + S0 => E v. v = a + S0"));
    CHECK(std::get<std::string>(s.bind.at("y")) != "a");
}

TEST_CASE("JSON round trip") {
    for (auto& e : corpus()) {
        LkProof back = lk_proof_from_json(lk_proof_to_json(e.proof));
        CHECK(lk_proof_to_json(back) == lk_proof_to_json(e.proof));
        CHECK(check_lk(back, e.cls).ok());
    }
    CHECK_THROWS_AS(lk_proof_from_json("{\"rule\": 3}"), RuleError);
}

TEST_CASE("fixture corpus") {
    auto c = corpus();
    REQUIRE(c.size() >= 10);
    std::size_t outside = 0;
    for (auto& e : c) {
        INFO(e.file);
        LkReport r = check_lk(e.proof, e.cls);
        INFO(r.summary());
        CHECK(r.ok());
        for (auto& f : cut_formulas(e.proof)) outside += !e.cls(f);
    }
    CHECK(outside >= 10);
}

TEST_CASE("cut elimination on the fixtures") {
    auto start = std::chrono::steady_clock::now();
    for (auto& e : corpus()) {
        INFO(e.file);
        check_eliminated(e.proof, e.cls);
    }
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(30));
}

TEST_CASE("cut elimination examples") {
    // [DERIVED] a double negation detour on an axiom collapses to the axiom
    LkProof dn = load_lk_proof(fx("double_neg_cut.json"));
    CutElimStats st;
    LkProof q = eliminate_cuts_outside(dn, ClassPredicate::pos(), &st);
    CHECK(q.rule == "Ax");
    CHECK(st.eliminated == 1);
    CHECK(st.measure_checks > 0);
    CHECK(st.mix_calls == st.measure_checks + 1);

    // a proof whose cuts are all positive is rebuilt unchanged
    LkProof pos = load_lk_proof(fx("pos_only_cuts.json"));
    CHECK(lk_proof_to_json(eliminate_cuts_outside(pos, ClassPredicate::pos())) == lk_proof_to_json(pos));

    // bounded cuts survive under delta0 but not under pos
    LkProof mixed = load_lk_proof(fx("delta0_mixed.json"));
    LkProof d0 = eliminate_cuts_outside(mixed, ClassPredicate::delta0());
    CHECK(cut_formulas(d0).size() == 1);
    CHECK(cut_formulas(eliminate_cuts_outside(mixed, ClassPredicate::any())).size() == 2);
    CHECK(cut_formulas(eliminate_cuts_outside(mixed, ClassPredicate::pos())).empty());

    LkProof broken = dn;
    broken.conclusion = S("=> x = x");
    CHECK_THROWS_AS(eliminate_cuts_outside(broken, ClassPredicate::pos()), std::invalid_argument);
}

TEST_CASE("translation of positive proofs into BA") {
    CHECK(ba_to_lk(parse_sequent("T => x = 0", Language::Lc)) == S("=> x = 0"));
    CHECK(lk_to_ba_sequent(S("x = 0, y = 0 => z = 0, T")) == parse_sequent("x = 0 & y = 0 => z = 0 | T", Language::Lc));
    CHECK(lk_to_ba_sequent(S("=>")) == parse_sequent("T => F", Language::Lc));
    std::size_t translated = 0;
    for (auto& e : corpus()) {
        LkProof q = eliminate_cuts_outside(e.proof, ClassPredicate::pos());
        bool pos = true;
        for (auto& f : lk_all_formulas(q)) pos = pos && is_positive(f);
        if (!pos) continue;
        INFO(e.file);
        BaProof b = lk_pos_to_ba(q);
        CheckReport r = check_proof(b, TheoryPack::ba());
        INFO(r.summary());
        CHECK(r.ok());
        CHECK(b.conclusion == lk_to_ba_sequent(q.conclusion));
        ++translated;
    }
    CHECK(translated >= 10);
    CHECK_THROWS_AS(lk_pos_to_ba(load_lk_proof(fx("double_neg_cut.json"))), std::invalid_argument);
}

TEST_CASE("random proofs") {
    testgen::Gen g;
    std::set<std::string> seen;
    std::size_t translated = 0;
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < 200; ++i) {
        LkProof p = testgen::random_lk_proof(g);
        REQUIRE(lk_node_count(p) <= 25);
        REQUIRE(all_positive(p.conclusion));
        for (auto& r : lk_rules_used(p)) seen.insert(r);
        INFO(lk_proof_to_json(p));
        CHECK(valid_small(p.conclusion));
        LkProof q = eliminate_cuts_outside(p, ClassPredicate::pos());
        CHECK(check_lk(q, ClassPredicate::pos()).ok());
        CHECK(q.conclusion == p.conclusion);
        for (auto& c : cut_formulas(q)) CHECK(is_positive(c));
        bool pos = true;
        for (auto& f : lk_all_formulas(q)) pos = pos && is_positive(f);
        if (pos) {
            BaProof b = lk_pos_to_ba(q);
            CHECK(check_proof(b, TheoryPack::ba()).ok());
            ++translated;
        }
    }
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(30));
    CHECK(translated >= 100);
    for (auto r : {"¬⇒", "⇒¬", "→⇒", "⇒→", "∀⇒", "⇒∀", "⇒∃", "∨⇒", "⇒∧"}) CHECK(seen.count(r));
}
