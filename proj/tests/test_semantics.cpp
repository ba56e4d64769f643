#include "doctest.h"

#include "bakit/semantics.hpp"
#include "bakit/transforms.hpp"
#include "support/generators.hpp"
#include "support/models.hpp"
#include "support/oracle.hpp"

using namespace bakit;

namespace {

Formula P(const std::string& s) { return parse_formula(s); }
const ElementId kInf = ElementId::infinity();
ElementId N(std::uint64_t n) { return ElementId::nat(n); }

ElementId ev(const std::string& term, const Assignment& a = {}) {
    return eval_term(StructureSpec::n_star(), parse_term(term), a);
}

using testgen::oracle_frame;
using testgen::random_model;

FiniteTable two_point(bool lt01) {
    FiniteTable t;
    t.carrier = {N(0), N(1)};
    for (auto a : t.carrier) {
        t.succ[a] = N(1);
        for (auto b : t.carrier) {
            t.add[{a, b}] = N(std::min<std::uint64_t>(a.n + b.n, 1));
            t.mul[{a, b}] = N(a.n * b.n);
        }
    }
    if (lt01) t.lt.insert({N(0), N(1)});
    return t;
}

}  // namespace

TEST_CASE("extended naturals: defining laws for n <= 64") {
    CHECK(ev("S x", {{"x", kInf}}) == kInf);
    CHECK(ev("x + x", {{"x", kInf}}) == kInf);
    CHECK(ev("x * x", {{"x", kInf}}) == kInf);
    StructureSpec ns = StructureSpec::n_star();
    Assignment inf{{"i", kInf}};
    CHECK(eval_atom(ns, P("i < i"), inf));
    for (std::uint64_t n = 0; n <= 64; ++n) {
        Assignment a{{"i", kInf}, {"n", N(n)}};
        CHECK(ev("0 * i", a) == N(0));
        CHECK(ev("i * 0", a) == N(0));
        CHECK(eval_atom(ns, P("n < i"), a));
        CHECK_FALSE(eval_atom(ns, P("i < n"), a));
        CHECK(ev("n + i", a) == kInf);
        CHECK(ev("i + n", a) == kInf);
        CHECK(ev("S n * i", a) == kInf);
        CHECK(ev("i * S n", a) == kInf);
    }
    CHECK(ev("SSS0 + x", {{"x", kInf}}) == kInf);
    CHECK_THROWS_AS(eval_term(ns, parse_term("x -. 0", Language::Lc), {{"x", N(1)}}), EvalError);
    CHECK(eval_term(StructureSpec::std_n(), parse_term("x -. SS0", Language::Lc), {{"x", N(1)}}) == N(0));
    CHECK_THROWS_AS(ev("x + y", {{"x", N(1)}}), EvalError);
}

TEST_CASE("sat examples") {
    EvalBound b{8, true};
    StructureSpec ns = StructureSpec::n_star();
    CHECK(sat(ns, P("x < x"), {{"x", kInf}}, b).is_true());
    Verdict half = sat_verdict(ns, P("E y. x = y + y"), {{"x", kInf}}, b);
    CHECK(half.truth.is_true());
    REQUIRE(half.evidence);
    CHECK(half.evidence->asg.at("y") == kInf);
    CHECK(sat(StructureSpec::std_n(), P("E y. S0 = y + y"), {}, {8, false}) == Truth3::unknown(8));
    CHECK(sat(StructureSpec::std_n(), P("E y. y < SSS0 & S0 = y + y"), {}, {8, false}).is_false());
    CHECK(sat(StructureSpec::std_n(), P("![y](y < SSS0 -> y * 0 = 0)"), {}, {0, false}).is_true());
}

TEST_CASE("K* forcing examples") {
    KripkeModel ks = make_Kstar();
    EvalBound b{2, true};
    CHECK(ks.nodes.size() == 1);
    CHECK_FALSE(ks.nodes[0].reflexive);
    CHECK(ks.nodes[0].structure.kind == StructureSpec::Kind::NStar);
    CHECK(force(ks, 0, P("![x](T -> x = S x)"), {}, b).truth.is_true());
    CHECK(force(ks, 0, P("(T -> F)"), {}, b).truth.is_true());
    CHECK(validate_model(ks).ok());

    Formula a = P("(x < y & z = 0) | x = y + z");
    CHECK(force(ks, 0, a, {{"x", kInf}, {"y", kInf}, {"z", N(0)}}, b).truth.is_true());
    CHECK(force(ks, 0, a, {{"x", kInf}, {"y", kInf}, {"z", N(1)}}, b).truth.is_true());

    CHECK(force_sequent(ks, 0, parse_sequent("S x = 0 => F"), b).truth.is_true());
    Verdict u = force_sequent(ks, 0, parse_sequent("x + z = y + z => x = y"), b);
    CHECK(u.truth.is_false());
    REQUIRE(u.evidence);
    auto& cex = u.evidence->asg;
    CHECK(cex.at("z") == kInf);
    CHECK(cex.at("x") != cex.at("y"));

    Formula au = substitute(a, "z", Term::var("u"));
    Formula av = substitute(a, "z", Term::var("v"));
    Verdict us = force_sequent(ks, 0, {Formula::conj(au, av), P("u = v")}, b);
    CHECK(us.truth.is_false());
    REQUIRE(us.evidence);
    CHECK(us.evidence->asg.at("x") == kInf);
    CHECK(us.evidence->asg.at("y") == kInf);
}

TEST_CASE("force_rule") {
    KripkeModel ks = make_Kstar();
    EvalBound b{2, true};
    // cancellation as a rule is refuted by the same tuple
    CHECK(force_rule(ks, 0, {}, parse_sequent("x + z = y + z => x = y"), b).truth.is_false());
    // premise false at the node makes the rule vacuous
    CHECK(force_rule(ks, 0, {parse_sequent("T => 0 = S0")}, parse_sequent("T => F"), b).truth.is_true());
    CHECK(force_rule(ks, 0, {parse_sequent("T => 0 = 0")}, parse_sequent("T => F"), b).truth.is_false());
}

TEST_CASE("add_root") {
    KripkeModel two = add_root(make_Kstar(), false);
    REQUIRE(two.nodes.size() == 2);
    int root = two.nodes[1].id;
    CHECK(two.nodes[1].structure.kind == StructureSpec::Kind::StdN);
    CHECK_FALSE(two.nodes[1].reflexive);
    CHECK(two.precedes(root, 0));
    CHECK(validate_model(two).ok());
    KripkeModel one = add_root(KripkeModel{}, true);
    REQUIRE(one.nodes.size() == 1);
    CHECK(one.nodes[0].reflexive);
    CHECK(one.nodes[0].structure.kind == StructureSpec::Kind::StdN);
    KripkeModel three = add_root(two, false);
    CHECK(three.precedes(three.nodes[2].id, 0));
    CHECK(three.precedes(three.nodes[2].id, root));

    EvalBound b{2, true};
    Verdict v = force_sequent(two, root, parse_sequent("T => (E x. x + y = x + z -> y = z)"), b);
    CHECK(v.truth.is_false());
    REQUIRE(v.evidence);
    CHECK(v.evidence->node == 0);
    CHECK(v.evidence->asg.at("x") == kInf);
    CHECK(v.evidence->asg.at("y") != v.evidence->asg.at("z"));
}

TEST_CASE("validate_model negative cases") {
    KripkeModel chain;
    for (int i = 0; i < 3; ++i) chain.nodes.push_back({i, false, StructureSpec::std_n()});
    chain.edges = {{0, 1}, {1, 2}};
    ModelReport r = validate_model(chain);
    CHECK_FALSE(r.transitivity.empty());
    CHECK(r.persistence.empty());

    KripkeModel lt;
    lt.nodes.push_back({0, false, StructureSpec::finite(two_point(true))});
    lt.nodes.push_back({1, false, StructureSpec::finite(two_point(false))});
    lt.edges = {{0, 1}};
    ModelReport r2 = validate_model(lt);
    CHECK(r2.transitivity.empty());
    CHECK_FALSE(r2.persistence.empty());

    KripkeModel down;
    down.nodes.push_back({0, false, StructureSpec::n_star()});
    down.nodes.push_back({1, false, StructureSpec::std_n()});
    down.edges = {{0, 1}};
    CHECK_FALSE(validate_model(down).monotonicity.empty());
}

TEST_CASE("finite tables are searched exhaustively") {
    StructureSpec s = StructureSpec::finite(two_point(true));
    CHECK(sat(s, P("E y. y + y = S0"), {}, {0, false}).is_true());
    CHECK(sat(s, P("E y. S y = 0"), {}, {0, false}).is_false());
    CHECK(sat(s, P("![y](T -> y * 0 = 0)"), {}, {0, false}).is_true());
}

TEST_CASE("overspill examples") {
    EvalBound b{40, true};
    auto r = overspill_check(P("E y. x = y + y | E y. x = y + y + S0"), 64, b);
    CHECK(r.outcome == OverspillReport::Outcome::Pass);
    REQUIRE(r.witness);
    CHECK(r.witness->asg.at("y") == kInf);
    CHECK(overspill_check(P("x = x"), 64, b).outcome == OverspillReport::Outcome::Pass);
    auto h = overspill_check(P("x < SSSSS0"), 64, b);
    CHECK(h.outcome == OverspillReport::Outcome::HypothesisNotMet);
    CHECK(h.failing_sample == 5u);
    CHECK_THROWS(overspill_check(P("(x = 0 -> F)"), 4, b));
    CHECK_THROWS(overspill_check(P("x = y"), 4, b));
}

TEST_CASE("model json round trip") {
    KripkeModel m = add_root(make_Kstar(), true);
    m.nodes.push_back({7, false, StructureSpec::finite(two_point(true))});
    KripkeModel back = model_from_json(model_to_json(m));
    REQUIRE(back.nodes.size() == m.nodes.size());
    CHECK(back.edges == m.edges);
    for (std::size_t i = 0; i < m.nodes.size(); ++i) {
        CHECK(back.nodes[i].id == m.nodes[i].id);
        CHECK(back.nodes[i].reflexive == m.nodes[i].reflexive);
        CHECK(back.nodes[i].structure.kind == m.nodes[i].structure.kind);
    }
    CHECK(back.nodes[2].structure.table.lt == m.nodes[2].structure.table.lt);
    CHECK(back.nodes[2].structure.table.add == m.nodes[2].structure.table.add);
    CHECK_THROWS_AS(model_from_json("{"), EvalError);
    KripkeModel ks = load_model(std::string(BAKIT_MODEL_DIR) + "/kstar.json");
    CHECK(ks.nodes.size() == 1);
}

TEST_CASE("property: bounded verdicts are exact and match enumeration") {
    testgen::Gen g(testgen::kSeed + 20);
    EvalBound b{3, true};
    for (int i = 0; i < 1000; ++i) {
        Formula f = g.delta0(3, {}, 8);
        bool want = oracle::truth(f, {}, 0);
        Truth3 got = sat(StructureSpec::std_n(), f, {}, b);
        REQUIRE_FALSE(got.is_unknown());
        CHECK(got.is_true() == want);
        if (i % 4 == 0) {
            KripkeModel m = random_model(g);
            auto fr = oracle_frame(m);
            for (auto& n : m.nodes) {
                Verdict v = force(m, n.id, f, {}, b);
                REQUIRE_FALSE(v.truth.is_unknown());
                CHECK(v.truth.is_true() == oracle::forces(fr, n.id, f, {}));
            }
        }
    }
}

TEST_CASE("property: positive formulas are forced locally") {
    testgen::Gen g(testgen::kSeed + 21);
    EvalBound b{2, true};
    for (int i = 0; i < 500; ++i) {
        KripkeModel m = random_model(g);
        Formula f = g.positive(3, {});
        for (auto& n : m.nodes) CHECK(force(m, n.id, f, {}, b).truth == sat(n.structure, f, {}, b));
    }
}

TEST_CASE("property: forcing persists along the order") {
    testgen::Gen g(testgen::kSeed + 22);
    EvalBound b{2, true};
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        KripkeModel m = random_model(g);
        REQUIRE(validate_model(m, 8).ok());
        Formula f = g.delta0(3, {}, 5);
        for (auto& [lo, hi] : m.edges) {
            if (force(m, lo, f, {}, b).truth.is_true()) {
                ++checked;
                CHECK(force(m, hi, f, {}, b).truth.is_true());
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("property: K* does not see past positive parts") {
    testgen::Gen g(testgen::kSeed + 23);
    KripkeModel ks = make_Kstar();
    EvalBound b{2, true};
    for (int i = 0; i < 500; ++i) {
        Formula f = g.formula(3, {});
        CHECK(force(ks, 0, f, {}, b).truth == force(ks, 0, positive_part(f), {}, b).truth);
    }
}

TEST_CASE("property: positive sentences true in N hold in N*") {
    testgen::Gen g(testgen::kSeed + 24);
    EvalBound b{6, true};
    int n = 0;
    for (int i = 0; i < 2000 && n < 100; ++i) {
        Formula f = g.positive(3, {});
        if (!sat(StructureSpec::std_n(), f, {}, b).is_true()) continue;
        ++n;
        CHECK(sat(StructureSpec::n_star(), f, {}, b).is_true());
    }
    CHECK(n == 100);
}
