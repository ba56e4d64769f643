#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "bakit/proofs_ba.hpp"
#include "bakit/transforms.hpp"
#include "support/proof_gen.hpp"

using namespace bakit;
using namespace bakit::tac;

namespace {

Formula P(const std::string& s) { return parse_formula(s, Language::Lc); }
Sequent Q(const std::string& s) { return parse_sequent(s, Language::Lc); }
std::string fx(const std::string& f) { return std::string(BAKIT_FIXTURE_DIR) + "/ba/" + f; }

struct Entry {
    std::string file;
    std::string theory;
    BaProof proof;
    std::string graph, out;
};

std::vector<Entry> corpus() {
    std::ifstream in(fx("index.json"));
    nlohmann::json idx = nlohmann::json::parse(in);
    std::vector<Entry> out;
    for (auto& e : idx) {
        Entry x{e["file"], e["theory"], load_ba_proof(fx(e["file"])), "", ""};
        if (e.contains("uniqueness")) {
            x.graph = e["uniqueness"]["graph"];
            x.out = e["uniqueness"]["out"];
        }
        out.push_back(std::move(x));
    }
    return out;
}

const std::set<std::string> kForbidden = {"BQC-Ax8",  "BQC-Ax9",  "BQC-Ax10", "BQC-Ax11",
                                          "BQC-Ax12", "BQC-Ax13", "BQC-R19",  "BA-Ax7"};

bool forbidden_free(const BaProof& p) {
    for (auto& r : rules_used(p))
        if (kForbidden.count(r)) return false;
    return true;
}

bool positive_formula(const Formula& f) { return is_positive(f); }

void check_positivized(const BaProof& p, const TheoryPack& t) {
    BaProof q = positivize_proof(p, t);
    CheckReport r = check_proof(q, t);
    INFO(r.summary());
    CHECK(r.ok());
    CHECK(q.conclusion.ante == positive_part(p.conclusion.ante));
    CHECK(q.conclusion.cons == positive_part(p.conclusion.cons));
    CHECK(forbidden_free(q));
    CHECK(height(q) <= height(p));
    CHECK(all_formulas(q, positive_formula));
}

void check_semi(const BaProof& p, const TheoryPack& t) {
    BaProof q = semi_positivize_proof(p, t);
    CheckReport r = check_proof(q, t);
    INFO(r.summary());
    CHECK(r.ok());
    CHECK(q.conclusion.ante == semi_positive_part(p.conclusion.ante));
    CHECK(q.conclusion.cons == semi_positive_part(p.conclusion.cons));
}

void check_synth(const Formula& a) {
    BaProof up = synth_pos_upper(a);
    CHECK(check_proof(up, TheoryPack::ba_c()).ok());
    CHECK(up.conclusion == Sequent{a, positive_part(a)});
    BaProof sp = synth_semipos_to_pos(a);
    CHECK(check_proof(sp, TheoryPack::ba_c()).ok());
    CHECK(sp.conclusion == Sequent{semi_positive_part(a), positive_part(a)});
}

}  // namespace

TEST_CASE("check: one-node reflexivity") {
    BaProof p = make_node("BQC-Ax6", {{"x", std::string("x")}}, {});
    CHECK(p.conclusion == Q("T => x = x"));
    CHECK(check_proof(p, TheoryPack::ba()).ok());
}

TEST_CASE("check: R19 with the block variable free on the left") {
    BaProof prem = proj1(P("x = 0"), P("y = 0"));
    Bindings b{{"A", P("x = 0")}, {"B", P("y = 0")}, {"C", P("x = 0")}, {"xs", std::vector<std::string>{"x"}}};
    BaProof bad{Q("x = 0 => ![x](y = 0 -> x = 0)"), "BQC-R19", b, {prem}};
    CheckReport r = check_proof(bad, TheoryPack::ba());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].kind == "side-condition");
    CHECK(r.diagnostics[0].path.empty());
    CHECK_THROWS_AS(make_node("BQC-R19", b, {prem}), RuleError);
    b["xs"] = std::vector<std::string>{"y"};
    CHECK(check_proof(make_node("BQC-R19", b, {prem}), TheoryPack::ba()).ok());
}

TEST_CASE("check: induction rule") {
    Formula a = P("x + 0 = x");
    BaProof step = cut(ax2(a), inst(make_node("BA-Ax3", {{"x", std::string("x")}}, {}), "x", parse_term("Sx")));
    BaProof p = make_node("BA-IndRule", {{"A", a}, {"x", std::string("x")}}, {step});
    CHECK(p.conclusion == Q("0 + 0 = 0 => x + 0 = x"));
    CHECK(check_proof(p, TheoryPack::ba()).ok());
}

TEST_CASE("check: diagnostics") {
    BaProof ok = eq_sym(Term::var("x"), Term::var("y"));
    REQUIRE(check_proof(ok, TheoryPack::ba()).ok());

    BaProof m = ok;
    m.conclusion = Q("x = y => x = y");
    auto r = check_proof(m, TheoryPack::ba());
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics[0].kind == "mismatch");

    BaProof deep = ok;
    deep.premises[0].premises[0].conclusion = Q("x = y => y = y");
    r = check_proof(deep, TheoryPack::ba());
    bool saw_premise = false, saw_path = false;
    for (auto& d : r.diagnostics) {
        saw_premise = saw_premise || d.kind == "premise";
        saw_path = saw_path || d.path == std::vector<std::size_t>{0, 0};
    }
    CHECK(saw_premise);
    CHECK(saw_path);

    BaProof ar = ok;
    ar.premises.pop_back();
    CHECK(check_proof(ar, TheoryPack::ba()).diagnostics[0].kind == "arity");

    BaProof u{Q("x + z = y + z => x = y"), "Theory(U)", {}, {}};
    CHECK(check_proof(u, TheoryPack::ba_u()).ok());
    CHECK(check_proof(u, TheoryPack::ba()).diagnostics[0].kind == "theory");

    BaProof mon = make_node("BQC-Ax1", {{"A", P("x -. y = 0")}}, {});
    CHECK(check_proof(mon, TheoryPack::ba_c()).ok());
    CHECK(check_proof(mon, TheoryPack::ba()).diagnostics[0].kind == "language");
    BaProof cut_off = make_node("BAc-MonusLe", {{"x", std::string("x")}, {"y", std::string("y")}}, {});
    CHECK(check_proof(cut_off, TheoryPack::ba_c()).ok());
    CHECK_FALSE(check_proof(cut_off, TheoryPack::ba()).ok());

    BaProof nb{Q("T => x = x"), "BQC-Ax6", {}, {}};
    CHECK(check_proof(nb, TheoryPack::ba()).diagnostics[0].kind == "binding");
    BaProof unknown{Q("T => x = x"), "BQC-Ax99", {}, {}};
    CHECK(check_proof(unknown, TheoryPack::ba()).diagnostics[0].kind == "binding");
}

TEST_CASE("check: equality axiom on order atoms") {
    BaProof p = make_node("BQC-Ax7", {{"x", std::string("a")}, {"y", std::string("b")}, {"A", P("a < c")}}, {});
    CHECK(p.conclusion == Q("a = b & a < c => b < c"));
    CHECK(check_proof(p, TheoryPack::ba()).ok());
    CheckOptions strict;
    strict.strict_atomic = true;
    CHECK(check_proof(p, TheoryPack::ba(), strict).diagnostics[0].kind == "side-condition");
    Bindings nonatomic{{"x", std::string("a")}, {"y", std::string("b")}, {"A", P("a = c & T")}};
    CHECK_THROWS_AS(make_node("BQC-Ax7", nonatomic, {}), RuleError);
}

TEST_CASE("check: substitution side conditions") {
    BaProof w{Q("x = y => E y. x = y"), "BQC-R18rev",
              {{"B", P("x = y")}, {"A", P("E y. x = y")}, {"x", std::string("y")}},
              {ax1(P("E y. x = y"))}};
    REQUIRE(check_proof(w, TheoryPack::ba()).ok());
    Bindings b{{"A", P("x = y")}, {"B", P("E y. x = y")}, {"xs", std::vector<std::string>{"x"}},
               {"ts", std::vector<Term>{Term::succ(Term::var("y"))}}};
    CHECK_THROWS_AS(make_node("BQC-R17", b, {w}), RuleError);
    BaProof a11{Q("T => T"), "BQC-Ax11",
                {{"xs", std::vector<std::string>{"x"}}, {"ts", std::vector<Term>{Term::var("y")}},
                 {"A", P("T")}, {"B", P("E y. x = y")}},
                {}};
    CHECK(check_proof(a11, TheoryPack::ba()).diagnostics[0].kind == "side-condition");
    BaProof a12{Q("T => T"), "BQC-Ax12",
                {{"xs", std::vector<std::string>{}}, {"ys", std::vector<std::string>{"x"}},
                 {"A", P("x = 0")}, {"B", P("T")}},
                {}};
    CHECK(check_proof(a12, TheoryPack::ba()).diagnostics[0].kind == "side-condition");
}

TEST_CASE("fixtures: the bundled corpus checks") {
    auto c = corpus();
    CHECK(c.size() >= 20);
    std::map<std::string, std::string> want = {
        {"cancel_left.json", "T => (y + u = y + v -> u = v)"},
        {"not_lt_self.json", "T => (x < x -> F)"},
        {"cutoff_unique_cond.json", "T => ((x < y & u = 0 | x = y + u) & (x < y & v = 0 | x = y + v) -> u = v)"},
        {"refl.json", "T => x = x"},
    };
    for (auto& e : c) {
        INFO(e.file);
        CheckReport r = check_proof(e.proof, TheoryPack::by_name(e.theory));
        INFO(r.summary());
        CHECK(r.ok());
        if (want.count(e.file)) CHECK(e.proof.conclusion == Q(want[e.file]));
    }
    int induction = 0;
    for (auto& e : c)
        if (rules_used(e.proof).count("BA-IndRule")) ++induction;
    CHECK(induction >= 5);
    for (auto& name : {"cancel_left.json", "not_lt_self.json", "cutoff_unique_cond.json"}) {
        auto it = std::find_if(c.begin(), c.end(), [&](const Entry& e) { return e.file == name; });
        REQUIRE(it != c.end());
        CHECK(rules_used(it->proof).count("BA-IndRule"));
    }
}

TEST_CASE("fixtures: json round trip") {
    for (auto& e : corpus()) {
        BaProof back = ba_proof_from_json(ba_proof_to_json(e.proof));
        CHECK(ba_proof_to_json(back) == ba_proof_to_json(e.proof));
        CHECK(check_proof(back, TheoryPack::by_name(e.theory)).ok());
    }
}

TEST_CASE("positivize: examples") {
    BaProof r19 = make_node("BQC-R19", {{"A", P("T")}, {"B", P("x = 0")}, {"C", P("x = 0")},
                                        {"xs", std::vector<std::string>{}}},
                            {proj2(P("T"), P("x = 0"))});
    BaProof q = positivize_proof(r19, TheoryPack::ba());
    CHECK(q.rule == "BQC-Ax2");
    CHECK(q.conclusion == Q("T => T"));

    BaProof ax = make_node("BA-Ax4", {{"x", std::string("x")}, {"y", std::string("y")}}, {});
    CHECK(ba_proof_to_json(positivize_proof(ax, TheoryPack::ba())) == ba_proof_to_json(ax));

    Formula a = P("x + 0 = x & (x = 0 -> F)");
    BaProof sx = cut(ax2(a), inst(make_node("BA-Ax3", {{"x", std::string("x")}}, {}), "x", parse_term("Sx")));
    BaProof nz = make_node("BQC-R19", {{"A", a}, {"B", P("Sx = 0")}, {"C", P("F")}, {"xs", std::vector<std::string>{}}},
                           {cut(proj2(a, P("Sx = 0")), make_node("BA-Ax1", {{"x", std::string("x")}}, {}))});
    BaProof step = pair(sx, nz);
    BaProof ind = make_node("BA-IndRule", {{"A", a}, {"x", std::string("x")}}, {step});
    BaProof qi = positivize_proof(ind, TheoryPack::ba());
    CHECK(qi.rule == "BA-IndRule");
    CHECK(std::get<Formula>(qi.bind.at("A")) == P("x + 0 = x & T"));
    CHECK(check_proof(qi, TheoryPack::ba()).ok());

    BaProof e{Q("(T -> F) => F"), "Theory(EBA)", {}, {}};
    CHECK_THROWS_AS(positivize_proof(e, TheoryPack::eba()), std::invalid_argument);
    BaProof broken = ax;
    broken.conclusion = Q("T => x = x");
    CHECK_THROWS_AS(positivize_proof(broken, TheoryPack::ba()), std::invalid_argument);
}

TEST_CASE("semi-positivize: examples") {
    Formula neg = P("(x = 0 -> F)");
    BaProof a1 = ax1(P("E y. (x = y & (y = 0 -> F) -> F)"));
    BaProof q1 = semi_positivize_proof(a1, TheoryPack::ba());
    CHECK(q1.rule == "BQC-Ax1");
    CHECK(q1.conclusion == Sequent{P("E y. (x = y & T -> F)"), P("E y. (x = y & T -> F)")});

    BaProof prem = proj2(neg, P("x = 0"));
    BaProof r19 = make_node("BQC-R19", {{"A", neg}, {"B", P("x = 0")}, {"C", P("x = 0")},
                                        {"xs", std::vector<std::string>{}}},
                            {prem});
    BaProof q = semi_positivize_proof(r19, TheoryPack::ba());
    CHECK(q.rule == "BQC-R14");
    CHECK(q.premises[1].rule == "BQC-R19");
    CHECK(check_proof(q, TheoryPack::ba()).ok());
    CHECK(q.conclusion == Sequent{neg, P("(x = 0 -> x = 0)")});

    BaProof u{Q("x + z = y + z => x = y"), "Theory(U)", {}, {}};
    CHECK(ba_proof_to_json(semi_positivize_proof(u, TheoryPack::ba_u())) == ba_proof_to_json(u));
}

TEST_CASE("synthesis: examples") {
    CHECK(synth_pos_upper(P("x = 0")).rule == "BQC-Ax1");
    CHECK(synth_pos_upper(P("(x = 0 -> F)")).rule == "BQC-Ax2");
    BaProof mixed = synth_pos_upper(P("x = 0 & (x = 0 -> F)"));
    CHECK(mixed.conclusion == Q("x = 0 & (x = 0 -> F) => x = 0 & T"));
    CHECK(check_proof(mixed, TheoryPack::ba()).ok());
    auto used = rules_used(mixed);
    CHECK(used.count("BQC-R15"));
    CHECK(used.count("BQC-R15rev"));
    CHECK(used.count("BQC-R14"));
    CHECK(synth_semipos_to_pos(P("x = 0")).rule == "BQC-Ax1");
    BaProof blk = synth_semipos_to_pos(P("![y](E z. (y = z -> F) -> y = 0)"));
    CHECK(blk.rule == "BQC-Ax2");
    CHECK(blk.conclusion == Q("![y](E z. T -> y = 0) => T"));
    BaProof ex = synth_semipos_to_pos(P("E y. (x = y & ![z](z = y -> T))"));
    CHECK(check_proof(ex, TheoryPack::ba()).ok());
    CHECK(rules_used(ex).count("BQC-R18"));
    CHECK(rules_used(ex).count("BQC-R18rev"));
}

TEST_CASE("property: transformations over the fixture corpus") {
    for (auto& e : corpus()) {
        INFO(e.file);
        TheoryPack t = TheoryPack::by_name(e.theory);
        check_positivized(e.proof, t);
        check_semi(e.proof, t);
        check_synth(e.proof.conclusion.ante);
        check_synth(e.proof.conclusion.cons);
    }
}

TEST_CASE("property: uniqueness conditionals through semi-positivization") {
    int seen = 0;
    for (auto& e : corpus()) {
        if (e.graph.empty()) continue;
        ++seen;
        INFO(e.file);
        TheoryPack t = TheoryPack::by_name(e.theory);
        Formula a = parse_formula(e.graph, Language::Lc);
        Formula ae = positive_part(a);
        Term u = Term::var("u"), v = Term::var("v");
        CHECK(e.proof.conclusion ==
              Sequent{Formula::top(), Formula::implies(Formula::conj(substitute(a, e.out, u), substitute(a, e.out, v)),
                                                       Formula::eq(u, v))});
        BaProof q = semi_positivize_proof(e.proof, t);
        CHECK(check_proof(q, t).ok());
        CHECK(q.conclusion ==
              Sequent{Formula::top(), Formula::implies(Formula::conj(substitute(ae, e.out, u), substitute(ae, e.out, v)),
                                                       Formula::eq(u, v))});
    }
    CHECK(seen >= 3);
}

TEST_CASE("property: random checked proofs") {
    testgen::Gen g(testgen::kSeed + 40);
    std::set<std::string> rules;
    for (int i = 0; i < 200; ++i) {
        BaProof p = testgen::random_ba_proof(g, 20);
        REQUIRE(node_count(p) <= 20);
        REQUIRE(check_proof(p, TheoryPack::ba()).ok());
        for (auto& r : rules_used(p)) rules.insert(r);
        INFO(ba_proof_to_json(p));
        check_positivized(p, TheoryPack::ba());
        check_semi(p, TheoryPack::ba());
        check_synth(p.conclusion.ante);
        BaProof back = ba_proof_from_json(ba_proof_to_json(p));
        CHECK(check_proof(back, TheoryPack::ba()).ok());
    }
    for (auto& r : {"BQC-R19", "BQC-R14", "BQC-R17", "BQC-R18", "BA-IndRule", "BQC-Ax8", "BA-Ax7"}) {
        INFO(r);
        CHECK(rules.count(r));
    }
}

TEST_CASE("property: synthesis on random formulas") {
    testgen::Gen g(testgen::kSeed + 41);
    for (int i = 0; i < 300; ++i) check_synth(g.formula(4, {"x", "y"}));
}
