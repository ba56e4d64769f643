#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <stdexcept>

#include "json.hpp"

#include "bakit/harness.hpp"
#include "bakit/proofs_ba.hpp"
#include "bakit/proofs_lk.hpp"
#include "bakit/transforms.hpp"

namespace bakit {

namespace {

const ElementId kInf = ElementId::infinity();
ElementId N(std::uint64_t n) { return ElementId::nat(n); }
Formula P(const std::string& s) { return parse_formula(s); }
Term V(const std::string& n) { return Term::var(n); }

const EvalBound kSmall{2, true};

std::string truth_name(const Truth3& t) {
    if (t.is_true()) return "True";
    if (t.is_false()) return "False";
    return "Unknown";
}

std::vector<std::pair<std::string, std::string>> evidence_of(const Verdict& v) {
    std::vector<std::pair<std::string, std::string>> ev;
    if (!v.evidence) return ev;
    ev.emplace_back("node", std::to_string(v.evidence->node));
    for (auto& [k, e] : v.evidence->asg) ev.emplace_back(k, to_string(e));
    return ev;
}

std::vector<std::pair<std::string, std::string>> show(const Assignment& a) {
    std::vector<std::pair<std::string, std::string>> ev;
    for (auto& [k, e] : a) ev.emplace_back(k, to_string(e));
    return ev;
}

class Builder {
public:
    explicit Builder(std::string name) { r_.name = std::move(name); }

    void truth(const std::string& desc, const Verdict& v, bool want, const std::string& prov,
               std::vector<std::pair<std::string, std::string>> extra = {}) {
        Assertion a;
        a.description = desc;
        a.expected = want ? "True" : "False";
        a.actual = truth_name(v.truth);
        a.unknown = v.truth.is_unknown();
        a.pass = want ? v.truth.is_true() : v.truth.is_false();
        a.provenance = prov;
        a.evidence = evidence_of(v);
        for (auto& e : extra) {
            bool seen = false;
            for (auto& have : a.evidence) seen = seen || have.first == e.first;
            if (!seen) a.evidence.push_back(e);
        }
        r_.assertions.push_back(std::move(a));
    }

    void ok(const std::string& desc, bool good, const std::string& prov,
            std::vector<std::pair<std::string, std::string>> ev = {}, const std::string& detail = "") {
        Assertion a;
        a.description = desc;
        a.expected = "ok";
        a.actual = good ? "ok" : (detail.empty() ? "failed" : detail);
        a.pass = good;
        a.provenance = prov;
        a.evidence = std::move(ev);
        r_.assertions.push_back(std::move(a));
    }

    void add(Assertion a) { r_.assertions.push_back(std::move(a)); }

    ScenarioReport done() { return std::move(r_); }

private:
    ScenarioReport r_;
};

Sequent uniqueness(const Formula& a, const std::string& out) {
    Term u = V("u"), v = V("v");
    return {Formula::conj(substitute(a, out, u), substitute(a, out, v)), Formula::eq(u, v)};
}

ScenarioReport cutoff_uniqueness_failure(const std::string&) {
    const std::string prov = "cut-off is not provably recursive; values by N* evaluation";
    Builder b("cutoff-uniqueness-failure");
    KripkeModel ks = make_Kstar();
    Formula a = P("(x < y & z = 0) | x = y + z");
    Assignment a0{{"x", kInf}, {"y", kInf}, {"z", N(0)}};
    b.truth("K* forces A(inf, inf, 0)", force(ks, 0, a, a0, kSmall), true, prov, show(a0));
    Formula as = substitute(a, "x", Term::succ(V("x")));
    Assignment a1{{"x", kInf}, {"y", kInf}, {"z", N(1)}};
    b.truth("K* forces A(S inf, inf, 1)", force(ks, 0, as, a1, kSmall), true, prov, show(a1));
    Sequent us = uniqueness(a, "z");
    b.truth("K* forces US(A): " + to_string(us), force_sequent(ks, 0, us, kSmall), false, prov);
    Assignment w{{"x", kInf}, {"y", kInf}, {"u", N(0)}, {"v", N(1)}};
    b.truth("antecedent of US(A) at x=y=inf, u=0, v=1", force(ks, 0, us.ante, w, kSmall), true, prov, show(w));
    b.truth("u = v at the same tuple", force(ks, 0, us.cons, w, kSmall), false, prov, show(w));
    return b.done();
}

ScenarioReport even_undecidable(const std::string&) {
    const std::string prov = "Even is not provably recursive; witnesses by N* evaluation";
    Builder b("even-undecidable");
    KripkeModel ks = make_Kstar();
    Formula even = P("((E w. x = w + w) & z = S0) | ((E w. x = w + w + S0) & z = 0)");
    Formula pick = P("(z = 0 & y = 0) | (0 < z & y = S0)");
    Formula bxy = Formula::exists("z", Formula::conj(even, pick));
    Assignment b0{{"x", kInf}, {"y", N(0)}}, b1{{"x", kInf}, {"y", N(1)}};
    b.truth("K* forces B(inf, 0)", force(ks, 0, bxy, b0, kSmall), true, prov, show(b0));
    b.truth("K* forces B(inf, 1)", force(ks, 0, bxy, b1, kSmall), true, prov, show(b1));
    Sequent us = uniqueness(bxy, "y");
    b.truth("K* forces US(B): " + to_string(us), force_sequent(ks, 0, us, kSmall), false, prov);
    return b.done();
}

ScenarioReport prime_divisor_failure(const std::string&) {
    const std::string prov = "primality is not provably decidable; values by N* evaluation";
    Builder b("prime-divisor-failure");
    KripkeModel ks = make_Kstar();
    auto prime = [](const Term& y) {
        Term d = V("d");
        Formula only = Formula::block({"d"}, divides(d, y), Formula::disj(Formula::eq(d, numeral(1)), Formula::eq(d, y)));
        return Formula::conj(only, Formula::lt(numeral(1), y));
    };
    Assignment xi{{"x", kInf}};
    b.truth("K* forces P(inf)", force(ks, 0, prime(V("x")), xi, kSmall), true, prov, show(xi));
    b.truth("K* forces 2 | inf", force(ks, 0, divides(numeral(2), V("x")), xi, kSmall), true, prov, show(xi));
    Sequent s{Formula::conj(prime(V("x")), divides(V("y"), V("x"))),
              Formula::disj(Formula::eq(V("y"), numeral(1)), Formula::eq(V("y"), V("x")))};
    Assignment w{{"x", kInf}, {"y", N(2)}};
    b.truth("antecedent at (x, y) = (inf, 2)", force(ks, 0, s.ante, w, kSmall), true, prov, show(w));
    b.truth("succedent at (x, y) = (inf, 2)", force(ks, 0, s.cons, w, kSmall), false, prov, show(w));
    b.truth("K* forces " + to_string(s), force_sequent(ks, 0, s, kSmall), false, prov);
    return b.done();
}

ScenarioReport cancellation_u_failure(const std::string&) {
    const std::string prov = "cancellation fails in K*; counterexample (0, S0, inf)";
    Builder b("cancellation-U-failure");
    KripkeModel ks = make_Kstar();
    Sequent s = parse_sequent("x + z = y + z => x = y");
    Assignment w{{"x", N(0)}, {"y", N(1)}, {"z", kInf}};
    b.truth("x + z = y + z at (0, S0, inf)", force(ks, 0, s.ante, w, kSmall), true, prov, show(w));
    b.truth("x = y at (0, S0, inf)", force(ks, 0, s.cons, w, kSmall), false, prov, show(w));
    b.truth("K* forces " + to_string(s), force_sequent(ks, 0, s, kSmall), false, prov);
    return b.done();
}

ScenarioReport two_node_cancellation(const std::string&) {
    const std::string prov = "two irreflexive nodes, N below N*; witness x = inf";
    Builder b("two-node-cancellation-conditional");
    KripkeModel m = add_root(make_Kstar(), false);
    int root = m.nodes.back().id;
    b.ok("model validates", validate_model(m).ok(), prov);
    Sequent s = parse_sequent("T => (E x. x + y = x + z -> y = z)");
    Verdict v = force_sequent(m, root, s, kSmall);
    b.truth("root forces " + to_string(s), v, false, prov, {{"root", std::to_string(root)}});
    Assignment w{{"y", N(0)}, {"z", N(1)}};
    b.truth("top node forces E x. x + y = x + z at (0, S0)", force(m, 0, P("E x. x + y = x + z"), w, kSmall), true, prov,
            show(w));
    b.truth("top node forces y = z at (0, S0)", force(m, 0, P("y = z"), w, kSmall), false, prov, show(w));
    return b.done();
}

struct BaEntry {
    std::string file, theory, graph, out;
    BaProof proof;
};

std::vector<BaEntry> ba_corpus(const std::string& dir) {
    std::ifstream in(dir + "/ba/index.json");
    if (!in) throw std::runtime_error("cannot read " + dir + "/ba/index.json");
    nlohmann::json idx = nlohmann::json::parse(in);
    std::vector<BaEntry> out;
    for (auto& e : idx) {
        BaEntry x{e["file"], e["theory"], "", "", load_ba_proof(dir + "/ba/" + e["file"].get<std::string>())};
        if (e.contains("uniqueness")) {
            x.graph = e["uniqueness"]["graph"];
            x.out = e["uniqueness"]["out"];
        }
        out.push_back(std::move(x));
    }
    return out;
}

bool forbidden_free(const BaProof& p) {
    static const std::set<std::string> bad = {"BQC-Ax8",  "BQC-Ax9",  "BQC-Ax10", "BQC-Ax11",
                                              "BQC-Ax12", "BQC-Ax13", "BQC-R19",  "BA-Ax7"};
    for (auto& r : rules_used(p))
        if (bad.count(r)) return false;
    return true;
}

bool positive_formula(const Formula& f) { return is_positive(f); }

ScenarioReport positivize_pipeline(const std::string& dir) {
    const std::string prov = "positivization without the implication axioms; height does not grow";
    Builder b("positivize-pipeline");
    for (auto& e : ba_corpus(dir)) {
        TheoryPack t = TheoryPack::by_name(e.theory);
        CheckReport in = check_proof(e.proof, t);
        b.ok(e.file + ": input checks", in.ok(), prov, {{"theory", e.theory}}, in.summary());
        if (!in.ok()) continue;
        try {
            BaProof q = positivize_proof(e.proof, t);
            CheckReport r = check_proof(q, t);
            bool shape = q.conclusion == Sequent{positive_part(e.proof.conclusion.ante),
                                                 positive_part(e.proof.conclusion.cons)};
            b.ok(e.file + ": positivize checks and proves the positive part", r.ok() && shape, prov,
                 {{"conclusion", to_string(q.conclusion)}}, r.summary());
            b.ok(e.file + ": positivize avoids excluded rules", forbidden_free(q) && all_formulas(q, positive_formula),
                 prov);
            b.ok(e.file + ": height bound", height(q) <= height(e.proof), prov,
                 {{"input", std::to_string(height(e.proof))}, {"output", std::to_string(height(q))}});

            BaProof s = semi_positivize_proof(e.proof, t);
            CheckReport rs = check_proof(s, t);
            bool sshape = s.conclusion == Sequent{semi_positive_part(e.proof.conclusion.ante),
                                                  semi_positive_part(e.proof.conclusion.cons)};
            b.ok(e.file + ": semi-positivize checks", rs.ok() && sshape, prov, {{"conclusion", to_string(s.conclusion)}},
                 rs.summary());

            bool synth = true;
            for (const Formula& f : {e.proof.conclusion.ante, e.proof.conclusion.cons}) {
                BaProof sp = synth_semipos_to_pos(f);
                synth = synth && check_proof(sp, TheoryPack::ba_c()).ok() &&
                        sp.conclusion == Sequent{semi_positive_part(f), positive_part(f)};
            }
            b.ok(e.file + ": semi-positive to positive synthesis checks", synth, prov);

            if (!e.graph.empty()) {
                Formula g = parse_formula(e.graph, Language::Lc);
                Sequent us = uniqueness(positive_part(g), e.out);
                Sequent want{Formula::top(), Formula::implies(us.ante, us.cons)};
                b.ok(e.file + ": uniqueness conditional of the positive part", rs.ok() && s.conclusion == want, prov,
                     {{"conclusion", to_string(s.conclusion)}});
            }
        } catch (const std::exception& ex) {
            b.ok(e.file + ": transformation", false, prov, {}, ex.what());
        }
    }
    return b.done();
}

ScenarioReport totalizer_demo(const std::string&) {
    const std::string prov = "Sigma1 totalizer of a Delta0 graph; checked by enumeration in N";
    Builder b("totalizer-demo");
    StructureSpec n = StructureSpec::std_n();
    struct Case {
        std::string name;
        TotalizerInput in;
        std::function<std::uint64_t(const std::vector<std::uint64_t>&)> fn;
    };
    std::vector<Case> cases = {
        {"cut-off", {P("((x1 < x2 & y = 0) | x1 = x2 + y) & z = z"), {"x1", "x2"}, "y", {"z"}},
         [](const std::vector<std::uint64_t>& a) { return a[0] > a[1] ? a[0] - a[1] : 0; }},
        {"identity", {P("y = x & z = z"), {"x"}, "y", {"z"}}, [](const std::vector<std::uint64_t>& a) { return a[0]; }},
    };
    const std::uint64_t top = 8;
    for (auto& c : cases) {
        TotalizerParts parts = sigma1_totalizer_parts(c.in);
        b.ok(c.name + ": D is Sigma1 with Delta0 parts",
             in_class(parts.D, FormulaClass::SigmaOne) && is_delta0(parts.B) && is_delta0(parts.C) && is_delta0(parts.U),
             prov, {{"D", to_string(parts.D)}});
        Formula body = Formula::disj(parts.B, parts.C);
        // the witness is a dummy, so a short search is exact
        auto holds = [&](Assignment a) {
            for (std::uint64_t w = 0; w <= 2; ++w) {
                a[c.in.zs[0]] = N(w);
                if (sat(n, body, a, {0, false}).is_true()) return true;
            }
            return false;
        };
        std::size_t k = c.in.xs.size();
        std::vector<std::uint64_t> args(k, 0);
        std::size_t agree = 0, total = 0, es = 0, us = 0, tuples = 0;
        std::string first_bad;
        for (;;) {
            Assignment a;
            for (std::size_t i = 0; i < k; ++i) a[c.in.xs[i]] = N(args[i]);
            std::uint64_t want = c.fn(args);
            std::size_t hits = 0;
            for (std::uint64_t y = 0; y <= top; ++y) {
                a[c.in.y] = N(y);
                bool got = holds(a);
                ++total;
                hits += got;
                if (got == (y == want))
                    ++agree;
                else if (first_bad.empty())
                    for (auto& [kk, vv] : a) first_bad += kk + "=" + to_string(vv) + " ";
            }
            ++tuples;
            es += hits >= 1;
            us += hits <= 1;
            std::size_t i = 0;
            while (i < k && args[i] == top) args[i++] = 0;
            if (i == k) break;
            ++args[i];
        }
        b.ok(c.name + ": D agrees with the graph for arguments <= 8", agree == total, prov,
             {{"checked", std::to_string(total)}}, first_bad.empty() ? "" : "disagrees at " + first_bad);
        b.ok(c.name + ": ES(D) instances hold in N", es == tuples, prov, {{"tuples", std::to_string(tuples)}});
        b.ok(c.name + ": US(D) instances hold in N", us == tuples, prov, {{"tuples", std::to_string(tuples)}});
    }
    return b.done();
}

ScenarioReport cutelim_demo(const std::string& dir) {
    const std::string prov = "cut elimination keeps only cuts inside the class";
    Builder b("cutelim-demo");
    std::ifstream in(dir + "/lk/index.json");
    if (!in) throw std::runtime_error("cannot read " + dir + "/lk/index.json");
    nlohmann::json idx = nlohmann::json::parse(in);
    for (auto& e : idx) {
        std::string file = e["file"];
        ClassPredicate cls = ClassPredicate::by_name(e["class"]);
        LkProof p = load_lk_proof(dir + "/lk/" + file);
        LkReport r = check_lk(p, cls);
        b.ok(file + ": input checks", r.ok(), prov, {{"class", cls.name}}, r.summary());
        if (!r.ok()) continue;
        try {
            CutElimStats st;
            LkProof q = eliminate_cuts_outside(p, cls, &st);
            LkReport rq = check_lk(q, cls);
            b.ok(file + ": output checks", rq.ok(), prov, {}, rq.summary());
            b.ok(file + ": identical end-sequent", q.conclusion == p.conclusion, prov,
                 {{"conclusion", to_string(q.conclusion)}});
            bool inside = true;
            for (auto& c : cut_formulas(q)) inside = inside && cls(c);
            b.ok(file + ": every remaining cut formula is in the class", inside, prov,
                 {{"cuts_before", std::to_string(cut_formulas(p).size())},
                  {"cuts_after", std::to_string(cut_formulas(q).size())},
                  {"eliminated", std::to_string(st.eliminated)},
                  {"mix_calls", std::to_string(st.mix_calls)}});
        } catch (const std::exception& ex) {
            b.ok(file + ": cut elimination", false, prov, {}, ex.what());
        }
    }
    return b.done();
}

ScenarioReport overspill_suite(const std::string&) {
    const std::string prov = "overspill for positive formulas";
    Builder b("overspill-suite");
    EvalBound bound{64, true};
    for (auto& text : overspill_corpus()) {
        Formula f = P(text);
        OverspillReport r = overspill_check(f, 64, bound);
        Assertion a;
        a.description = "overspill: " + text;
        a.expected = "True";
        a.provenance = prov;
        switch (r.outcome) {
            case OverspillReport::Outcome::Pass:
                a.actual = "True";
                a.pass = true;
                break;
            case OverspillReport::Outcome::HypothesisNotMet:
                a.actual = "hypothesis not met";
                a.pass = true;
                a.evidence.emplace_back("failing_sample", std::to_string(*r.failing_sample));
                break;
            case OverspillReport::Outcome::Fail:
                a.actual = "False";
                break;
            case OverspillReport::Outcome::Unknown:
                a.actual = "Unknown";
                a.unknown = true;
                break;
        }
        if (r.witness)
            for (auto& [k, e] : r.witness->asg) a.evidence.emplace_back(k, to_string(e));
        b.add(std::move(a));
    }
    return b.done();
}

using Runner = ScenarioReport (*)(const std::string&);

const std::vector<std::pair<std::string, Runner>>& registry() {
    static const std::vector<std::pair<std::string, Runner>> r = {
        {"cutoff-uniqueness-failure", cutoff_uniqueness_failure},
        {"even-undecidable", even_undecidable},
        {"prime-divisor-failure", prime_divisor_failure},
        {"cancellation-U-failure", cancellation_u_failure},
        {"two-node-cancellation-conditional", two_node_cancellation},
        {"positivize-pipeline", positivize_pipeline},
        {"totalizer-demo", totalizer_demo},
        {"cutelim-demo", cutelim_demo},
        {"overspill-suite", overspill_suite},
    };
    return r;
}

}  // namespace

bool ScenarioReport::pass() const {
    for (auto& a : assertions)
        if (!a.pass) return false;
    return !assertions.empty();
}

bool ScenarioReport::unknown() const {
    for (auto& a : assertions)
        if (a.unknown) return true;
    return false;
}

std::string default_fixture_dir() { return BAKIT_FIXTURE_DIR; }

std::vector<std::string> scenario_names() {
    std::vector<std::string> out;
    for (auto& [n, _] : registry()) out.push_back(n);
    return out;
}

ScenarioReport run_scenario(const std::string& name, const std::string& fixture_dir) {
    for (auto& [n, fn] : registry()) {
        if (n != name) continue;
        auto t0 = std::chrono::steady_clock::now();
        ScenarioReport r = fn(fixture_dir);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }
    throw std::invalid_argument("unknown scenario: " + name);
}

std::vector<ScenarioReport> run_scenarios(const std::vector<std::string>& names, bool parallel,
                                          const std::string& fixture_dir) {
    std::vector<ScenarioReport> out;
    if (!parallel) {
        for (auto& n : names) out.push_back(run_scenario(n, fixture_dir));
        return out;
    }
    std::vector<std::future<ScenarioReport>> jobs;
    for (auto& n : names) jobs.push_back(std::async(std::launch::async, [n, fixture_dir] {
        return run_scenario(n, fixture_dir);
    }));
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

const std::vector<std::string>& overspill_corpus() {
    static const std::vector<std::string> c = {
        "x = x",
        "(E y. x = y + y) | (E y. x = y + y + S0)",
        "E y. x + y = y + x",
        "(E y. S y = x) | x = 0",
        "x < S x",
        "E y. x < y",
        "E y. y < S x & x = y",
        "E y. x = y | x = S y",
        "0 < S x",
        "E y. x * y = x",
        "E y. x * y = 0",
        "E y. y + y = x + x",
        "E y. x + 0 = y",
        "x * 0 = 0",
        "0 * x = 0",
        "E y. x < y + y + S0",
        "x = 0 | (E y. x = S y)",
        "E y. E z. x = y * z",
        "E y. E z. x + y = z",
        "x + S0 = S x",
        "x * S0 = x",
        "E y. x * x = y * x",
        "x < SSSSS0",
        "x = SS0",
        "E y. x = y + SSS0",
        "x + x = x",
        "E y. y < x",
        "(E y. x = y + y + y) | (E y. x = S(y + y + y)) | (E y. x = SS(y + y + y))",
        "(E y. x = y * SS0) | (E y. x = S(y * SS0))",
        "E y. y * y < S x",
        "S x = S x",
        "E y. S y = S x",
        "(E y. x + y = SSS0) | SS0 < x",
        "E y. x * SS0 = y + y",
        "x < x + S0",
        "E y. y < S x & x < y + S0",
        "E y. x = y & y = y",
        "x = 0 | 0 < x",
        "E y. x * x = y * y",
        "E y. y + x = S(x + y)",
        "E y. x * S y = x + x",
        "E y. x < S y & y < S x",
        "(E y. E z. y + z = x & y = z) | (E y. E z. y + z = x & S y = z)",
        "x * x = x",
        "E y. x = y * y",
        "E y. SS0 * y = x | SS0 * y = S x",
        "x + SS0 = SS x",
        "0 < x | (x = 0 & T)",
        "E y. (y = 0 | y = S0) & (E z. x = z + z + y)",
        "E y. x = y + S0",
    };
    return c;
}

}  // namespace bakit
