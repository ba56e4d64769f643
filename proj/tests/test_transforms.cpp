#include "doctest.h"

#include "bakit/semantics.hpp"
#include "bakit/transforms.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace bakit;

namespace {
Formula P(const std::string& s, Language l = Language::L) { return parse_formula(s, l); }
Term v(const char* n) { return Term::var(n); }
oracle::V nat(std::uint64_t n) { return {false, n}; }
}  // namespace

TEST_CASE("positive_part examples") {
    CHECK(positive_part(P("(T -> F)")) == Formula::top());
    CHECK(positive_part(P("E y. y = 0 & (T -> F)")) == P("E y. y = 0 & T"));
    CHECK(positive_part(P("x = y")) == P("x = y"));
}

TEST_CASE("semi_positive_part examples") {
    CHECK(semi_positive_part(P("![x]((T -> F) -> x = 0)")) == P("![x](T -> x = 0)"));
    Formula pos = P("E y. x = y + y | x < S0");
    CHECK(semi_positive_part(pos) == pos);
    CHECK(semi_positive_part(P("(x = 0 -> (T -> F))")) == P("(x = 0 -> T)"));
}

TEST_CASE("open_positive and open_negation examples") {
    Term s = Term::add(v("x"), numeral(1)), t = v("y");
    CHECK(open_negation(Formula::eq(s, t)) == Formula::disj(Formula::lt(s, t), Formula::lt(t, s)));
    Formula imp = P("(x = 0 -> y = 0)");
    CHECK(open_positive(imp) == Formula::disj(open_negation(P("x = 0")), P("y = 0")));
    CHECK(open_positive(Formula::top()) == Formula::top());
    CHECK(open_negation(Formula::top()) == Formula::bot());
    CHECK(open_negation(P("x < y")) == P("x = y | y < x"));
    CHECK(open_negation(imp) == P("x = 0 & (y < 0 | 0 < y)"));
    CHECK_THROWS_AS(open_positive(P("E x. x = 0")), TransformError);
    CHECK_THROWS_AS(open_negation(P("![x](T -> x = x)")), TransformError);
}

TEST_CASE("bounded_negation examples") {
    CHECK(bounded_negation(P("E x. x < y & x = 0")) == P("![x](x < y -> 0 < x | x < 0)"));
    CHECK(bounded_negation(P("x < y")) == P("y < x | x = y"));
    CHECK(bounded_negation(Formula::top()) == Formula::bot());
    CHECK(bounded_negation(P("![x](x < SS0 -> x = x)")) == P("E x. x < SS0 & (x < x | x < x)"));
    CHECK(bounded_negation(P("(x = 0 -> F)")) == P("x = 0 & T"));
    try {
        bounded_negation(P("E x. x = y"));
        FAIL("accepted");
    } catch (const TransformError& e) {
        CHECK(e.code == "NotDeltaZero");
    }
}

TEST_CASE("star_translate examples") {
    Formula a = P("x -. y = 0", Language::Lc);
    Formula expect = P("E z. ((x < y & z = 0) | x = y + z) & z = 0");
    CHECK(star_translate(a) == expect);
    for (std::uint64_t x = 0; x <= 10; ++x)
        for (std::uint64_t y = 0; y <= 10; ++y) {
            oracle::Env env{{"x", nat(x)}, {"y", nat(y)}};
            CHECK(oracle::truth(a, env, 10) == oracle::truth(expect, env, 10));
        }
    Formula plain = P("E y. x = y + y");
    CHECK(star_translate(plain) == plain);

    Formula nested = P("(x -. y) -. y = 0", Language::Lc);
    Formula n1 = P("E z. ((x < y & z = 0) | x = y + z) & z -. y = 0", Language::Lc);
    Formula n2 = P("E z. ((x < y & z = 0) | x = y + z) & E z'. ((z < y & z' = 0) | z = y + z') & z' = 0");
    Formula step = Formula::top();
    REQUIRE(star_step(nested, step));
    CHECK(step == n1);
    Formula full = star_translate(nested);
    CHECK(full == n2);
    CHECK_FALSE(full.has_monus());
    for (std::uint64_t x = 0; x <= 10; ++x)
        for (std::uint64_t y = 0; y <= 10; ++y) {
            oracle::Env env{{"x", nat(x)}, {"y", nat(y)}};
            CHECK(oracle::truth(nested, env, 10) == oracle::truth(full, env, 10));
        }
}

namespace {
TotalizerInput cutoff_input() {
    return {P("((x1 < x2 & y = 0) | x1 = x2 + y) & z = z"), {"x1", "x2"}, "y", {"z"}};
}
TotalizerInput identity_input() { return {P("y = x & z = z"), {"x"}, "y", {"z"}}; }

// the witness is a dummy, so a short search over z is exact
bool d_holds(const TotalizerParts& p, const std::string& z, oracle::Env env) {
    for (std::uint64_t c = 0; c <= 2; ++c) {
        env[z] = nat(c);
        if (oracle::truth(Formula::disj(p.B, p.C), env, 0)) return true;
    }
    return false;
}
}  // namespace

TEST_CASE("sigma1_totalizer: cut-off graph") {
    TotalizerParts p = sigma1_totalizer_parts(cutoff_input());
    CHECK(in_class(p.D, FormulaClass::SigmaOne));
    CHECK(is_delta0(p.B));
    CHECK(is_delta0(p.C));
    CHECK(is_delta0(p.U));
    CHECK(free_vars(p.D) == VarSet{"x1", "x2", "y"});
    for (std::uint64_t a = 0; a <= 8; ++a)
        for (std::uint64_t b = 0; b <= 8; ++b)
            for (std::uint64_t c = 0; c <= 8; ++c) {
                bool want = (a > b ? a - b : 0) == c;
                CHECK(d_holds(p, "z", {{"x1", nat(a)}, {"x2", nat(b)}, {"y", nat(c)}}) == want);
            }
}

TEST_CASE("sigma1_totalizer: identity graph and input errors") {
    TotalizerParts p = sigma1_totalizer_parts(identity_input());
    CHECK(in_class(p.D, FormulaClass::SigmaOne));
    for (std::uint64_t a = 0; a <= 8; ++a)
        for (std::uint64_t b = 0; b <= 8; ++b) CHECK(d_holds(p, "z", {{"x", nat(a)}, {"y", nat(b)}}) == (a == b));
    TotalizerInput bad = identity_input();
    bad.zs.clear();
    bad.A = P("y = x");
    CHECK_THROWS_AS(sigma1_totalizer(bad), TransformError);
    bad = identity_input();
    bad.A = P("(y = x -> F) & z = z");
    CHECK_THROWS_AS(sigma1_totalizer(bad), TransformError);
    bad = identity_input();
    bad.xs = {"y"};
    CHECK_THROWS_AS(sigma1_totalizer(bad), TransformError);
}

TEST_CASE("U(x) holds in N for small x") {
    VarSet none;
    Formula u = uniqueness_bound(v("x"), none);
    CHECK(is_delta0(u));
    for (std::uint64_t n = 0; n <= 6; ++n) CHECK(oracle::truth(u, {{"x", nat(n)}}, 0));
}

TEST_CASE("property: positive_part laws") {
    testgen::Gen g(testgen::kSeed + 10);
    for (int i = 0; i < 1000; ++i) {
        Formula f = g.formula(4, {"x", "y"});
        Formula p = positive_part(f);
        CHECK(positive_part(p) == p);
        CHECK(in_class(p, FormulaClass::Positive));
        CHECK(positive_part(semi_positive_part(f)) == p);
    }
}

TEST_CASE("property: positive part keeps bounded truth in N") {
    testgen::Gen g(testgen::kSeed + 11);
    EvalBound b{8, false};
    int confirmed = 0;
    for (int i = 0; i < 500; ++i) {
        Formula f = g.formula(3, {});
        if (sat(StructureSpec::std_n(), f, {}, b).is_true()) {
            ++confirmed;
            CHECK(sat(StructureSpec::std_n(), positive_part(f), {}, b).is_true());
        }
    }
    CHECK(confirmed > 50);
}

TEST_CASE("property: open positivization agrees with N") {
    testgen::Gen g(testgen::kSeed + 12);
    std::uniform_int_distribution<std::uint64_t> val(0, 20);
    for (int i = 0; i < 500; ++i) {
        Formula f = g.quantifier_free(4, {"x", "y", "z"});
        oracle::Env env{{"x", nat(val(g.rng()))}, {"y", nat(val(g.rng()))}, {"z", nat(val(g.rng()))}};
        bool t = oracle::truth(f, env, 0);
        Formula pos = open_positive(f), neg = open_negation(f);
        CHECK(is_positive(pos));
        CHECK(is_positive(neg));
        CHECK(is_quantifier_free(pos));
        CHECK(oracle::truth(pos, env, 0) == t);
        CHECK(oracle::truth(neg, env, 0) == !t);
    }
}

TEST_CASE("property: bounded negation is classical negation in N") {
    testgen::Gen g(testgen::kSeed + 13);
    for (int i = 0; i < 500; ++i) {
        Formula f = g.delta0(4, {}, 8);
        Formula n = bounded_negation(f);
        CHECK(is_delta0(n));
        CHECK(oracle::truth(n, {}, 0) == !oracle::truth(f, {}, 0));
    }
}

TEST_CASE("property: star translation keeps truth in N") {
    testgen::Gen g(testgen::kSeed + 14);
    testgen::Shape s;
    s.monus = true;
    std::uniform_int_distribution<std::uint64_t> val(0, 10);
    int with_monus = 0;
    for (int i = 0; i < 300; ++i) {
        Formula f = g.delta0(3, {"x", "y"}, 4, s);
        oracle::Env env{{"x", nat(val(g.rng()))}, {"y", nat(val(g.rng()))}};
        Formula st = star_translate(f);
        with_monus += f.has_monus();
        CHECK_FALSE(st.has_monus());
        // z never exceeds the value of the term it names
        std::uint64_t limit = oracle::term_ceiling(f, env, 4);
        CHECK(oracle::truth(st, env, limit) == oracle::truth(f, env, limit));
    }
    CHECK(with_monus > 100);
}
