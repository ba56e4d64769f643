#include "doctest.h"

#include "bakit/syntax.hpp"
#include "support/generators.hpp"

using namespace bakit;
using FC = FormulaClass;

namespace {
Term v(const char* n) { return Term::var(n); }
Formula P(const std::string& s, Language l = Language::L) { return parse_formula(s, l); }

bool has_lt(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::Lt: return true;
    case K::And:
    case K::Or:
    case K::Block:
    case K::Imp: return has_lt(f.left()) || has_lt(f.right());
    case K::Exists:
    case K::Forall:
    case K::Neg: return has_lt(f.body());
    default: return false;
    }
}
}  // namespace

TEST_CASE("parse: grammar cases") {
    CHECK(P("S0 = 0") == Formula::eq(Term::succ(Term::zero()), Term::zero()));
    CHECK(P("![x](T -> E y. x = y + y)") ==
          Formula::block({"x"}, Formula::top(), Formula::exists("y", Formula::eq(v("x"), Term::add(v("y"), v("y"))))));
    CHECK_THROWS_AS(P("x -. y = 0"), ParseError);
    CHECK(P("x -. y = 0", Language::Lc) == Formula::eq(Term::monus(v("x"), v("y")), Term::zero()));
}

TEST_CASE("parse: precedence and implication forms") {
    CHECK(parse_term("x + y * z") == Term::add(v("x"), Term::mul(v("y"), v("z"))));
    CHECK(parse_term("x -. y + z", Language::Lc) == Term::monus(v("x"), Term::add(v("y"), v("z"))));
    CHECK(parse_term("S x + y") == Term::add(Term::succ(v("x")), v("y")));
    CHECK(parse_term("3") == numeral(3));
    Formula a = P("x = 0 | y = 0 & z = 0");
    CHECK(a.is(Formula::Kind::Or));
    CHECK(a.right().is(Formula::Kind::And));
    CHECK(P("(x = 0 -> F)") == Formula::negate(Formula::eq(v("x"), Term::zero())));
    CHECK(P("~x = 0") == Formula::negate(Formula::eq(v("x"), Term::zero())));
    CHECK(P("(x + y) * z = z") == Formula::eq(Term::mul(Term::add(v("x"), v("y")), v("z")), v("z")));
    CHECK(parse_formula("(x = 0 -> F)", Language::L, Dialect::Classical) ==
          Formula::imp(Formula::eq(v("x"), Term::zero()), Formula::bot()));
    CHECK(parse_formula("A x. x = x", Language::L, Dialect::Classical) ==
          Formula::forall("x", Formula::eq(v("x"), v("x"))));
}

TEST_CASE("parse: errors carry positions") {
    CHECK_THROWS_AS(P("![x,x](T -> T)"), ParseError);
    CHECK_THROWS_AS(P("x = "), ParseError);
    CHECK_THROWS_AS(P("x = y y"), ParseError);
    CHECK_THROWS_AS(P("Q = 0"), ParseError);
    try {
        P("x = 0 & & y = 0");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.pos == 8);
    }
}

TEST_CASE("parse: sequents and lists") {
    Sequent s = parse_sequent("x + z = y + z => x = y");
    CHECK(s.ante == P("x + z = y + z"));
    CHECK(s.cons == P("x = y"));
    auto [l, r] = parse_sequent_lists("x = y, y = z => ");
    CHECK(l.size() == 2);
    CHECK(r.empty());
    auto [l2, r2] = parse_sequent_lists(" => T");
    CHECK(l2.empty());
    CHECK(r2.size() == 1);
}

TEST_CASE("free_vars") {
    CHECK(free_vars(Formula::eq(v("x"), Term::succ(v("y")))) == VarSet{"x", "y"});
    CHECK(free_vars(Formula::exists("x", Formula::eq(v("x"), v("y")))) == VarSet{"y"});
    CHECK(free_vars(Formula::block({"x", "y"}, Formula::eq(v("x"), v("z")), Formula::eq(v("y"), v("w")))) ==
          VarSet{"z", "w"});
}

TEST_CASE("substitute") {
    CHECK(substitute(Formula::eq(v("x"), v("y")), "x", numeral(1)) == Formula::eq(numeral(1), v("y")));
    CHECK_THROWS_AS(substitute(Formula::exists("y", Formula::eq(v("x"), v("y"))), "x", Term::succ(v("y"))),
                    CaptureViolation);
    Formula nx = Formula::negate(Formula::eq(v("x"), v("x")));
    CHECK(substitute(nx, "x", Term::zero()) == Formula::negate(Formula::eq(Term::zero(), Term::zero())));
    // simultaneous
    CHECK(substitute(P("x = y"), Substitution{{"x", v("y")}, {"y", v("x")}}) == P("y = x"));
    // bound occurrences untouched, no capture error when the variable is not free below the binder
    CHECK(substitute(P("E x. x = 0"), "x", v("x")) == P("E x. x = 0"));
    CHECK(substitute(P("E y. x = 0"), "z", v("y")) == P("E y. x = 0"));
    try {
        substitute(Formula::exists("y", Formula::eq(v("x"), v("y"))), "x", v("y"));
        FAIL("no error");
    } catch (const CaptureViolation& e) {
        CHECK(e.binder == "y");
        CHECK(e.variable == "y");
    }
}

TEST_CASE("rename_bound") {
    CHECK(rename_bound(P("E y. x = y"), "y", "w") == P("E w. x = w"));
    CHECK(rename_bound(P("y = 0 & E y. y = 0"), "y", "w") == P("y = 0 & E w. w = 0"));
    CHECK_THROWS(rename_bound(P("E y. x = y"), "y", "x"));
}

TEST_CASE("numeral") {
    CHECK(numeral(0) == Term::zero());
    CHECK(numeral(2) == Term::succ(Term::succ(Term::zero())));
    CHECK(to_string(numeral(5)) == "SSSSS0");
    std::uint64_t n = 0;
    CHECK(numeral_value(numeral(7), n));
    CHECK(n == 7);
    CHECK_FALSE(numeral_value(Term::succ(v("x")), n));
}

TEST_CASE("classify") {
    CHECK(classify(P("x = y")) ==
          std::set<FC>{FC::Atomic, FC::QuantifierFree, FC::Positive, FC::ExistsOne, FC::ExistsOnePos,
                       FC::DeltaZero, FC::SigmaOne});
    auto neg = classify(P("(x = 0 -> F)"));
    CHECK(neg.count(FC::QuantifierFree));
    CHECK(neg.count(FC::ExistsOne));
    CHECK(neg.count(FC::DeltaZero));
    CHECK_FALSE(neg.count(FC::Positive));
    CHECK_FALSE(neg.count(FC::ExistsOnePos));
    CHECK_FALSE(neg.count(FC::Atomic));
    auto be = classify(P("E x. x < S(y + y) & x = y"));
    CHECK(be.count(FC::DeltaZero));
    CHECK(be.count(FC::SigmaOne));
    // bound variable in the bound term breaks the pattern
    CHECK_FALSE(in_class(P("E x. x < Sx & (x = y -> F)"), FC::DeltaZero));
    CHECK(in_class(P("![x](x < y -> x = x)"), FC::DeltaZero));
    CHECK_FALSE(in_class(P("![x,z](x < y -> x = z)"), FC::DeltaZero));
    CHECK(in_class(P("![x](T -> E z. x = z)"), FC::PiTwo));
    CHECK_FALSE(in_class(P("E z. (x = z -> F)"), FC::Positive));
    CHECK(in_class(P("E z. (x = z -> F)"), FC::ExistsOne));
    CHECK_FALSE(in_class(P("(E z. x = z -> F)"), FC::ExistsOne));
}

TEST_CASE("desugar_order") {
    CHECK(desugar_order(P("0 < S0")) == P("E x. 0 + Sx = S0"));
    Formula noLt = P("E y. x = y + y & ![z](z = z -> T)");
    CHECK(desugar_order(noLt) == noLt);
    CHECK(desugar_order(P("x < x")) == Formula::exists("x'", P("x + Sx' = x")));
}

TEST_CASE("property: print/parse round trip") {
    testgen::Gen g;
    for (Language lang : {Language::L, Language::Lc}) {
        testgen::Shape s;
        s.monus = lang == Language::Lc;
        for (int i = 0; i < 1000; ++i) {
            Formula f = g.formula(4, {"x", "y"}, s);
            std::string text = to_string(f);
            Formula back = parse_formula(text, lang);
            INFO(text);
            CHECK(back == f);
        }
    }
    for (int i = 0; i < 300; ++i) {
        Formula f = to_classical(g.formula(4, {"x"}));
        CHECK(parse_formula(to_string(f), Language::L, Dialect::Classical) == f);
    }
}

TEST_CASE("property: free variables after substitution") {
    testgen::Gen g(testgen::kSeed + 1);
    int tried = 0;
    for (int i = 0; i < 2000 && tried < 500; ++i) {
        Formula f = g.formula(4, {"x", "y"});
        if (!occurs_free("x", f)) continue;
        Term t = g.term(2, {"y", "z", "u"});
        Formula r = Formula::top();
        try {
            r = substitute(f, "x", t);
        } catch (const CaptureViolation&) {
            continue;
        }
        ++tried;
        VarSet expect = free_vars(f);
        expect.erase("x");
        for (auto& w : vars_of(t)) expect.insert(w);
        CHECK(free_vars(r) == expect);
    }
    CHECK(tried >= 200);
}

TEST_CASE("property: class inclusions") {
    testgen::Gen g(testgen::kSeed + 2);
    for (int i = 0; i < 1500; ++i) {
        Formula f = i % 3 == 0 ? g.positive(4, {"x"}) : i % 3 == 1 ? g.delta0(3, {"x"}, 4) : g.formula(4, {"x"});
        auto c = classify(f);
        if (c.count(FC::Positive)) CHECK(c.count(FC::ExistsOnePos));
        if (c.count(FC::ExistsOnePos)) CHECK(c.count(FC::ExistsOne));
        if (c.count(FC::ExistsOne)) CHECK(c.count(FC::SigmaOne));
        if (c.count(FC::Atomic)) CHECK(c.count(FC::QuantifierFree));
        if (c.count(FC::DeltaZero)) CHECK(c.count(FC::SigmaOne));
    }
}

TEST_CASE("property: desugar_order removes order atoms and keeps positivity") {
    testgen::Gen g(testgen::kSeed + 3);
    for (int i = 0; i < 1000; ++i) {
        Formula f = g.formula(4, {"x", "y"});
        Formula d = desugar_order(f);
        CHECK_FALSE(has_lt(d));
        CHECK(is_positive(d) == is_positive(f));
        CHECK(free_vars(d) == free_vars(f));
    }
}
