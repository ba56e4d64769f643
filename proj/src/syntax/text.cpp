#include "bakit/syntax.hpp"

#include <cctype>
#include <sstream>

namespace bakit {

namespace {

int term_prec(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Monus: return 1;
    case Term::Kind::Add: return 2;
    case Term::Kind::Mul: return 3;
    default: return 4;
    }
}

void print_term(std::ostream& os, const Term& t, int min_prec) {
    bool paren = term_prec(t) < min_prec;
    if (paren) os << '(';
    switch (t.kind()) {
    case Term::Kind::Var: os << t.name(); break;
    case Term::Kind::Zero: os << '0'; break;
    case Term::Kind::Succ:
        os << 'S';
        print_term(os, t.arg(), 4);
        break;
    case Term::Kind::Add:
        print_term(os, t.lhs(), 2);
        os << " + ";
        print_term(os, t.rhs(), 3);
        break;
    case Term::Kind::Mul:
        print_term(os, t.lhs(), 3);
        os << " * ";
        print_term(os, t.rhs(), 4);
        break;
    case Term::Kind::Monus:
        print_term(os, t.lhs(), 1);
        os << " -. ";
        print_term(os, t.rhs(), 2);
        break;
    }
    if (paren) os << ')';
}

// 0 open-ended quantifiers, 1 disjunction, 2 conjunction, 3 prefix negation, 4 closed
int formula_prec(const Formula& f) {
    switch (f.kind()) {
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: return 0;
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    case Formula::Kind::Neg: return 3;
    default: return 4;
    }
}

void print_formula(std::ostream& os, const Formula& f, int min_prec) {
    bool paren = formula_prec(f) < min_prec;
    if (paren) os << '(';
    switch (f.kind()) {
    case Formula::Kind::Top: os << 'T'; break;
    case Formula::Kind::Bot: os << 'F'; break;
    case Formula::Kind::Eq:
    case Formula::Kind::Lt:
        print_term(os, f.lterm(), 0);
        os << (f.is(Formula::Kind::Eq) ? " = " : " < ");
        print_term(os, f.rterm(), 0);
        break;
    case Formula::Kind::And:
        print_formula(os, f.left(), 2);
        os << " & ";
        print_formula(os, f.right(), 3);
        break;
    case Formula::Kind::Or:
        print_formula(os, f.left(), 1);
        os << " | ";
        print_formula(os, f.right(), 2);
        break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
        os << (f.is(Formula::Kind::Exists) ? "E " : "A ") << f.var() << ". ";
        print_formula(os, f.body(), 0);
        break;
    case Formula::Kind::Neg:
        os << '~';
        print_formula(os, f.body(), 3);
        break;
    case Formula::Kind::Block:
        if (!f.vars().empty()) {
            os << "![";
            for (std::size_t i = 0; i < f.vars().size(); ++i) os << (i ? "," : "") << f.vars()[i];
            os << ']';
        }
        [[fallthrough]];
    case Formula::Kind::Imp:
        os << '(';
        print_formula(os, f.left(), 0);
        os << " -> ";
        print_formula(os, f.right(), 0);
        os << ')';
        break;
    }
    if (paren) os << ')';
}

enum class Tok { Ident, Num, Kw, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = s[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::islower(c)) {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\''))
                ++i;
            out.push_back({Tok::Ident, s.substr(start, i - start), start});
        } else if (std::isdigit(c)) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Num, s.substr(start, i - start), start});
        } else if (std::isupper(c)) {
            if (c != 'S' && c != 'T' && c != 'F' && c != 'E' && c != 'A')
                throw ParseError(std::string("unexpected character '") + char(c) + "'", start);
            out.push_back({Tok::Kw, std::string(1, char(c)), start});
            ++i;
        } else {
            auto two = s.substr(i, 2);
            if (two == "-." || two == "->" || two == "=>") {
                out.push_back({Tok::Sym, two, start});
                i += 2;
            } else if (std::string("()[],.=<+*&|~!").find(char(c)) != std::string::npos) {
                out.push_back({Tok::Sym, std::string(1, char(c)), start});
                ++i;
            } else {
                throw ParseError(std::string("unexpected character '") + char(c) + "'", start);
            }
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(const std::string& text, Language lang, Dialect d) : toks_(lex(text)), lang_(lang), dialect_(d) {}

    Term term() { return monus_term(); }

    Formula formula() { return or_formula(); }

    bool at(Tok k, const char* text = nullptr) const {
        const Token& t = toks_[i_];
        return t.kind == k && (!text || t.text == text);
    }
    bool at_sym(const char* s) const { return at(Tok::Sym, s); }
    bool at_end() const { return at(Tok::End); }

    void expect_sym(const char* s) {
        if (!at_sym(s)) fail(std::string("expected '") + s + "'");
        ++i_;
    }
    void expect_end() {
        if (!at_end()) fail("unexpected trailing input '" + toks_[i_].text + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, toks_[i_].pos); }

    std::size_t i_ = 0;

private:
    Term monus_term() {
        Term t = add_term();
        while (at_sym("-.")) {
            if (lang_ == Language::L) fail("cut-off subtraction is not part of language L");
            ++i_;
            t = Term::monus(t, add_term());
        }
        return t;
    }
    Term add_term() {
        Term t = mul_term();
        while (at_sym("+")) {
            ++i_;
            t = Term::add(t, mul_term());
        }
        return t;
    }
    Term mul_term() {
        Term t = unary_term();
        while (at_sym("*")) {
            ++i_;
            t = Term::mul(t, unary_term());
        }
        return t;
    }
    Term unary_term() {
        const Token& tk = toks_[i_];
        if (tk.kind == Tok::Kw && tk.text == "S") {
            ++i_;
            return Term::succ(unary_term());
        }
        if (tk.kind == Tok::Num) {
            ++i_;
            std::uint64_t n = 0;
            try {
                n = std::stoull(tk.text);
            } catch (...) {
                throw ParseError("numeral too large", tk.pos);
            }
            if (n > 100000) throw ParseError("numeral too large", tk.pos);
            return numeral(n);
        }
        if (tk.kind == Tok::Ident) {
            ++i_;
            return Term::var(tk.text);
        }
        if (at_sym("(")) {
            ++i_;
            Term t = monus_term();
            expect_sym(")");
            return t;
        }
        fail("expected a term");
    }

    Formula or_formula() {
        Formula f = and_formula();
        while (at_sym("|")) {
            ++i_;
            f = Formula::disj(f, and_formula());
        }
        return f;
    }
    Formula and_formula() {
        Formula f = unary_formula();
        while (at_sym("&")) {
            ++i_;
            f = Formula::conj(f, unary_formula());
        }
        return f;
    }

    std::string ident() {
        if (!at(Tok::Ident)) fail("expected a variable");
        return toks_[i_++].text;
    }

    Formula unary_formula() {
        const Token& tk = toks_[i_];
        if (tk.kind == Tok::Kw) {
            if (tk.text == "T" || tk.text == "F") {
                ++i_;
                return tk.text == "T" ? Formula::top() : Formula::bot();
            }
            if (tk.text == "E" || tk.text == "A") {
                ++i_;
                std::string v = ident();
                expect_sym(".");
                Formula body = or_formula();
                if (tk.text == "E") return Formula::exists(v, body);
                if (dialect_ == Dialect::Classical) return Formula::forall(v, body);
                return Formula::block({v}, Formula::top(), body);
            }
        }
        if (at_sym("~")) {
            ++i_;
            Formula body = unary_formula();
            return dialect_ == Dialect::Classical ? Formula::neg(body) : Formula::negate(body);
        }
        if (at_sym("!")) {
            ++i_;
            expect_sym("[");
            std::vector<std::string> vars;
            std::size_t list_pos = toks_[i_].pos;
            if (!at_sym("]")) {
                vars.push_back(ident());
                while (at_sym(",")) {
                    ++i_;
                    vars.push_back(ident());
                }
            }
            expect_sym("]");
            for (std::size_t a = 0; a < vars.size(); ++a)
                for (std::size_t b = a + 1; b < vars.size(); ++b)
                    if (vars[a] == vars[b]) throw ParseError("repeated block variable " + vars[a], list_pos);
            expect_sym("(");
            Formula ante = or_formula();
            expect_sym("->");
            Formula cons = or_formula();
            expect_sym(")");
            if (dialect_ == Dialect::Classical) fail("block quantifier is not part of the classical dialect");
            return Formula::block(vars, ante, cons);
        }
        if (at_sym("(")) {
            std::size_t save = i_;
            try {
                Formula a = atom();
                return a;
            } catch (const ParseError&) {
                i_ = save;
            }
            ++i_;
            Formula f = or_formula();
            if (at_sym("->")) {
                ++i_;
                Formula g = or_formula();
                expect_sym(")");
                return dialect_ == Dialect::Classical ? Formula::imp(f, g) : Formula::implies(f, g);
            }
            expect_sym(")");
            return f;
        }
        return atom();
    }

    Formula atom() {
        Term l = term();
        if (at_sym("=")) {
            ++i_;
            return Formula::eq(l, term());
        }
        if (at_sym("<")) {
            ++i_;
            return Formula::lt(l, term());
        }
        fail("expected '=' or '<'");
    }

    std::vector<Token> toks_;
    Language lang_;
    Dialect dialect_;
};

}  // namespace

std::string to_string(const Term& t) {
    std::ostringstream os;
    print_term(os, t, 0);
    return os.str();
}

std::string to_string(const Formula& f) {
    std::ostringstream os;
    print_formula(os, f, 0);
    return os.str();
}

std::string to_string(const Sequent& s) { return to_string(s.ante) + " => " + to_string(s.cons); }

Term parse_term(const std::string& text, Language lang) {
    Parser p(text, lang, Dialect::Basic);
    Term t = p.term();
    p.expect_end();
    return t;
}

Formula parse_formula(const std::string& text, Language lang, Dialect d) {
    Parser p(text, lang, d);
    Formula f = p.formula();
    p.expect_end();
    return f;
}

Sequent parse_sequent(const std::string& text, Language lang) {
    Parser p(text, lang, Dialect::Basic);
    Formula a = p.formula();
    p.expect_sym("=>");
    Formula b = p.formula();
    p.expect_end();
    return {a, b};
}

std::pair<std::vector<Formula>, std::vector<Formula>> parse_sequent_lists(const std::string& text,
                                                                          Language lang, Dialect d) {
    Parser p(text, lang, d);
    std::vector<Formula> l, r;
    auto list = [&](std::vector<Formula>& out) {
        if (p.at_sym("=>") || p.at_end()) return;
        out.push_back(p.formula());
        while (p.at_sym(",")) {
            ++p.i_;
            out.push_back(p.formula());
        }
    };
    list(l);
    p.expect_sym("=>");
    list(r);
    p.expect_end();
    return {l, r};
}

}  // namespace bakit
