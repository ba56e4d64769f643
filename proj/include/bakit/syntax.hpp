#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bakit {

// Terms over {0, S, +, *} plus cut-off subtraction for the extended language.
class Term {
public:
    enum class Kind { Var, Zero, Succ, Add, Mul, Monus };

    static Term var(std::string name);
    static Term zero();
    static Term succ(Term t);
    static Term add(Term l, Term r);
    static Term mul(Term l, Term r);
    static Term monus(Term l, Term r);

    Kind kind() const;
    const std::string& name() const;
    const Term& arg() const;
    const Term& lhs() const;
    const Term& rhs() const;

    bool is_var() const { return kind() == Kind::Var; }
    bool has_monus() const;
    std::size_t size() const;

    friend bool operator==(const Term& a, const Term& b);
    friend std::strong_ordering operator<=>(const Term& a, const Term& b);

private:
    friend struct TermAccess;
    struct Node;
    explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

// Formulas of the basic language. Neg, Imp and Forall only occur in
// classical sequent-calculus proofs.
class Formula {
public:
    enum class Kind { Top, Bot, Eq, Lt, And, Or, Exists, Block, Neg, Imp, Forall };

    static Formula top();
    static Formula bot();
    static Formula eq(Term l, Term r);
    static Formula lt(Term l, Term r);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula exists(std::string v, Formula body);
    // throws std::invalid_argument on repeated variables
    static Formula block(std::vector<std::string> vars, Formula ante, Formula cons);
    static Formula implies(Formula a, Formula b) { return block({}, std::move(a), std::move(b)); }
    static Formula negate(Formula a) { return block({}, std::move(a), bot()); }
    static Formula neg(Formula a);
    static Formula imp(Formula a, Formula b);
    static Formula forall(std::string v, Formula body);

    Kind kind() const;
    const Term& lterm() const;
    const Term& rterm() const;
    // And/Or operands, Block antecedent/consequent, Imp sides
    const Formula& left() const;
    const Formula& right() const;
    // Exists/Forall/Neg operand
    const Formula& body() const;
    // Exists/Forall bound variable
    const std::string& var() const;
    const std::vector<std::string>& vars() const;

    bool is_atomic() const;
    bool is(Kind k) const { return kind() == k; }
    bool has_monus() const;
    std::size_t size() const;
    std::size_t depth() const;

    friend bool operator==(const Formula& a, const Formula& b);
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

private:
    friend struct FormulaAccess;
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

struct Sequent {
    Formula ante;
    Formula cons;
    friend bool operator==(const Sequent&, const Sequent&) = default;
};

enum class Language { L, Lc };
enum class Dialect { Basic, Classical };

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p);
};

struct CaptureViolation : std::runtime_error {
    std::string binder;
    std::string variable;
    CaptureViolation(std::string binder, std::string variable);
};

using VarSet = std::set<std::string>;
using Substitution = std::vector<std::pair<std::string, Term>>;

Term numeral(std::uint64_t n);
// n if t is S^n 0
bool numeral_value(const Term& t, std::uint64_t& n);

std::string to_string(const Term& t);
std::string to_string(const Formula& f);
std::string to_string(const Sequent& s);

Term parse_term(const std::string& text, Language lang = Language::L);
Formula parse_formula(const std::string& text, Language lang = Language::L,
                      Dialect d = Dialect::Basic);
Sequent parse_sequent(const std::string& text, Language lang = Language::L);
// comma separated lists on both sides of "=>"
std::pair<std::vector<Formula>, std::vector<Formula>> parse_sequent_lists(
    const std::string& text, Language lang = Language::L, Dialect d = Dialect::Classical);

VarSet vars_of(const Term& t);
VarSet free_vars(const Formula& f);
VarSet free_vars(const Sequent& s);
VarSet bound_vars(const Formula& f);
VarSet all_vars(const Formula& f);
bool occurs_free(const std::string& v, const Formula& f);

Term substitute(const Term& t, const Substitution& s);
Formula substitute(const Formula& f, const Substitution& s);
Formula substitute(const Formula& f, const std::string& x, const Term& t);

// alpha-renames every binder named `from` to `to`; `to` must not occur in f
Formula rename_bound(const Formula& f, const std::string& from, const std::string& to);

std::string fresh_var(const std::string& base, const VarSet& avoid);

enum class FormulaClass {
    Atomic, QuantifierFree, Positive, ExistsOne, ExistsOnePos, DeltaZero, SigmaOne, PiTwo
};
std::string to_string(FormulaClass c);
std::set<FormulaClass> classify(const Formula& f);
bool in_class(const Formula& f, FormulaClass c);
bool is_positive(const Formula& f);
bool is_quantifier_free(const Formula& f);
bool is_delta0(const Formula& f);

// matches x<s & A with x not in s
bool bounded_exists_parts(const Formula& f, std::string& x, Term& bound, Formula& body);
// matches a one-variable block with antecedent x<s, x not in s
bool bounded_forall_parts(const Formula& f, std::string& x, Term& bound, Formula& body);

Formula desugar_order(const Formula& f);
Formula le(const Term& s, const Term& t);
Formula divides(const Term& s, const Term& t);

// classical-language view: Block([],A,B) -> Imp, Block([x..],A,B) -> nested Forall of Imp,
// Block([x],T,B) -> Forall x B
Formula to_classical(const Formula& f);

}  // namespace bakit
