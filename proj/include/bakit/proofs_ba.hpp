#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bakit/syntax.hpp"

namespace bakit {

// A metavariable value: formula, term, one variable, a variable list or a term list.
using Meta = std::variant<std::monostate, Formula, Term, std::string, std::vector<std::string>, std::vector<Term>>;
using Bindings = std::map<std::string, Meta>;

enum class MetaKind { Formula, Term, Var, Vars, Terms };

struct BaProof {
    Sequent conclusion;
    std::string rule;
    Bindings bind;
    std::vector<BaProof> premises;
};

struct TheoryPack {
    std::string name = "BA";
    Language lang = Language::L;
    bool monus_axioms = false;
    std::vector<std::pair<std::string, Sequent>> extra;  // named axiom sequents

    static TheoryPack ba();
    static TheoryPack ba_u();
    static TheoryPack ba_c();
    static TheoryPack eba();
    // ba, ba-u, ba-c, eba
    static TheoryPack by_name(const std::string& name);
    TheoryPack with(const std::string& axiom, const Sequent& s) const;
};

struct RuleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RuleSig {
    std::vector<std::pair<std::string, MetaKind>> metas;
    std::size_t arity = 0;
};

// throws RuleError for an unknown rule id
const RuleSig& rule_signature(const std::string& rule);
std::vector<std::string> rule_ids();

struct Instance {
    std::vector<Sequent> premises;
    Sequent conclusion;
    std::vector<std::string> side_errors;
};

struct CheckOptions {
    bool strict_atomic = false;  // keep < atoms out of the equality axiom
};

// throws RuleError on missing or ill-typed bindings or a theory axiom outside the pack
Instance instantiate(const std::string& rule, const Bindings& b, const TheoryPack& t, const CheckOptions& o = {});

struct Diagnostic {
    std::vector<std::size_t> path;  // premise indices from the root
    std::string rule;
    std::string kind;  // arity, binding, mismatch, premise, side-condition, theory, language
    std::string message;
};

struct CheckReport {
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return diagnostics.empty(); }
    std::string summary() const;
};

CheckReport check_proof(const BaProof& p, const TheoryPack& t, const CheckOptions& o = {});

// builds a node whose conclusion is computed from the bindings; throws RuleError on side errors
BaProof make_node(const std::string& rule, Bindings b, std::vector<BaProof> premises,
                  const TheoryPack& t = TheoryPack::ba_c());

std::size_t height(const BaProof& p);
std::size_t node_count(const BaProof& p);
std::set<std::string> rules_used(const BaProof& p);
bool all_formulas(const BaProof& p, bool (*pred)(const Formula&));

std::string meta_to_string(const Meta& m);
Meta parse_meta(const std::string& text, MetaKind k, Language lang);

BaProof ba_proof_from_json(const std::string& text, Language lang = Language::Lc);
std::string ba_proof_to_json(const BaProof& p, int indent = 1);
BaProof load_ba_proof(const std::string& path, Language lang = Language::Lc);

// proof transformations
BaProof positivize_proof(const BaProof& p, const TheoryPack& t);
BaProof semi_positivize_proof(const BaProof& p, const TheoryPack& t);
BaProof synth_pos_upper(const Formula& a);
BaProof synth_semipos_to_pos(const Formula& a);

// Small derived steps for assembling proofs by hand.
namespace tac {

BaProof ax1(const Formula& a);
BaProof ax2(const Formula& a);
BaProof ax3(const Formula& a);
BaProof cut(const BaProof& ab, const BaProof& bc);  // R14
BaProof pair(const BaProof& ab, const BaProof& ac);  // R15
BaProof left(const BaProof& abc);   // A => B&C gives A => B
BaProof right(const BaProof& abc);  // A => B&C gives A => C
BaProof cases(const BaProof& ba, const BaProof& ca);  // R16
BaProof inst(const BaProof& p, const std::vector<std::string>& xs, const std::vector<Term>& ts);
BaProof inst(const BaProof& p, const std::string& x, const Term& t);
// A&B => A and A&B => B
BaProof proj1(const Formula& a, const Formula& b);
BaProof proj2(const Formula& a, const Formula& b);
// B => B|C and C => B|C
BaProof inj1(const Formula& b, const Formula& c);
BaProof inj2(const Formula& b, const Formula& c);
// T => s = s
BaProof eq_refl(const Term& s);
// s = t & A[x/s] => A[x/t] for atomic A
BaProof eq_subst(const Term& s, const Term& t, const Formula& atom, const std::string& x);
BaProof eq_sym(const Term& s, const Term& t);                  // s = t => t = s
BaProof eq_trans(const Term& r, const Term& s, const Term& t);  // r = s & s = t => r = t
// from G => D1|D2, G&D1 => T, G&D2 => T conclude G => T
BaProof by_cases(const BaProof& split, const BaProof& c1, const BaProof& c2);
// from A => B and A => C conclude A => B&C, and weaken the antecedent: A&X => B from A => B
BaProof weaken_left(const BaProof& ab, const Formula& x);
BaProof weaken_right(const BaProof& ab, const Formula& x);  // X&A => B
// T => A from A in a T-context: A => B with T => A gives T => B
BaProof chain(const BaProof& ta, const BaProof& ab);

}  // namespace tac

}  // namespace bakit
