#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bakit/proofs_ba.hpp"
#include "bakit/syntax.hpp"

namespace bakit {

struct LkSequent {
    std::vector<Formula> ante;
    std::vector<Formula> cons;
    friend bool operator==(const LkSequent&, const LkSequent&) = default;
};

std::string to_string(const LkSequent& s);
// classical dialect, comma separated lists
LkSequent parse_lk_sequent(const std::string& text);

struct LkProof {
    LkSequent conclusion;
    std::string rule;
    Bindings bind;
    std::vector<LkProof> premises;
};

// Decidable formula class, closed under subformulas.
struct ClassPredicate {
    std::string name;
    std::function<bool(const Formula&)> test;
    bool operator()(const Formula& f) const { return test(f); }

    static ClassPredicate pos();     // existential-positive
    static ClassPredicate delta0();  // bounded
    static ClassPredicate open();    // quantifier free
    static ClassPredicate any();
    // pos, delta0, open, any
    static ClassPredicate by_name(const std::string& name);
};

std::vector<std::string> lk_rule_ids();

struct LkInstance {
    LkSequent conclusion;
    std::vector<std::string> side_errors;
    std::vector<std::string> premise_errors;  // conclusion is meaningless when non-empty
};

MetaKind lk_meta_kind(const std::string& key);

// Computes the conclusion of a rule from its bindings and premise conclusions.
// Throws RuleError on unknown rules, wrong premise counts or missing bindings.
LkInstance lk_instantiate(const std::string& rule, const Bindings& b, const std::vector<LkSequent>& premises);

struct LkReport {
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return diagnostics.empty(); }
    std::string summary() const;
};

LkReport check_lk(const LkProof& p, const ClassPredicate& cls);

// node with computed conclusion; throws RuleError on side errors
LkProof lk_node(const std::string& rule, Bindings b, std::vector<LkProof> premises);

std::size_t lk_height(const LkProof& p);
std::size_t lk_node_count(const LkProof& p);
std::vector<Formula> cut_formulas(const LkProof& p);
std::vector<Formula> lk_all_formulas(const LkProof& p);
std::set<std::string> lk_rules_used(const LkProof& p);

// Structural completion: from a proof of G => D to one of G' => D' where every
// formula of G occurs in G' and every formula of D occurs in D' (exchange, weakening, contraction).
LkProof adapt(const LkProof& p, const LkSequent& target);
bool fits(const LkSequent& s, const LkSequent& target);

// Replaces the free variable x by t throughout, renaming clashing eigenvariables.
LkProof subst_proof(const LkProof& p, const std::string& x, const Term& t);

// Rule builders that bring the active formulas into position first.
namespace lk {

LkProof ax(const Formula& a);
LkProof cut(const LkProof& left, const LkProof& right, const Formula& a);
LkProof and_r(const LkProof& pa, const LkProof& pb, const Formula& a, const Formula& b);
LkProof and_l(const LkProof& p, const Formula& conj, bool first);
LkProof or_r(const LkProof& p, const Formula& disj, bool first);
LkProof or_l(const LkProof& pa, const LkProof& pb, const Formula& a, const Formula& b);
LkProof imp_r(const LkProof& p, const Formula& a, const Formula& b);
LkProof imp_l(const LkProof& pa, const LkProof& pb, const Formula& a, const Formula& b);
LkProof neg_r(const LkProof& p, const Formula& a);
LkProof neg_l(const LkProof& p, const Formula& a);
LkProof ex_r(const LkProof& p, const Formula& ex, const Term& t);
LkProof ex_l(const LkProof& p, const Formula& ex, const std::string& y);
LkProof all_r(const LkProof& p, const Formula& all, const std::string& y);
LkProof all_l(const LkProof& p, const Formula& all, const Term& t);
LkProof ind(const LkProof& p, const Formula& a, const std::string& x, const Term& t);
// arithmetic and equality axioms by rule id; terms bound as s, t, s', t'
LkProof axiom(const std::string& rule, const std::vector<Term>& ts);

}  // namespace lk

struct CutElimStats {
    std::size_t mix_calls = 0;
    std::size_t measure_checks = 0;
    std::size_t eliminated = 0;
};

// Removes every cut whose cut formula is outside cls. Throws std::invalid_argument
// when the preconditions fail and std::logic_error if the reduction measure fails to decrease.
LkProof eliminate_cuts_outside(const LkProof& p, const ClassPredicate& cls, CutElimStats* stats = nullptr);

LkSequent ba_to_lk(const Sequent& s);
// conjunction of the antecedent list (T when empty) and disjunction of the succedent list (F when empty)
Sequent lk_to_ba_sequent(const LkSequent& s);
BaProof lk_pos_to_ba(const LkProof& p);

LkProof lk_proof_from_json(const std::string& text);
std::string lk_proof_to_json(const LkProof& p, int indent = 1);
LkProof load_lk_proof(const std::string& path);

}  // namespace bakit
