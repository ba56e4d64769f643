#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bakit/syntax.hpp"

namespace bakit {

struct ElementId {
    bool inf = false;
    std::uint64_t n = 0;

    static ElementId nat(std::uint64_t v) { return {false, v}; }
    static ElementId infinity() { return {true, 0}; }
    friend bool operator==(const ElementId&, const ElementId&) = default;
    friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

std::string to_string(const ElementId& e);

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Assignment = std::map<std::string, ElementId>;

struct FiniteTable {
    std::vector<ElementId> carrier;
    std::map<ElementId, ElementId> succ;
    std::map<std::pair<ElementId, ElementId>, ElementId> add;
    std::map<std::pair<ElementId, ElementId>, ElementId> mul;
    std::map<std::pair<ElementId, ElementId>, ElementId> monus;
    std::set<std::pair<ElementId, ElementId>> lt;
};

struct StructureSpec {
    enum class Kind { StdN, NStar, Finite };
    Kind kind = Kind::StdN;
    bool monus_enabled = true;
    FiniteTable table;

    static StructureSpec std_n() { return {Kind::StdN, true, {}}; }
    // cut-off subtraction is left undefined on the extended carrier
    static StructureSpec n_star() { return {Kind::NStar, false, {}}; }
    static StructureSpec finite(FiniteTable t, bool monus = false) { return {Kind::Finite, monus, std::move(t)}; }

    bool contains(const ElementId& e) const;
    bool finite_carrier() const { return kind == Kind::Finite; }
};

std::string to_string(StructureSpec::Kind k);

enum class Truth { True, False, Unknown };

struct Truth3 {
    Truth value = Truth::Unknown;
    std::uint64_t bound = 0;  // search bound behind an Unknown

    static Truth3 yes() { return {Truth::True, 0}; }
    static Truth3 no() { return {Truth::False, 0}; }
    static Truth3 unknown(std::uint64_t b) { return {Truth::Unknown, b}; }
    bool is_true() const { return value == Truth::True; }
    bool is_false() const { return value == Truth::False; }
    bool is_unknown() const { return value == Truth::Unknown; }
    friend bool operator==(const Truth3&, const Truth3&) = default;
};

std::string to_string(const Truth3& t);

struct Evidence {
    int node = -1;
    Assignment asg;
};

struct Verdict {
    Truth3 truth;
    std::optional<Evidence> evidence;
    // free parameters of a sequent or open formula ranged over the search set only
    bool params_sampled = false;
};

struct EvalBound {
    std::uint64_t witness_bound = 8;
    bool include_inf = false;
};

struct KripkeNode {
    int id = 0;
    bool reflexive = false;
    StructureSpec structure;
};

struct KripkeModel {
    std::vector<KripkeNode> nodes;
    std::set<std::pair<int, int>> edges;  // strict k < k', reflexive loops live on the nodes

    const KripkeNode& node(int id) const;
    bool precedes(int a, int b) const;  // a < b, loops included
    std::vector<int> strict_successors(int id) const;
    std::vector<int> weak_successors(int id) const;  // id itself first
};

ElementId eval_term(const StructureSpec& s, const Term& t, const Assignment& asg);
bool eval_atom(const StructureSpec& s, const Formula& atom, const Assignment& asg);

// classical truth; quantifiers outside bounded patterns search the candidate set
Truth3 sat(const StructureSpec& s, const Formula& f, const Assignment& asg, const EvalBound& b);
Verdict sat_verdict(const StructureSpec& s, const Formula& f, const Assignment& asg, const EvalBound& b);

Verdict force(const KripkeModel& m, int k, const Formula& f, const Assignment& asg, const EvalBound& b);
Verdict force_sequent(const KripkeModel& m, int k, const Sequent& s, const EvalBound& b);
Verdict force_rule(const KripkeModel& m, int k, const std::vector<Sequent>& premises, const Sequent& concl,
                   const EvalBound& b);

KripkeModel make_Kstar();
KripkeModel add_root(const KripkeModel& m, bool reflexive);

struct ModelReport {
    std::vector<std::string> transitivity;
    std::vector<std::string> monotonicity;
    std::vector<std::string> persistence;
    bool ok() const { return transitivity.empty() && monotonicity.empty() && persistence.empty(); }
};

ModelReport validate_model(const KripkeModel& m, std::uint64_t sample = 32);

struct OverspillReport {
    enum class Outcome { Pass, Fail, Unknown, HypothesisNotMet };
    Outcome outcome = Outcome::Unknown;
    std::optional<std::uint64_t> failing_sample;
    std::optional<Evidence> witness;
};

std::string to_string(OverspillReport::Outcome o);

// throws std::invalid_argument unless f is positive with exactly one free variable
OverspillReport overspill_check(const Formula& f, std::uint64_t sample_range, const EvalBound& b);

KripkeModel model_from_json(const std::string& text);
std::string model_to_json(const KripkeModel& m);
KripkeModel load_model(const std::string& path);

}  // namespace bakit
