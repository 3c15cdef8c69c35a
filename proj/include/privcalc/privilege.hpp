#pragma once

#include <string>
#include <vector>

#include "privcalc/algebra.hpp"
#include "privcalc/context.hpp"
#include "privcalc/facts.hpp"

namespace privcalc {

/// A set of conditions read conjunctively. Empty means unconditioned.
class ConditionSet {
public:
    ConditionSet() = default;
    ConditionSet(std::initializer_list<Condition> items);
    explicit ConditionSet(std::vector<Condition> items);

    void insert(const Condition& c);

    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    ConditionSet intersect(const ConditionSet& other) const;
    ConditionSet unite(const ConditionSet& other) const;

    /// True when every member holds at the fact.
    bool holds(const Fact& fact, const EvalContext& context) const;

    friend bool operator==(const ConditionSet&, const ConditionSet&) = default;
    friend auto operator<=>(const ConditionSet& a, const ConditionSet& b) {
        return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(),
                                                      b.items_.begin(), b.items_.end());
    }

private:
    std::vector<Condition> items_;  // sorted by id, unique
};

/// (f/E, R) with a non-empty employment.
struct PrivilegeAtom {
    Employment employment;
    ConditionSet conditions;

    friend bool operator==(const PrivilegeAtom&, const PrivilegeAtom&) = default;
    friend std::strong_ordering operator<=>(const PrivilegeAtom& a, const PrivilegeAtom& b) {
        if (auto c = a.employment <=> b.employment; c != 0) return c;
        return a.conditions <=> b.conditions;
    }
};

/// A finite set of atoms, kept in canonical order: function name, then entity
/// names, then condition ids. The empty privilege is the identity of compose.
class Privilege {
public:
    Privilege() = default;
    Privilege(std::initializer_list<PrivilegeAtom> atoms);

    static Privilege of(Employment employment, ConditionSet conditions = {});

    /// Atoms with an Empty employment are dropped.
    void insert(PrivilegeAtom atom);

    bool empty() const { return atoms_.empty(); }
    std::size_t size() const { return atoms_.size(); }
    const std::vector<PrivilegeAtom>& atoms() const { return atoms_; }
    auto begin() const { return atoms_.begin(); }
    auto end() const { return atoms_.end(); }

    friend bool operator==(const Privilege&, const Privilege&) = default;
    friend auto operator<=>(const Privilege& a, const Privilege& b) {
        return std::lexicographical_compare_three_way(a.atoms_.begin(), a.atoms_.end(),
                                                      b.atoms_.begin(), b.atoms_.end());
    }

private:
    std::vector<PrivilegeAtom> atoms_;
};

/// u * v: pairwise employment mergence; condition sets combine by `mode`.
Privilege merge(const Privilege& u, const Privilege& v, MergeMode mode = MergeMode::Intersection);

/// u + v: union of atoms.
Privilege compose(const Privilege& u, const Privilege& v);

/// Adds `condition` to the condition set of every atom. This is how a guard
/// is attached to an action: read * [p <: q].
Privilege with_condition(const Privilege& p, const Condition& condition);

/// Canonical PAL text: atoms joined by " + ", each written `f`, `f/C` or
/// `f/e`, followed by ` * r` for every condition. Unlabeled sets with several
/// entities are split into one term per entity. The empty privilege is `0`.
std::string to_string(const Privilege& p);

/// A finite basis of pairwise merge-disjoint employments. Order only matters
/// for display.
class Arrangement {
public:
    Arrangement() = default;
    /// Throws ArrangementError on an Empty element or an overlapping pair.
    explicit Arrangement(std::vector<Employment> basis);

    const std::vector<Employment>& basis() const { return basis_; }
    std::size_t size() const { return basis_.size(); }

    friend bool operator==(const Arrangement&, const Arrangement&) = default;

private:
    std::vector<Employment> basis_;
};

/// One singleton employment f/{e} per function and entity.
Arrangement atomic_arrangement(const std::vector<FunctionSymbol>& functions,
                               const std::vector<Entity>& entities);

std::string to_string(const Arrangement& m);

/// A disjunction of conjunctions of conditions. No disjuncts is constant
/// false; an empty disjunct makes the whole coefficient constant true and is
/// folded to exactly that.
class Coefficient {
public:
    Coefficient() = default;

    void add(const ConditionSet& conjunction);

    bool is_false() const { return disjuncts_.empty(); }
    bool is_true() const { return disjuncts_.size() == 1 && disjuncts_.front().empty(); }
    const std::vector<ConditionSet>& disjuncts() const { return disjuncts_; }

    bool eval(const Fact& fact, const EvalContext& context) const;

    friend bool operator==(const Coefficient&, const Coefficient&) = default;

private:
    std::vector<ConditionSet> disjuncts_;  // sorted, unique
};

std::string to_string(const Coefficient& c);

struct NormalForm {
    Arrangement arrangement;
    std::vector<Coefficient> coefficients;  // one per basis element, in basis order
};

/// c_i is the disjunction, over atoms overlapping m_i, of their condition sets.
NormalForm normal_form(const Privilege& p, const Arrangement& m);

/// One atom per (basis element, disjunct) of the normal form.
Privilege from_normal_form(const NormalForm& nf);

struct PulsedForm {
    Arrangement arrangement;
    std::vector<bool> bits;

    friend bool operator==(const PulsedForm&, const PulsedForm&) = default;
};

PulsedForm pulse(const Privilege& p, const Arrangement& m, const Fact& t, const EvalContext& context = {});
PulsedForm pulse(const NormalForm& nf, const Fact& t, const EvalContext& context = {});

struct TraceMatrix {
    Arrangement arrangement;
    std::vector<Fact> sequence;
    std::vector<std::vector<bool>> cells;  // cells[row][column]

    bool at(std::size_t row, std::size_t column) const { return cells[row][column]; }
};

TraceMatrix trace(const Privilege& p, const Arrangement& m, const std::vector<Fact>& sequence,
                  const EvalContext& context = {});

/// Header `employment,<fact-id>,...`, then one `f/E,1,0,...` row per basis element.
std::string to_csv(const TraceMatrix& matrix);

/// Normal forms agree on every basis element at every fact of the family.
bool structural_eq(const Privilege& u, const Privilege& v, const Arrangement& m,
                   const FactFamily& family, const EvalContext& context = {});

/// Same pulsed form at t.
bool congruent(const Privilege& u, const Privilege& v, const Arrangement& m, const Fact& t,
               const EvalContext& context = {});

/// (p * q) congruent to q at t. Mergence uses the context's merge mode.
bool compliant(const Privilege& p, const Privilege& q, const Arrangement& m, const Fact& t,
               const EvalContext& context = {});

/// High-order condition t ↦ compliant(p, q, m, t). Snapshots its arguments.
Condition compliance_condition(const Privilege& p, const Privilege& q, const Arrangement& m);
/// As above, taking the arrangement from the evaluation context. Evaluating
/// without one is an EvaluationError.
Condition compliance_condition(const Privilege& p, const Privilege& q);

Condition congruence_condition(const Privilege& u, const Privilege& v, const Arrangement& m);
Condition congruence_condition(const Privilege& u, const Privilege& v);

}  // namespace privcalc
