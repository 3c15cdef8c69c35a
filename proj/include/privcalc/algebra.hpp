#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace privcalc {

struct FunctionSymbol {
    std::string name;

    auto operator<=>(const FunctionSymbol&) const = default;
};

struct Entity {
    std::string name;

    auto operator<=>(const Entity&) const = default;
};

/// Either every entity (Universal) or an explicit finite set.
///
/// A finite set may carry a display label, normally the name of the category
/// it was taken from. The label never takes part in comparison.
class EntitySet {
public:
    EntitySet() = default;  // finite, empty

    static EntitySet universal();
    static EntitySet of(std::vector<Entity> members, std::string label = {});

    bool is_universal() const { return universal_; }
    bool empty() const { return !universal_ && members_.empty(); }
    const std::vector<Entity>& members() const { return members_; }
    const std::string& label() const { return label_; }

    bool contains(const Entity& e) const;
    bool subset_of(const EntitySet& other) const;

    /// Universal ∩ X = X. When the result equals one operand its label is kept,
    /// preferring the left one.
    EntitySet intersect(const EntitySet& other) const;

    EntitySet with_label(std::string label) const;

    friend bool operator==(const EntitySet& a, const EntitySet& b) {
        return a.universal_ == b.universal_ && a.members_ == b.members_;
    }
    /// Universal sorts first, then finite sets by their sorted member names.
    friend std::strong_ordering operator<=>(const EntitySet& a, const EntitySet& b);

private:
    bool universal_ = false;
    std::vector<Entity> members_;  // sorted, unique
    std::string label_;
};

/// A named group of entities, grown by `let e is C`.
struct Category {
    std::string name;
    std::set<Entity> members;

    EntitySet entities() const;
};

/// f/E, or the empty employment. An atom over an empty finite set is Empty.
class Employment {
public:
    Employment() = default;  // Empty

    static Employment atom(FunctionSymbol function, EntitySet entities);

    bool is_empty() const { return empty_; }
    const FunctionSymbol& function() const { return function_; }
    const EntitySet& entities() const { return entities_; }

    friend bool operator==(const Employment& a, const Employment& b) {
        if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
        return a.function_ == b.function_ && a.entities_ == b.entities_;
    }
    friend std::strong_ordering operator<=>(const Employment& a, const Employment& b);

private:
    bool empty_ = true;
    FunctionSymbol function_;
    EntitySet entities_;
};

/// A set of non-empty employments.
class EmploymentSet {
public:
    EmploymentSet() = default;
    EmploymentSet(std::initializer_list<Employment> items);

    void insert(const Employment& e);  // Empty is dropped

    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    bool contains(const Employment& e) const { return items_.contains(e); }

    friend bool operator==(const EmploymentSet&, const EmploymentSet&) = default;

private:
    std::set<Employment> items_;
};

/// Mergence of two employments: same function and a non-empty entity
/// intersection give f/(E_a ∩ E_b); everything else is Empty. Symmetric.
Employment merge(const Employment& a, const Employment& b);

/// { a * b ≠ Empty | a ∈ A, b ∈ B }
EmploymentSet merge(const EmploymentSet& a, const EmploymentSet& b);

EmploymentSet compose(const EmploymentSet& a, const EmploymentSet& b);

/// F/E as one atom per function sharing the entity set.
EmploymentSet expand(const std::set<FunctionSymbol>& functions, const EntitySet& entities);

/// Narrows every atom to E ∩ scope, dropping atoms that vanish.
EmploymentSet restrict(const EmploymentSet& set, const EntitySet& scope);

/// Display form of an entity set: the label, `{a b}` for an unlabeled finite
/// set, `*` for Universal.
std::string to_string(const EntitySet& entities);

/// `f/E` using to_string(EntitySet); `0` for Empty.
std::string to_string(const Employment& employment);

}  // namespace privcalc
