#pragma once

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "privcalc/context.hpp"

namespace privcalc {

using Statement = std::string;
using StatementSet = std::set<Statement>;

/// A named subset of the statement universe. Facts are identified by their
/// statements; the id is a display name.
struct Fact {
    std::string id;
    StatementSet statements;

    friend bool operator==(const Fact& a, const Fact& b) { return a.statements == b.statements; }
};

/// Id given to a fact that only exists because of closure: the sorted
/// statements joined by '+', or "{}" for the empty fact.
std::string synthesized_fact_id(const StatementSet& statements);

/// A finite family T of facts over a universe S.
///
/// Construction only checks that every fact lies inside the universe; use
/// close_family() to build a family that satisfies the closure properties and
/// verify_family() to audit one that was given explicitly. Facts with equal
/// statements collapse into one; later ids become aliases.
class FactFamily {
public:
    FactFamily() = default;
    FactFamily(StatementSet universe, std::vector<Fact> facts);

    const StatementSet& universe() const { return universe_; }
    /// Ordered by size, then lexicographically by statements.
    const std::vector<Fact>& facts() const { return facts_; }
    std::size_t size() const { return facts_.size(); }

    const Fact* find(std::string_view id) const;
    const Fact* find(const StatementSet& statements) const;
    bool contains(const StatementSet& statements) const { return find(statements) != nullptr; }

private:
    StatementSet universe_;
    std::vector<Fact> facts_;
    std::map<std::string, std::size_t, std::less<>> ids_;
};

/// Smallest family holding the generators, ∅ and S, closed under pairwise
/// union and intersection. Throws DeclarationError when a generator mentions a
/// statement outside the universe.
FactFamily close_family(const StatementSet& universe, const std::vector<Fact>& generators);

struct VerificationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

VerificationReport verify_family(const FactFamily& family);

/// A boolean function on facts.
///
/// Witness conditions hold on a fact that shares at least one statement with
/// the witness set. Table conditions look the fact up by its statements.
/// High-order conditions delegate to a predicate, typically a compliance or
/// congruence check between privileges. Conditions compare by id.
class Condition {
public:
    enum class Kind { ConstantTrue, ConstantFalse, Witness, Table, HighOrder };
    using Predicate = std::function<bool(const Fact&, const EvalContext&)>;
    using Assignment = std::map<StatementSet, bool>;

    static Condition constant(bool value, std::string id = {});
    static Condition witness(std::string id, StatementSet witnesses);
    static Condition table(std::string id, Assignment assignment);
    static Condition high_order(std::string id, Predicate predicate);

    Kind kind() const;
    const std::string& id() const;
    const StatementSet& witnesses() const;
    const Assignment& assignment() const;
    const Predicate& predicate() const;

    friend bool operator==(const Condition& a, const Condition& b) { return a.id() == b.id(); }
    friend auto operator<=>(const Condition& a, const Condition& b) { return a.id() <=> b.id(); }

private:
    struct Impl;
    explicit Condition(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Throws EvaluationError for a table condition asked about an unlisted fact.
bool eval_condition(const Condition& condition, const Fact& fact, const EvalContext& context = {});

/// Checks r(x1 ∪ x2) = r(x1) ∨ r(x2) for every disjoint pair of the family.
/// High-order conditions are rejected with EvaluationError.
VerificationReport verify_condition_axiom(const Condition& condition, const FactFamily& family);

/// Every fact of the family on which the condition holds.
std::vector<Fact> evidences(const Condition& condition, const FactFamily& family,
                            const EvalContext& context = {});

/// The ⊆-minimal evidences.
std::vector<Fact> minimum_evidences(const Condition& condition, const FactFamily& family,
                                    const EvalContext& context = {});

/// Contents of a facts file after closure.
struct FactsFile {
    FactFamily family;
    std::vector<Condition> conditions;  // declaration order
};

/// Parses the line-oriented facts format:
///
///     statement <id>
///     fact <id> = <stmt> ...
///     condition <id> = any <stmt> ...
///     condition <id> = true | false
///
/// `#` starts a comment. Errors are DeclarationError with file:line:column.
FactsFile parse_facts(std::string_view text, const std::string& filename = "<facts>");
FactsFile load_facts_file(const std::string& path);

}  // namespace privcalc
