#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "privcalc/error.hpp"
#include "privcalc/facts.hpp"
#include "privcalc/pal.hpp"
#include "privcalc/privilege.hpp"

namespace privcalc {

/// Function used for a guard that stands alone instead of guarding an action.
inline constexpr const char* kGuardFunction = "guard";

struct Diagnostic {
    SourceLocation where;
    std::string message;

    std::string str() const { return where.str() + ": " + message; }
};

/// Name bindings of one namespace, plus the facts and arrangements queries
/// run against.
///
/// Functions, entities, categories and conditions live in disjoint symbol
/// spaces. A name may additionally carry a privilege only when it is an
/// entity (or nothing else), which is how `doc1` can be both the entity in
/// `read/doc1` and the privilege `doc1 := readable + writable`.
class Environment {
public:
    enum class Kind { Function, Entity, Category, Condition, Privilege };

    explicit Environment(std::string name = {}, MergeMode mode = MergeMode::Intersection);

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    MergeMode merge_mode() const { return mode_; }

    /// Replaces the fact family and registers the file's conditions.
    /// Throws ResolutionError when a condition id is already bound.
    void use_facts(const FactsFile& facts);
    const FactFamily& family() const { return family_; }

    std::optional<Kind> kind_of(const std::string& name) const;
    bool is_function(const std::string& name) const;
    bool is_entity(const std::string& name) const;
    const Category* category(const std::string& name) const;
    const Condition* condition(const std::string& name) const;
    const Privilege* privilege(const std::string& name) const;

    /// In order of introduction.
    std::vector<FunctionSymbol> functions() const;
    std::vector<Entity> entities() const;
    std::vector<std::string> privilege_names() const;

    void add_arrangement(const std::string& name, Arrangement m);
    const Arrangement* arrangement(const std::string& name) const;

    const std::vector<Diagnostic>& warnings() const { return warnings_; }

    // Mutators used while loading. Each throws ResolutionError on a kind clash.
    void declare_function(const std::string& name, const SourceLocation& where);
    void let(const std::string& entity, const std::string& category, const SourceLocation& where);
    void define(const std::string& name, Privilege value, const SourceLocation& where);
    void warn(SourceLocation where, std::string message);

private:
    void introduce(const std::string& name, Kind kind);

    std::string name_;
    MergeMode mode_;
    FactFamily family_;
    std::vector<std::string> order_;  // first introduction
    std::map<std::string, Kind> kinds_;
    std::map<std::string, Category> categories_;
    std::map<std::string, Condition> conditions_;
    std::map<std::string, Privilege> privileges_;
    std::map<std::string, Arrangement> arrangements_;
    std::vector<Diagnostic> warnings_;
};

/// Runs the statements of one namespace in order. With an unnamed
/// environment the first namespace is used and its name adopted; a named
/// environment must match a namespace of the program.
Environment load_program(const pal::Program& ast, Environment env, const std::string& filename = "<pal>");

/// Undeclared bare names become functions over every entity.
Privilege eval_expr(const pal::ExprNode& node, Environment& env, const std::string& filename = "<expr>");

/// Flattens the top-level sum of each expression, in order, into a basis.
Arrangement load_arrangement(const std::vector<pal::Expr>& exprs, Environment& env,
                             const std::string& filename = "<arrangement>");
Arrangement load_arrangement(const pal::ExprNode& expr, Environment& env,
                             const std::string& filename = "<arrangement>");

/// The narrowing applied by `p/C`.
Privilege restrict(const Privilege& p, const EntitySet& scope);

/// Role-based model: operations on object categories, assigned to roles,
/// with role inheritance and user-role assignment.
struct RbacModel {
    std::vector<std::string> operations;
    std::vector<std::string> categories;
    std::map<std::string, std::string> objects;  // object -> category
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> roles;  // role -> (op, cat)
    std::vector<std::pair<std::string, std::string>> hierarchy;  // (senior, junior)
    std::map<std::string, std::vector<std::string>> users;
};

/// Reads the line-oriented RBAC format:
///
///     op <id>
///     cat <id>
///     obj <id> is <cat>
///     role <id> = <op>/<cat>, ...
///     inherits <senior> <junior>
///     user <id> = <role>, ...
RbacModel parse_rbac(std::string_view text, const std::string& filename = "<rbac>");
RbacModel load_rbac_file(const std::string& path);

/// Emits one PAL namespace. Objects become `let` statements (a category with
/// no objects gets `<cat>_obj`), roles are defined juniors-first with each
/// junior composed by name, users compose their roles.
/// Throws ImportError on dangling references, cycles or empty roles.
pal::Program import_rbac(const RbacModel& model, const std::string& namespace_name = "rbac");

struct Query {
    enum class Kind { Eval, NormalForm, Equal, Pulse, Trace, Comply, Congruent };

    Kind kind = Kind::Eval;
    std::string expr;                // the privilege, or the left/p side
    std::string other;               // right/q side for Equal, Comply, Congruent
    std::vector<std::string> facts;  // one id for Pulse/Comply/Congruent, the sequence for Trace
};

struct QueryResult {
    Query query;
    std::optional<bool> verdict;  // Equal, Comply, Congruent
    std::string output;
};

struct ScenarioInput {
    std::string program;
    std::string program_file = "<pal>";
    std::string namespace_name;       // empty: first namespace
    std::optional<FactsFile> facts;
    std::string arrangement;          // PAL expression; required by all but Eval
    MergeMode merge_mode = MergeMode::Intersection;
    std::vector<Query> queries;
};

struct Report {
    std::vector<QueryResult> results;
    std::vector<Diagnostic> warnings;
    std::vector<Diagnostic> errors;

    bool ok() const { return errors.empty(); }
};

/// Parses and loads the program, builds the arrangement, then answers each
/// query. Failures are collected rather than thrown; a failing query is
/// reported and the rest still run.
Report run_scenario(const ScenarioInput& input);

}  // namespace privcalc
