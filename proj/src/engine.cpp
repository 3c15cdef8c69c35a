#include "privcalc/engine.hpp"

#include <algorithm>

namespace privcalc {

namespace {

const char* kind_name(Environment::Kind k) {
    switch (k) {
        case Environment::Kind::Function: return "function";
        case Environment::Kind::Entity: return "entity";
        case Environment::Kind::Category: return "category";
        case Environment::Kind::Condition: return "condition";
        case Environment::Kind::Privilege: return "privilege";
    }
    return "?";
}

SourceLocation at(const std::string& file, pal::Position pos) { return {file, pos.line, pos.column}; }

}  // namespace

Environment::Environment(std::string name, MergeMode mode)
    : name_(std::move(name)), mode_(mode), family_(close_family({}, {})) {}

void Environment::use_facts(const FactsFile& facts) {
    family_ = facts.family;
    for (const auto& c : facts.conditions) {
        if (auto k = kind_of(c.id()); k && *k != Kind::Condition)
            throw ResolutionError("condition '" + c.id() + "' clashes with " + kind_name(*k) + " '" + c.id() + "'");
        introduce(c.id(), Kind::Condition);
        conditions_.insert_or_assign(c.id(), c);
    }
}

void Environment::introduce(const std::string& name, Kind kind) {
    if (!kinds_.contains(name) && !privileges_.contains(name)) order_.push_back(name);
    if (kind != Kind::Privilege) kinds_.emplace(name, kind);
}

std::optional<Environment::Kind> Environment::kind_of(const std::string& name) const {
    if (auto it = kinds_.find(name); it != kinds_.end()) return it->second;
    if (privileges_.contains(name)) return Kind::Privilege;
    return std::nullopt;
}

bool Environment::is_function(const std::string& name) const {
    auto it = kinds_.find(name);
    return it != kinds_.end() && it->second == Kind::Function;
}

bool Environment::is_entity(const std::string& name) const {
    auto it = kinds_.find(name);
    return it != kinds_.end() && it->second == Kind::Entity;
}

const Category* Environment::category(const std::string& name) const {
    auto it = categories_.find(name);
    return it == categories_.end() ? nullptr : &it->second;
}

const Condition* Environment::condition(const std::string& name) const {
    auto it = conditions_.find(name);
    return it == conditions_.end() ? nullptr : &it->second;
}

const Privilege* Environment::privilege(const std::string& name) const {
    auto it = privileges_.find(name);
    return it == privileges_.end() ? nullptr : &it->second;
}

std::vector<FunctionSymbol> Environment::functions() const {
    std::vector<FunctionSymbol> out;
    for (const auto& n : order_)
        if (is_function(n)) out.push_back({n});
    return out;
}

std::vector<Entity> Environment::entities() const {
    std::vector<Entity> out;
    for (const auto& n : order_)
        if (is_entity(n)) out.push_back({n});
    return out;
}

std::vector<std::string> Environment::privilege_names() const {
    std::vector<std::string> out;
    for (const auto& n : order_)
        if (privileges_.contains(n)) out.push_back(n);
    return out;
}

void Environment::add_arrangement(const std::string& name, Arrangement m) {
    arrangements_.insert_or_assign(name, std::move(m));
}

const Arrangement* Environment::arrangement(const std::string& name) const {
    auto it = arrangements_.find(name);
    return it == arrangements_.end() ? nullptr : &it->second;
}

void Environment::declare_function(const std::string& name, const SourceLocation& where) {
    if (auto k = kind_of(name); k && *k != Kind::Function)
        throw ResolutionError("'" + name + "' is a " + kind_name(*k) + ", not a function", where);
    introduce(name, Kind::Function);
}

void Environment::let(const std::string& entity, const std::string& category, const SourceLocation& where) {
    if (auto it = kinds_.find(entity); it != kinds_.end() && it->second != Kind::Entity)
        throw ResolutionError("'" + entity + "' is a " + kind_name(it->second) + " and cannot be declared an entity",
                              where);
    if (auto k = kind_of(category); k && *k != Kind::Category)
        throw ResolutionError("'" + category + "' is a " + kind_name(*k) + ", not a category", where);
    if (entity == category) throw ResolutionError("'" + entity + "' cannot be a member of itself", where);
    introduce(entity, Kind::Entity);
    introduce(category, Kind::Category);
    auto& c = categories_[category];
    c.name = category;
    c.members.insert(Entity{entity});
}

void Environment::define(const std::string& name, Privilege value, const SourceLocation& where) {
    if (auto it = kinds_.find(name); it != kinds_.end() && it->second != Kind::Entity)
        throw ResolutionError("cannot define '" + name + "': it is a " + kind_name(it->second), where);
    if (privileges_.contains(name)) warn(where, "'" + name + "' is redefined");
    introduce(name, Kind::Privilege);
    privileges_.insert_or_assign(name, std::move(value));
}

void Environment::warn(SourceLocation where, std::string message) {
    warnings_.push_back({std::move(where), std::move(message)});
}

Privilege restrict(const Privilege& p, const EntitySet& scope) {
    Privilege out;
    for (const auto& a : p)
        out.insert({Employment::atom(a.employment.function(), a.employment.entities().intersect(scope)),
                    a.conditions});
    return out;
}

namespace {

// A guard term is a guard, a condition name, or a product of those. Next to
// an action in a product it attaches its conditions to the action's atoms;
// anywhere else it stands for an atom over the reserved guard function.
struct Value {
    Privilege privilege;
    std::optional<ConditionSet> guard;
};

Privilege guard_atom(const ConditionSet& conditions) {
    return Privilege::of(Employment::atom({kGuardFunction}, EntitySet::universal()), conditions);
}

Privilege attach(const Privilege& p, const ConditionSet& conditions) {
    Privilege out = p;
    for (const auto& c : conditions) out = with_condition(out, c);
    return out;
}

class Evaluator {
public:
    Evaluator(Environment& env, const std::string& file) : env_(env), file_(file) {}

    Value eval(const pal::ExprNode& e) {
        using K = pal::ExprNode::Kind;
        switch (e.kind) {
            case K::Name: return name(e);
            case K::Sum: return {compose(eval(*e.left).privilege, eval(*e.right).privilege), std::nullopt};
            case K::Product: {
                Value l = eval(*e.left);
                Value r = eval(*e.right);
                if (l.guard && r.guard) {
                    ConditionSet both = l.guard->unite(*r.guard);
                    return {guard_atom(both), both};
                }
                if (l.guard) return {attach(r.privilege, *l.guard), std::nullopt};
                if (r.guard) return {attach(l.privilege, *r.guard), std::nullopt};
                return {merge(l.privilege, r.privilege, env_.merge_mode()), std::nullopt};
            }
            case K::Slash: return {restrict(eval(*e.left).privilege, scope(e)), std::nullopt};
            case K::Guard: {
                Privilege p = eval(*e.left).privilege;
                Privilege q = eval(*e.right).privilege;
                Condition c = e.op == pal::GuardOp::Compliance ? compliance_condition(p, q)
                                                               : congruence_condition(p, q);
                ConditionSet g{c};
                return {guard_atom(g), g};
            }
        }
        return {};
    }

private:
    Value name(const pal::ExprNode& e) {
        if (const Privilege* p = env_.privilege(e.name)) return {*p, std::nullopt};
        auto kind = env_.kind_of(e.name);
        if (!kind) {
            env_.declare_function(e.name, at(file_, e.pos));
            kind = Environment::Kind::Function;
        }
        switch (*kind) {
            case Environment::Kind::Function:
                return {Privilege::of(Employment::atom({e.name}, EntitySet::universal())), std::nullopt};
            case Environment::Kind::Condition: {
                ConditionSet g{*env_.condition(e.name)};
                return {guard_atom(g), g};
            }
            case Environment::Kind::Entity:
                throw ResolutionError("entity '" + e.name + "' used as a privilege; write f/" + e.name +
                                          " to scope a function to it",
                                      at(file_, e.pos));
            case Environment::Kind::Category:
                throw ResolutionError("category '" + e.name + "' used as a privilege; write f/" + e.name +
                                          " to scope a function to it",
                                      at(file_, e.pos));
            case Environment::Kind::Privilege:
                break;
        }
        return {};
    }

    EntitySet scope(const pal::ExprNode& e) {
        if (const Category* c = env_.category(e.name)) return c->entities();
        if (env_.is_entity(e.name)) return EntitySet::of({Entity{e.name}}, e.name);
        auto kind = env_.kind_of(e.name);
        if (!kind)
            throw ResolutionError("'" + e.name + "' after '/' is neither a category nor an entity",
                                  at(file_, e.pos));
        throw ResolutionError(std::string("'") + e.name + "' after '/' is a " + kind_name(*kind) +
                                  "; expected a category or an entity",
                              at(file_, e.pos));
    }

    Environment& env_;
    const std::string& file_;
};

// Leaves of a top-level sum, in source order. A scope applied to a sum is
// pushed onto each summand so `(a + b)/C` keeps a before b.
void flatten_sum(const pal::Expr& e, std::vector<pal::Expr>& out) {
    if (e->kind == pal::ExprNode::Kind::Sum) {
        flatten_sum(e->left, out);
        flatten_sum(e->right, out);
    } else if (e->kind == pal::ExprNode::Kind::Slash && e->left->kind == pal::ExprNode::Kind::Sum) {
        std::vector<pal::Expr> inner;
        flatten_sum(e->left, inner);
        for (auto& leaf : inner) out.push_back(pal::ExprNode::make_slash(std::move(leaf), e->name, e->pos));
    } else {
        out.push_back(e);
    }
}

}  // namespace

Privilege eval_expr(const pal::ExprNode& node, Environment& env, const std::string& filename) {
    return Evaluator(env, filename).eval(node).privilege;
}

Environment load_program(const pal::Program& ast, Environment env, const std::string& filename) {
    if (ast.namespaces.empty()) return env;
    const pal::NamespaceNode* ns = nullptr;
    if (env.name().empty()) {
        ns = &ast.namespaces.front();
        env.set_name(ns->name);
    } else {
        for (const auto& n : ast.namespaces)
            if (n.name == env.name()) ns = &n;
        if (!ns) throw ResolutionError("no namespace \"" + env.name() + "\" in program", SourceLocation{filename, 0, 0});
    }
    for (const auto& s : ns->statements) {
        SourceLocation where = at(filename, s.pos);
        if (s.kind == pal::StatementNode::Kind::LetIs) {
            env.let(s.name, s.category, where);
        } else {
            Privilege value = Evaluator(env, filename).eval(*s.body).privilege;
            env.define(s.name, std::move(value), where);
        }
    }
    return env;
}

Arrangement load_arrangement(const std::vector<pal::Expr>& exprs, Environment& env, const std::string& filename) {
    std::vector<pal::Expr> leaves;
    for (const auto& e : exprs) flatten_sum(e, leaves);
    std::vector<Employment> basis;
    for (const auto& leaf : leaves) {
        Privilege p = eval_expr(*leaf, env, filename);
        for (const auto& a : p) {
            if (!a.conditions.empty())
                throw ArrangementError("arrangement element " + to_string(a.employment) + " carries conditions",
                                       at(filename, leaf->pos));
            basis.push_back(a.employment);
        }
    }
    try {
        return Arrangement(std::move(basis));
    } catch (const ArrangementError& e) {
        throw ArrangementError(e.message(), SourceLocation{filename, 0, 0});
    }
}

Arrangement load_arrangement(const pal::ExprNode& expr, Environment& env, const std::string& filename) {
    // Non-owning alias; the caller's tree outlives this call.
    return load_arrangement({pal::Expr(pal::Expr{}, &expr)}, env, filename);
}

}  // namespace privcalc
