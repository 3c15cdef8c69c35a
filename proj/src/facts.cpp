#include "privcalc/facts.hpp"

#include <algorithm>
#include <iterator>

#include "privcalc/error.hpp"

namespace privcalc {

namespace {

StatementSet set_union(const StatementSet& a, const StatementSet& b) {
    StatementSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

StatementSet set_intersection(const StatementSet& a, const StatementSet& b) {
    StatementSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
    return out;
}

bool disjoint(const StatementSet& a, const StatementSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return false;
    }
    return true;
}

bool fact_order(const Fact& a, const Fact& b) {
    if (a.statements.size() != b.statements.size())
        return a.statements.size() < b.statements.size();
    return a.statements < b.statements;
}

std::string show(const StatementSet& s) {
    std::string out = "{";
    for (const auto& x : s) {
        if (out.size() > 1) out += ',';
        out += x;
    }
    return out + "}";
}

}  // namespace

std::string synthesized_fact_id(const StatementSet& statements) {
    if (statements.empty()) return "{}";
    std::string out;
    for (const auto& s : statements) {
        if (!out.empty()) out += '+';
        out += s;
    }
    return out;
}

FactFamily::FactFamily(StatementSet universe, std::vector<Fact> facts)
    : universe_(std::move(universe)) {
    std::vector<std::pair<std::string, StatementSet>> aliases;
    for (auto& f : facts) {
        for (const auto& s : f.statements)
            if (!universe_.contains(s))
                throw DeclarationError("fact '" + f.id + "' uses unknown statement '" + s + "'");
        if (f.id.empty()) f.id = synthesized_fact_id(f.statements);
        aliases.emplace_back(f.id, f.statements);
    }
    std::stable_sort(facts.begin(), facts.end(), fact_order);
    for (auto& f : facts)
        if (facts_.empty() || facts_.back().statements != f.statements) facts_.push_back(std::move(f));
    for (const auto& [id, statements] : aliases) {
        auto it = std::lower_bound(facts_.begin(), facts_.end(), Fact{id, statements}, fact_order);
        ids_.emplace(id, static_cast<std::size_t>(it - facts_.begin()));
    }
}

const Fact* FactFamily::find(std::string_view id) const {
    auto it = ids_.find(id);
    return it == ids_.end() ? nullptr : &facts_[it->second];
}

const Fact* FactFamily::find(const StatementSet& statements) const {
    Fact probe{{}, statements};
    auto it = std::lower_bound(facts_.begin(), facts_.end(), probe, fact_order);
    if (it == facts_.end() || it->statements != statements) return nullptr;
    return &*it;
}

FactFamily close_family(const StatementSet& universe, const std::vector<Fact>& generators) {
    for (const auto& g : generators)
        for (const auto& s : g.statements)
            if (!universe.contains(s))
                throw DeclarationError("fact '" + g.id + "' uses unknown statement '" + s + "'");

    std::set<StatementSet> members{StatementSet{}, universe};
    for (const auto& g : generators) members.insert(g.statements);

    // Pairwise closure reaches the fixed point; for a finite family that is
    // the same as closure under arbitrary unions and intersections.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<StatementSet> current(members.begin(), members.end());
        for (std::size_t i = 0; i < current.size(); ++i) {
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                grew |= members.insert(set_union(current[i], current[j])).second;
                grew |= members.insert(set_intersection(current[i], current[j])).second;
            }
        }
    }

    std::vector<Fact> facts = generators;
    for (const auto& m : members) facts.push_back({synthesized_fact_id(m), m});
    return FactFamily(universe, std::move(facts));
}

VerificationReport verify_family(const FactFamily& family) {
    VerificationReport report;
    if (!family.contains({})) report.violations.push_back("empty fact {} is missing");
    if (!family.contains(family.universe()))
        report.violations.push_back("universe " + show(family.universe()) + " is missing");
    const auto& facts = family.facts();
    for (std::size_t i = 0; i < facts.size(); ++i) {
        for (std::size_t j = i + 1; j < facts.size(); ++j) {
            const auto& a = facts[i].statements;
            const auto& b = facts[j].statements;
            if (auto u = set_union(a, b); !family.contains(u))
                report.violations.push_back("union " + show(a) + " ∪ " + show(b) + " = " + show(u) +
                                            " is missing");
            if (auto n = set_intersection(a, b); !family.contains(n))
                report.violations.push_back("intersection " + show(a) + " ∩ " + show(b) + " = " +
                                            show(n) + " is missing");
        }
    }
    return report;
}

struct Condition::Impl {
    Kind kind;
    std::string id;
    StatementSet witnesses;
    Assignment assignment;
    Predicate predicate;
};

Condition Condition::constant(bool value, std::string id) {
    if (id.empty()) id = value ? "true" : "false";
    return Condition(std::make_shared<const Impl>(
        Impl{value ? Kind::ConstantTrue : Kind::ConstantFalse, std::move(id), {}, {}, {}}));
}

Condition Condition::witness(std::string id, StatementSet witnesses) {
    return Condition(
        std::make_shared<const Impl>(Impl{Kind::Witness, std::move(id), std::move(witnesses), {}, {}}));
}

Condition Condition::table(std::string id, Assignment assignment) {
    return Condition(
        std::make_shared<const Impl>(Impl{Kind::Table, std::move(id), {}, std::move(assignment), {}}));
}

Condition Condition::high_order(std::string id, Predicate predicate) {
    return Condition(std::make_shared<const Impl>(
        Impl{Kind::HighOrder, std::move(id), {}, {}, std::move(predicate)}));
}

Condition::Kind Condition::kind() const { return impl_->kind; }
const std::string& Condition::id() const { return impl_->id; }
const StatementSet& Condition::witnesses() const { return impl_->witnesses; }
const Condition::Assignment& Condition::assignment() const { return impl_->assignment; }
const Condition::Predicate& Condition::predicate() const { return impl_->predicate; }

bool eval_condition(const Condition& condition, const Fact& fact, const EvalContext& context) {
    switch (condition.kind()) {
        case Condition::Kind::ConstantTrue:
            return true;
        case Condition::Kind::ConstantFalse:
            return false;
        case Condition::Kind::Witness:
            return !disjoint(condition.witnesses(), fact.statements);
        case Condition::Kind::Table: {
            auto it = condition.assignment().find(fact.statements);
            if (it == condition.assignment().end())
                throw EvaluationError("condition '" + condition.id() + "' is not defined on fact " +
                                      show(fact.statements));
            return it->second;
        }
        case Condition::Kind::HighOrder:
            return condition.predicate()(fact, context);
    }
    return false;
}

VerificationReport verify_condition_axiom(const Condition& condition, const FactFamily& family) {
    if (condition.kind() == Condition::Kind::HighOrder)
        throw EvaluationError("condition '" + condition.id() +
                              "' is high-order; the disjoint-union axiom is not checked for it");
    VerificationReport report;
    EvalContext context{&family, nullptr, MergeMode::Intersection};
    const auto& facts = family.facts();
    for (std::size_t i = 0; i < facts.size(); ++i) {
        for (std::size_t j = i; j < facts.size(); ++j) {
            const auto& a = facts[i];
            const auto& b = facts[j];
            if (!disjoint(a.statements, b.statements)) continue;
            Fact joined{{}, set_union(a.statements, b.statements)};
            try {
                bool lhs = eval_condition(condition, joined, context);
                bool rhs = eval_condition(condition, a, context) || eval_condition(condition, b, context);
                if (lhs != rhs)
                    report.violations.push_back(condition.id() + "(" + show(a.statements) + " ∪ " +
                                                show(b.statements) + ") = " + (lhs ? "1" : "0") +
                                                " but disjunction = " + (rhs ? "1" : "0"));
            } catch (const EvaluationError& e) {
                report.violations.push_back(e.message());
            }
        }
    }
    return report;
}

std::vector<Fact> evidences(const Condition& condition, const FactFamily& family,
                            const EvalContext& context) {
    EvalContext ctx = context;
    if (!ctx.family) ctx.family = &family;
    std::vector<Fact> out;
    for (const auto& f : family.facts())
        if (eval_condition(condition, f, ctx)) out.push_back(f);
    return out;
}

std::vector<Fact> minimum_evidences(const Condition& condition, const FactFamily& family,
                                    const EvalContext& context) {
    auto all = evidences(condition, family, context);
    std::vector<Fact> out;
    for (const auto& x : all) {
        bool minimal = std::none_of(all.begin(), all.end(), [&](const Fact& y) {
            return y.statements.size() < x.statements.size() &&
                   std::includes(x.statements.begin(), x.statements.end(), y.statements.begin(),
                                 y.statements.end());
        });
        if (minimal) out.push_back(x);
    }
    return out;
}

}  // namespace privcalc
