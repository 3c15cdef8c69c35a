#include "privcalc/privilege.hpp"

#include <algorithm>
#include <optional>

#include "privcalc/error.hpp"

namespace privcalc {

ConditionSet::ConditionSet(std::initializer_list<Condition> items)
    : ConditionSet(std::vector<Condition>(items)) {}

ConditionSet::ConditionSet(std::vector<Condition> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

void ConditionSet::insert(const Condition& c) {
    auto it = std::lower_bound(items_.begin(), items_.end(), c);
    if (it == items_.end() || *it != c) items_.insert(it, c);
}

ConditionSet ConditionSet::intersect(const ConditionSet& other) const {
    ConditionSet out;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                          std::back_inserter(out.items_));
    return out;
}

ConditionSet ConditionSet::unite(const ConditionSet& other) const {
    ConditionSet out;
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(out.items_));
    return out;
}

bool ConditionSet::holds(const Fact& fact, const EvalContext& context) const {
    return std::all_of(items_.begin(), items_.end(),
                       [&](const Condition& c) { return eval_condition(c, fact, context); });
}

Privilege::Privilege(std::initializer_list<PrivilegeAtom> atoms) {
    for (const auto& a : atoms) insert(a);
}

Privilege Privilege::of(Employment employment, ConditionSet conditions) {
    Privilege p;
    p.insert({std::move(employment), std::move(conditions)});
    return p;
}

void Privilege::insert(PrivilegeAtom atom) {
    if (atom.employment.is_empty()) return;
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
    if (it == atoms_.end() || *it != atom) atoms_.insert(it, std::move(atom));
}

Privilege merge(const Privilege& u, const Privilege& v, MergeMode mode) {
    Privilege out;
    for (const auto& a : u) {
        for (const auto& b : v) {
            Employment e = merge(a.employment, b.employment);
            if (e.is_empty()) continue;
            out.insert({std::move(e), mode == MergeMode::Intersection ? a.conditions.intersect(b.conditions)
                                                                      : a.conditions.unite(b.conditions)});
        }
    }
    return out;
}

Privilege compose(const Privilege& u, const Privilege& v) {
    Privilege out = u;
    for (const auto& b : v) out.insert(b);
    return out;
}

Privilege with_condition(const Privilege& p, const Condition& condition) {
    Privilege out;
    for (const auto& a : p) {
        ConditionSet r = a.conditions;
        r.insert(condition);
        out.insert({a.employment, std::move(r)});
    }
    return out;
}

std::string to_string(const Privilege& p) {
    if (p.empty()) return "0";
    std::string out;
    auto term = [&](const std::string& head, const ConditionSet& r) {
        if (!out.empty()) out += " + ";
        out += head;
        for (const auto& c : r) out += " * " + c.id();
    };
    for (const auto& a : p) {
        const auto& f = a.employment.function().name;
        const auto& e = a.employment.entities();
        if (e.is_universal())
            term(f, a.conditions);
        else if (!e.label().empty())
            term(f + "/" + e.label(), a.conditions);
        else
            for (const auto& member : e.members()) term(f + "/" + member.name, a.conditions);
    }
    return out;
}

Arrangement::Arrangement(std::vector<Employment> basis) : basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].is_empty()) throw ArrangementError("arrangement element " + std::to_string(i + 1) + " is empty");
        for (std::size_t j = 0; j < i; ++j) {
            if (!merge(basis_[i], basis_[j]).is_empty())
                throw ArrangementError("arrangement elements " + to_string(basis_[j]) + " and " +
                                       to_string(basis_[i]) + " overlap");
        }
    }
}

Arrangement atomic_arrangement(const std::vector<FunctionSymbol>& functions,
                               const std::vector<Entity>& entities) {
    std::vector<Employment> basis;
    for (const auto& f : functions)
        for (const auto& e : entities) basis.push_back(Employment::atom(f, EntitySet::of({e})));
    return Arrangement(std::move(basis));
}

std::string to_string(const Arrangement& m) {
    std::string out;
    for (const auto& e : m.basis()) {
        if (!out.empty()) out += " + ";
        out += to_string(e);
    }
    return out;
}

void Coefficient::add(const ConditionSet& conjunction) {
    if (is_true()) return;
    if (conjunction.empty()) {
        disjuncts_.assign(1, conjunction);
        return;
    }
    auto it = std::lower_bound(disjuncts_.begin(), disjuncts_.end(), conjunction);
    if (it == disjuncts_.end() || *it != conjunction) disjuncts_.insert(it, conjunction);
}

bool Coefficient::eval(const Fact& fact, const EvalContext& context) const {
    return std::any_of(disjuncts_.begin(), disjuncts_.end(),
                       [&](const ConditionSet& r) { return r.holds(fact, context); });
}

std::string to_string(const Coefficient& c) {
    if (c.is_false()) return "false";
    if (c.is_true()) return "true";
    std::string out;
    for (const auto& r : c.disjuncts()) {
        if (!out.empty()) out += " | ";
        std::string conj;
        for (const auto& cond : r) {
            if (!conj.empty()) conj += " & ";
            conj += cond.id();
        }
        out += conj;
    }
    return out;
}

NormalForm normal_form(const Privilege& p, const Arrangement& m) {
    NormalForm nf{m, std::vector<Coefficient>(m.size())};
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& a : p)
            if (!merge(a.employment, m.basis()[i]).is_empty()) nf.coefficients[i].add(a.conditions);
    return nf;
}

Privilege from_normal_form(const NormalForm& nf) {
    Privilege out;
    for (std::size_t i = 0; i < nf.arrangement.size(); ++i)
        for (const auto& r : nf.coefficients[i].disjuncts()) out.insert({nf.arrangement.basis()[i], r});
    return out;
}

namespace {

EvalContext with_defaults(const EvalContext& context, const Arrangement& m, const FactFamily* family) {
    EvalContext ctx = context;
    if (!ctx.arrangement) ctx.arrangement = &m;
    if (!ctx.family) ctx.family = family;
    return ctx;
}

}  // namespace

PulsedForm pulse(const NormalForm& nf, const Fact& t, const EvalContext& context) {
    EvalContext ctx = with_defaults(context, nf.arrangement, nullptr);
    PulsedForm out{nf.arrangement, {}};
    out.bits.reserve(nf.coefficients.size());
    for (const auto& c : nf.coefficients) out.bits.push_back(c.eval(t, ctx));
    return out;
}

PulsedForm pulse(const Privilege& p, const Arrangement& m, const Fact& t, const EvalContext& context) {
    return pulse(normal_form(p, m), t, context);
}

TraceMatrix trace(const Privilege& p, const Arrangement& m, const std::vector<Fact>& sequence,
                  const EvalContext& context) {
    NormalForm nf = normal_form(p, m);
    TraceMatrix out{m, sequence, std::vector<std::vector<bool>>(m.size(), std::vector<bool>(sequence.size()))};
    for (std::size_t j = 0; j < sequence.size(); ++j) {
        PulsedForm column = pulse(nf, sequence[j], context);
        for (std::size_t i = 0; i < m.size(); ++i) out.cells[i][j] = column.bits[i];
    }
    return out;
}

std::string to_csv(const TraceMatrix& matrix) {
    std::string out = "employment";
    for (const auto& t : matrix.sequence) out += "," + t.id;
    out += "\n";
    for (std::size_t i = 0; i < matrix.arrangement.size(); ++i) {
        out += to_string(matrix.arrangement.basis()[i]);
        for (bool bit : matrix.cells[i]) out += bit ? ",1" : ",0";
        out += "\n";
    }
    return out;
}

bool structural_eq(const Privilege& u, const Privilege& v, const Arrangement& m, const FactFamily& family,
                   const EvalContext& context) {
    EvalContext ctx = with_defaults(context, m, &family);
    NormalForm a = normal_form(u, m);
    NormalForm b = normal_form(v, m);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (a.coefficients[i] == b.coefficients[i]) continue;
        for (const auto& t : family.facts())
            if (a.coefficients[i].eval(t, ctx) != b.coefficients[i].eval(t, ctx)) return false;
    }
    return true;
}

bool congruent(const Privilege& u, const Privilege& v, const Arrangement& m, const Fact& t,
               const EvalContext& context) {
    return pulse(u, m, t, context).bits == pulse(v, m, t, context).bits;
}

bool compliant(const Privilege& p, const Privilege& q, const Arrangement& m, const Fact& t,
               const EvalContext& context) {
    return congruent(merge(p, q, context.merge_mode), q, m, t, context);
}

namespace {

enum class GuardKind { Compliance, Congruence };

std::string guard_id(GuardKind kind, const Privilege& p, const Privilege& q, const Arrangement* m) {
    std::string id = "[" + to_string(p) + (kind == GuardKind::Compliance ? " <: " : " ~ ") + to_string(q);
    if (m) id += " | " + to_string(*m);
    return id + "]";
}

Condition guard_condition(GuardKind kind, Privilege p, Privilege q, std::optional<Arrangement> m) {
    std::string id = guard_id(kind, p, q, m ? &*m : nullptr);
    return Condition::high_order(
        std::move(id), [kind, p = std::move(p), q = std::move(q), m = std::move(m)](
                           const Fact& t, const EvalContext& context) {
            const Arrangement* arrangement = m ? &*m : context.arrangement;
            if (!arrangement)
                throw EvaluationError("guard condition needs an arrangement in its evaluation context");
            EvalContext inner = context;
            inner.arrangement = arrangement;
            return kind == GuardKind::Compliance ? compliant(p, q, *arrangement, t, inner)
                                                 : congruent(p, q, *arrangement, t, inner);
        });
}

}  // namespace

Condition compliance_condition(const Privilege& p, const Privilege& q, const Arrangement& m) {
    return guard_condition(GuardKind::Compliance, p, q, m);
}

Condition compliance_condition(const Privilege& p, const Privilege& q) {
    return guard_condition(GuardKind::Compliance, p, q, std::nullopt);
}

Condition congruence_condition(const Privilege& u, const Privilege& v, const Arrangement& m) {
    return guard_condition(GuardKind::Congruence, u, v, m);
}

Condition congruence_condition(const Privilege& u, const Privilege& v) {
    return guard_condition(GuardKind::Congruence, u, v, std::nullopt);
}

}  // namespace privcalc
