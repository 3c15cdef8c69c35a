#include "privcalc/algebra.hpp"

#include <algorithm>
#include <iterator>

namespace privcalc {

EntitySet EntitySet::universal() {
    EntitySet s;
    s.universal_ = true;
    return s;
}

EntitySet EntitySet::of(std::vector<Entity> members, std::string label) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    EntitySet s;
    s.members_ = std::move(members);
    s.label_ = std::move(label);
    return s;
}

bool EntitySet::contains(const Entity& e) const {
    return universal_ || std::binary_search(members_.begin(), members_.end(), e);
}

bool EntitySet::subset_of(const EntitySet& other) const {
    if (other.universal_) return true;
    if (universal_) return false;
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

EntitySet EntitySet::intersect(const EntitySet& other) const {
    if (universal_) return other;
    if (other.universal_) return *this;
    EntitySet out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(out.members_));
    if (out.members_ == members_)
        out.label_ = label_;
    else if (out.members_ == other.members_)
        out.label_ = other.label_;
    return out;
}

EntitySet EntitySet::with_label(std::string label) const {
    EntitySet s = *this;
    s.label_ = std::move(label);
    return s;
}

std::strong_ordering operator<=>(const EntitySet& a, const EntitySet& b) {
    if (a.universal_ != b.universal_) return a.universal_ ? std::strong_ordering::less
                                                          : std::strong_ordering::greater;
    return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                  b.members_.begin(), b.members_.end());
}

EntitySet Category::entities() const {
    return EntitySet::of(std::vector<Entity>(members.begin(), members.end()), name);
}

Employment Employment::atom(FunctionSymbol function, EntitySet entities) {
    Employment e;
    if (function.name.empty() || entities.empty()) return e;
    e.empty_ = false;
    e.function_ = std::move(function);
    e.entities_ = std::move(entities);
    return e;
}

std::strong_ordering operator<=>(const Employment& a, const Employment& b) {
    if (a.empty_ || b.empty_) {
        if (a.empty_ == b.empty_) return std::strong_ordering::equal;
        return a.empty_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (auto c = a.function_ <=> b.function_; c != 0) return c;
    return a.entities_ <=> b.entities_;
}

EmploymentSet::EmploymentSet(std::initializer_list<Employment> items) {
    for (const auto& e : items) insert(e);
}

void EmploymentSet::insert(const Employment& e) {
    if (!e.is_empty()) items_.insert(e);
}

Employment merge(const Employment& a, const Employment& b) {
    if (a.is_empty() || b.is_empty()) return {};
    if (a.function() != b.function()) return {};
    return Employment::atom(a.function(), a.entities().intersect(b.entities()));
}

EmploymentSet merge(const EmploymentSet& a, const EmploymentSet& b) {
    EmploymentSet out;
    for (const auto& x : a)
        for (const auto& y : b) out.insert(merge(x, y));
    return out;
}

EmploymentSet compose(const EmploymentSet& a, const EmploymentSet& b) {
    EmploymentSet out = a;
    for (const auto& y : b) out.insert(y);
    return out;
}

EmploymentSet expand(const std::set<FunctionSymbol>& functions, const EntitySet& entities) {
    EmploymentSet out;
    for (const auto& f : functions) out.insert(Employment::atom(f, entities));
    return out;
}

EmploymentSet restrict(const EmploymentSet& set, const EntitySet& scope) {
    EmploymentSet out;
    for (const auto& e : set)
        out.insert(Employment::atom(e.function(), e.entities().intersect(scope)));
    return out;
}

std::string to_string(const EntitySet& entities) {
    if (entities.is_universal()) return "*";
    if (!entities.label().empty()) return entities.label();
    std::string out = "{";
    for (std::size_t i = 0; i < entities.members().size(); ++i) {
        if (i) out += ' ';
        out += entities.members()[i].name;
    }
    return out + "}";
}

std::string to_string(const Employment& employment) {
    if (employment.is_empty()) return "0";
    return employment.function().name + "/" + to_string(employment.entities());
}

}  // namespace privcalc
