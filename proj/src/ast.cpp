#include "hyplan/ast.hpp"

#include <algorithm>

namespace hyplan {

Expr Expr::make_and(std::vector<Expr> conjuncts) {
    Expr e;
    e.kind = ExprKind::Connective;
    e.conn = ConnectiveKind::And;
    e.children = std::move(conjuncts);
    return e;
}

const char *happening_kind_name(HappeningKind kind) {
    switch (kind) {
    case HappeningKind::Action:
        return "action";
    case HappeningKind::Event:
        return "event";
    case HappeningKind::Process:
        return "process";
    }
    return "?";
}

TypeHierarchy::TypeHierarchy() {
    names_.push_back("object");
    parent_["object"] = "object";
}

void TypeHierarchy::add(const std::string &name, const std::string &parent) {
    if (!parent_.count(name))
        names_.push_back(name);
    parent_[name] = parent;
}

bool TypeHierarchy::contains(const std::string &name) const {
    return parent_.count(name) > 0;
}

bool TypeHierarchy::is_subtype(const std::string &type, const std::string &ancestor) const {
    std::string cur = type;
    while (true) {
        if (cur == ancestor)
            return true;
        auto it = parent_.find(cur);
        if (it == parent_.end() || it->second == cur)
            return false;
        cur = it->second;
    }
}

const std::string &TypeHierarchy::parent(const std::string &name) const {
    return parent_.at(name);
}

namespace {

bool has_requirement(const std::vector<std::string> &reqs, const char *flag) {
    return std::any_of(reqs.begin(), reqs.end(),
                       [&](const std::string &r) { return r == flag; });
}

} // namespace

bool DomainModel::temporal() const { return has_requirement(requirements, ":time"); }

bool DomainModel::semantic_attachment() const {
    return has_requirement(requirements, ":semantic-attachment");
}

const PredicateDecl *DomainModel::find_predicate(const std::string &name) const {
    for (const auto &p : predicates)
        if (p.name == name)
            return &p;
    return nullptr;
}

const FunctionDecl *DomainModel::find_function(const std::string &name) const {
    for (const auto &f : functions)
        if (f.name == name)
            return &f;
    return nullptr;
}

} // namespace hyplan
