#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyplan/errors.hpp"

namespace hyplan {

enum class ExprKind {
    Number,       // literal
    FluentRef,    // numeric function with argument terms
    PropRef,      // predicate with argument terms
    Op,           // registered operator application
    TimeStep,     // #t, the continuous-effect time symbol
    TotalTime,    // metric-only
    TotalActions, // metric-only
    Compare,
    Connective,
    Effect,
    ParamEquality, // (= ?a ?b) over schema parameters
};

enum class CompareOp { Lt, Le, Gt, Ge, Eq };
enum class ConnectiveKind { And, Or, Not };
enum class EffectKind { Assign, Increase, Decrease, SetProp, ClearProp };

// One node of a parsed PDDL expression. Fluent/proposition argument terms
// stay as object names or ?variables until grounding substitutes them.
struct Expr {
    ExprKind kind = ExprKind::Number;
    double number = 0.0;                       // Number
    std::string name;                          // FluentRef/PropRef head, Op symbol
    std::vector<std::string> args;             // reference terms; ParamEquality {a,b}
    CompareOp cmp = CompareOp::Eq;             // Compare
    ConnectiveKind conn = ConnectiveKind::And; // Connective
    EffectKind effect = EffectKind::Assign;    // Effect
    // Op operands / connective children / Compare {lhs,rhs} /
    // numeric Effect {target, value}, proposition Effect {target}
    std::vector<Expr> children;
    SourcePos pos;

    static Expr make_and(std::vector<Expr> conjuncts);
};

struct TypedParam {
    std::string name;
    std::string type;
};

enum class HappeningKind { Action, Event, Process };

const char *happening_kind_name(HappeningKind kind);

struct HappeningSchema {
    std::string name;
    HappeningKind kind = HappeningKind::Action;
    std::vector<TypedParam> params;
    Expr precondition; // conjunction (possibly empty And)
    std::vector<Expr> effects;
    SourcePos pos;
};

struct PredicateDecl {
    std::string name;
    std::vector<TypedParam> params;
};

struct FunctionDecl {
    std::string name;
    std::vector<TypedParam> params;
};

// Single-inheritance hierarchy rooted at "object".
class TypeHierarchy {
public:
    TypeHierarchy();
    void add(const std::string &name, const std::string &parent);
    bool contains(const std::string &name) const;
    bool is_subtype(const std::string &type, const std::string &ancestor) const;
    // declaration order, root first
    const std::vector<std::string> &names() const { return names_; }
    const std::string &parent(const std::string &name) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::string> parent_;
};

struct DomainModel {
    std::string name;
    std::vector<std::string> requirements; // verbatim, as written
    TypeHierarchy types;
    std::vector<PredicateDecl> predicates;
    std::vector<FunctionDecl> functions;
    std::vector<HappeningSchema> schemas;
    std::vector<std::string> warnings;

    bool temporal() const;
    bool semantic_attachment() const;
    const PredicateDecl *find_predicate(const std::string &name) const;
    const FunctionDecl *find_function(const std::string &name) const;
};

enum class MetricDirection { Minimize, Maximize };

struct Metric {
    MetricDirection direction = MetricDirection::Minimize;
    Expr objective;
};

struct ObjectDecl {
    std::string name;
    std::string type;
};

struct InitProposition {
    std::string predicate;
    std::vector<std::string> args;
};

struct InitAssignment {
    std::string function;
    std::vector<std::string> args;
    double value = 0.0;
};

struct ProblemModel {
    std::string name;
    std::string domain_name;
    std::vector<ObjectDecl> objects;
    std::vector<InitProposition> init_literals;
    std::vector<InitAssignment> init_assignments;
    Expr goal;
    std::optional<Metric> metric;
    std::vector<std::string> warnings;
};

} // namespace hyplan
