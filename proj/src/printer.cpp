#include "hyplan/printer.hpp"

#include <sstream>

#include "hyplan/util.hpp"

namespace hyplan {

namespace {

const char *compare_symbol(CompareOp op) {
    switch (op) {
    case CompareOp::Lt:
        return "<";
    case CompareOp::Le:
        return "<=";
    case CompareOp::Gt:
        return ">";
    case CompareOp::Ge:
        return ">=";
    case CompareOp::Eq:
        return "=";
    }
    return "?";
}

void print_ref(std::ostream &out, const std::string &name,
               const std::vector<std::string> &args) {
    out << '(' << name;
    for (const auto &a : args)
        out << ' ' << a;
    out << ')';
}

void print_rec(std::ostream &out, const Expr &e) {
    switch (e.kind) {
    case ExprKind::Number:
        out << format_double(e.number);
        return;
    case ExprKind::FluentRef:
    case ExprKind::PropRef:
        print_ref(out, e.name, e.args);
        return;
    case ExprKind::Op:
        out << '(' << e.name;
        for (const auto &c : e.children) {
            out << ' ';
            print_rec(out, c);
        }
        out << ')';
        return;
    case ExprKind::TimeStep:
        out << "#t";
        return;
    case ExprKind::TotalTime:
        out << "(total-time)";
        return;
    case ExprKind::TotalActions:
        out << "(total-actions)";
        return;
    case ExprKind::Compare:
        out << '(' << compare_symbol(e.cmp) << ' ';
        print_rec(out, e.children[0]);
        out << ' ';
        print_rec(out, e.children[1]);
        out << ')';
        return;
    case ExprKind::Connective: {
        const char *head = e.conn == ConnectiveKind::And   ? "and"
                           : e.conn == ConnectiveKind::Or ? "or"
                                                          : "not";
        out << '(' << head;
        for (const auto &c : e.children) {
            out << ' ';
            print_rec(out, c);
        }
        out << ')';
        return;
    }
    case ExprKind::Effect:
        switch (e.effect) {
        case EffectKind::Assign:
        case EffectKind::Increase:
        case EffectKind::Decrease: {
            const char *head = e.effect == EffectKind::Assign     ? "assign"
                               : e.effect == EffectKind::Increase ? "increase"
                                                                  : "decrease";
            out << '(' << head << ' ';
            print_rec(out, e.children[0]);
            out << ' ';
            print_rec(out, e.children[1]);
            out << ')';
            return;
        }
        case EffectKind::SetProp:
            print_rec(out, e.children[0]);
            return;
        case EffectKind::ClearProp:
            out << "(not ";
            print_rec(out, e.children[0]);
            out << ')';
            return;
        }
        return;
    case ExprKind::ParamEquality:
        out << "(= " << e.args[0] << ' ' << e.args[1] << ')';
        return;
    }
}

void print_params(std::ostream &out, const std::vector<TypedParam> &params) {
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i)
            out << ' ';
        out << params[i].name << " - " << params[i].type;
    }
}

void print_schema(std::ostream &out, const HappeningSchema &schema) {
    out << "  (:" << happening_kind_name(schema.kind) << ' ' << schema.name << "\n";
    out << "    :parameters (";
    print_params(out, schema.params);
    out << ")\n";
    out << "    :precondition ";
    print_rec(out, schema.precondition);
    out << "\n    :effect ";
    Expr eff = Expr::make_and(schema.effects);
    print_rec(out, eff);
    out << ")\n";
}

} // namespace

std::string print_expr(const Expr &expr) {
    std::ostringstream out;
    print_rec(out, expr);
    return out.str();
}

std::string print_domain(const DomainModel &domain) {
    std::ostringstream out;
    out << "(define (domain " << domain.name << ")\n";
    if (!domain.requirements.empty()) {
        out << "  (:requirements";
        for (const auto &r : domain.requirements)
            out << ' ' << r;
        out << ")\n";
    }
    if (domain.types.names().size() > 1) {
        out << "  (:types";
        for (const auto &t : domain.types.names()) {
            if (t == "object")
                continue;
            out << ' ' << t << " - " << domain.types.parent(t);
        }
        out << ")\n";
    }
    if (!domain.predicates.empty()) {
        out << "  (:predicates";
        for (const auto &p : domain.predicates) {
            out << " (" << p.name;
            if (!p.params.empty()) {
                out << ' ';
                print_params(out, p.params);
            }
            out << ')';
        }
        out << ")\n";
    }
    if (!domain.functions.empty()) {
        out << "  (:functions";
        for (const auto &f : domain.functions) {
            out << " (" << f.name;
            if (!f.params.empty()) {
                out << ' ';
                print_params(out, f.params);
            }
            out << ')';
        }
        out << ")\n";
    }
    for (const auto &schema : domain.schemas)
        print_schema(out, schema);
    out << ")\n";
    return out.str();
}

std::string print_problem(const ProblemModel &problem) {
    std::ostringstream out;
    out << "(define (problem " << problem.name << ")\n";
    out << "  (:domain " << problem.domain_name << ")\n";
    if (!problem.objects.empty()) {
        out << "  (:objects";
        for (const auto &o : problem.objects)
            out << ' ' << o.name << " - " << o.type;
        out << ")\n";
    }
    out << "  (:init";
    for (const auto &lit : problem.init_literals) {
        out << " (" << lit.predicate;
        for (const auto &a : lit.args)
            out << ' ' << a;
        out << ')';
    }
    for (const auto &asgn : problem.init_assignments) {
        out << " (= (" << asgn.function;
        for (const auto &a : asgn.args)
            out << ' ' << a;
        out << ") " << format_double(asgn.value) << ')';
    }
    out << ")\n";
    out << "  (:goal ";
    print_rec(out, problem.goal);
    out << ")\n";
    if (problem.metric) {
        out << "  (:metric "
            << (problem.metric->direction == MetricDirection::Minimize ? "minimize"
                                                                       : "maximize")
            << ' ';
        print_rec(out, problem.metric->objective);
        out << ")\n";
    }
    out << ")\n";
    return out.str();
}

} // namespace hyplan
