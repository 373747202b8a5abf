#include "hyplan/parser.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hyplan/util.hpp"

namespace hyplan {

namespace {

const std::set<std::string> kKnownRequirements = {
    ":strips",
    ":typing",
    ":fluents",
    ":numeric-fluents",
    ":negative-preconditions",
    ":disjunctive-preconditions",
    ":equality",
    ":continuous-effects",
    ":time",
    ":semantic-attachment",
};

struct ExprScope {
    const DomainModel *domain = nullptr;
    const std::vector<TypedParam> *params = nullptr;  // schema scope
    const std::vector<ObjectDecl> *objects = nullptr; // problem scope
    bool allow_time_step = false;                     // process increase/decrease rhs
    bool allow_totals = false;                        // metric objective
};

[[noreturn]] void fail(const std::string &message, SourcePos pos) {
    throw ParseError(message, pos);
}

std::string raw_head(const SExpr &list) { return list.items.front().atom.text; }

bool is_variable(const std::string &term) { return !term.empty() && term[0] == '?'; }

void validate_term(const std::string &term, const ExprScope &scope, SourcePos pos) {
    if (is_variable(term)) {
        if (scope.params &&
            std::any_of(scope.params->begin(), scope.params->end(),
                        [&](const TypedParam &p) { return p.name == term; }))
            return;
        fail("unknown parameter '" + term + "'", pos);
    }
    if (scope.objects) {
        if (std::any_of(scope.objects->begin(), scope.objects->end(),
                        [&](const ObjectDecl &o) { return o.name == term; }))
            return;
        fail("unknown object '" + term + "'", pos);
    }
    fail("unexpected term '" + term + "' (object constants are not supported in domain schemas)",
         pos);
}

std::vector<std::string> parse_terms(const SExpr &list, std::size_t first,
                                     const ExprScope &scope) {
    std::vector<std::string> terms;
    for (std::size_t i = first; i < list.items.size(); ++i) {
        const SExpr &item = list.items[i];
        if (!item.is_symbol())
            fail("expected object or parameter term", item.pos);
        validate_term(item.atom.text, scope, item.pos);
        terms.push_back(item.atom.text);
    }
    return terms;
}

std::optional<CompareOp> compare_op(const std::string &head) {
    if (head == "<")
        return CompareOp::Lt;
    if (head == "<=")
        return CompareOp::Le;
    if (head == ">")
        return CompareOp::Gt;
    if (head == ">=")
        return CompareOp::Ge;
    if (head == "=")
        return CompareOp::Eq;
    return std::nullopt;
}

Expr parse_numeric(const SExpr &s, const ExprScope &scope, const OperatorRegistry &registry);

Expr make_fluent_ref(const SExpr &s, const std::string &name, std::size_t first_arg,
                     const ExprScope &scope) {
    const FunctionDecl *decl = scope.domain->find_function(name);
    if (!decl)
        fail("undeclared function '" + name + "'", s.pos);
    Expr e;
    e.kind = ExprKind::FluentRef;
    e.name = name;
    e.pos = s.pos;
    e.args = s.is_list() ? parse_terms(s, first_arg, scope) : std::vector<std::string>{};
    if (e.args.size() != decl->params.size())
        fail("function '" + name + "' expects " + std::to_string(decl->params.size()) +
                 " arguments, got " + std::to_string(e.args.size()),
             s.pos);
    return e;
}

Expr make_prop_ref(const SExpr &s, const std::string &name, std::size_t first_arg,
                   const ExprScope &scope) {
    const PredicateDecl *decl = scope.domain->find_predicate(name);
    if (!decl)
        fail("undeclared predicate '" + name + "'", s.pos);
    Expr e;
    e.kind = ExprKind::PropRef;
    e.name = name;
    e.pos = s.pos;
    e.args = s.is_list() ? parse_terms(s, first_arg, scope) : std::vector<std::string>{};
    if (e.args.size() != decl->params.size())
        fail("predicate '" + name + "' expects " + std::to_string(decl->params.size()) +
                 " arguments, got " + std::to_string(e.args.size()),
             s.pos);
    return e;
}

Expr parse_numeric(const SExpr &s, const ExprScope &scope, const OperatorRegistry &registry) {
    if (s.is_number()) {
        Expr e;
        e.kind = ExprKind::Number;
        e.number = s.atom.number;
        e.pos = s.pos;
        return e;
    }
    if (s.is_symbol()) {
        std::string lowered = to_lower(s.atom.text);
        if (lowered == "#t") {
            if (!scope.allow_time_step)
                fail("#t is only valid inside process increase/decrease effects", s.pos);
            Expr e;
            e.kind = ExprKind::TimeStep;
            e.pos = s.pos;
            return e;
        }
        if (lowered == "total-time" || lowered == "total-actions") {
            if (!scope.allow_totals)
                fail("'" + lowered + "' is only valid in the problem metric", s.pos);
            Expr e;
            e.kind = lowered == "total-time" ? ExprKind::TotalTime : ExprKind::TotalActions;
            e.pos = s.pos;
            return e;
        }
        // zero-arity fluent written without parentheses
        return make_fluent_ref(s, s.atom.text, 0, scope);
    }
    if (s.items.empty())
        fail("empty expression", s.pos);
    if (!s.items.front().is_symbol())
        fail("expected operator or function name", s.pos);
    std::string head = s.head();
    if (head == "total-time" || head == "total-actions") {
        if (s.items.size() != 1)
            fail("'" + head + "' takes no arguments", s.pos);
        if (!scope.allow_totals)
            fail("'" + head + "' is only valid in the problem metric", s.pos);
        Expr e;
        e.kind = head == "total-time" ? ExprKind::TotalTime : ExprKind::TotalActions;
        e.pos = s.pos;
        return e;
    }
    if (const OperatorRegistry::Entry *op = registry.find(head)) {
        int argc = static_cast<int>(s.items.size()) - 1;
        if (!op->arity.accepts(argc))
            fail("operator '" + head + "' expects " + op->arity.describe() + ", got " +
                     std::to_string(argc),
                 s.pos);
        Expr e;
        e.kind = ExprKind::Op;
        e.name = head;
        e.pos = s.pos;
        for (std::size_t i = 1; i < s.items.size(); ++i)
            e.children.push_back(parse_numeric(s.items[i], scope, registry));
        return e;
    }
    if (scope.domain->find_function(raw_head(s)))
        return make_fluent_ref(s, raw_head(s), 1, scope);
    if (scope.domain->find_predicate(raw_head(s)))
        fail("predicate '" + raw_head(s) + "' used where a numeric expression is expected",
             s.pos);
    std::string symbols;
    for (const auto &sym : registry.registered_symbols())
        symbols += (symbols.empty() ? "" : " ") + sym;
    fail("unknown operator or undeclared function '" + raw_head(s) +
             "' (registered operators: " + symbols + ")",
         s.pos);
}

Expr parse_formula(const SExpr &s, const ExprScope &scope, const OperatorRegistry &registry) {
    if (s.is_symbol()) // zero-arity predicate without parentheses
        return make_prop_ref(s, s.atom.text, 0, scope);
    if (!s.is_list() || s.items.empty() || !s.items.front().is_symbol())
        fail("expected a condition", s.pos);
    std::string head = s.head();
    if (head == "and" || head == "or") {
        Expr e;
        e.kind = ExprKind::Connective;
        e.conn = head == "and" ? ConnectiveKind::And : ConnectiveKind::Or;
        e.pos = s.pos;
        for (std::size_t i = 1; i < s.items.size(); ++i)
            e.children.push_back(parse_formula(s.items[i], scope, registry));
        return e;
    }
    if (head == "not") {
        if (s.items.size() != 2)
            fail("'not' takes exactly one condition", s.pos);
        Expr e;
        e.kind = ExprKind::Connective;
        e.conn = ConnectiveKind::Not;
        e.pos = s.pos;
        e.children.push_back(parse_formula(s.items[1], scope, registry));
        return e;
    }
    if (auto cmp = compare_op(head)) {
        if (s.items.size() != 3)
            fail("comparison '" + head + "' takes exactly two operands", s.pos);
        // (= ?a ?b) over schema parameters is object equality, not arithmetic
        if (*cmp == CompareOp::Eq && s.items[1].is_symbol() && s.items[2].is_symbol() &&
            is_variable(s.items[1].atom.text) && is_variable(s.items[2].atom.text)) {
            validate_term(s.items[1].atom.text, scope, s.items[1].pos);
            validate_term(s.items[2].atom.text, scope, s.items[2].pos);
            Expr e;
            e.kind = ExprKind::ParamEquality;
            e.args = {s.items[1].atom.text, s.items[2].atom.text};
            e.pos = s.pos;
            return e;
        }
        Expr e;
        e.kind = ExprKind::Compare;
        e.cmp = *cmp;
        e.pos = s.pos;
        e.children.push_back(parse_numeric(s.items[1], scope, registry));
        e.children.push_back(parse_numeric(s.items[2], scope, registry));
        return e;
    }
    if (head == "when")
        fail("conditional effects are not supported", s.pos);
    return make_prop_ref(s, raw_head(s), 1, scope);
}

// Linearity rule for #t: at most one occurrence, reachable only through
// +, - and * applications.
int count_time_steps(const Expr &e, bool linear_path, SourcePos pos) {
    if (e.kind == ExprKind::TimeStep) {
        if (!linear_path)
            fail("process effect must be linear in #t", pos);
        return 1;
    }
    bool child_linear =
        linear_path && (e.kind != ExprKind::Op || e.name == "+" || e.name == "-" || e.name == "*");
    int count = 0;
    for (const auto &c : e.children)
        count += count_time_steps(c, child_linear, pos);
    return count;
}

void parse_effect(const SExpr &s, const ExprScope &scope, const OperatorRegistry &registry,
                  HappeningKind kind, std::vector<Expr> &out) {
    if (s.is_symbol()) {
        Expr e;
        e.kind = ExprKind::Effect;
        e.effect = EffectKind::SetProp;
        e.pos = s.pos;
        e.children.push_back(make_prop_ref(s, s.atom.text, 0, scope));
        out.push_back(std::move(e));
        return;
    }
    if (!s.is_list() || s.items.empty() || !s.items.front().is_symbol())
        fail("expected an effect", s.pos);
    std::string head = s.head();
    if (head == "and") {
        for (std::size_t i = 1; i < s.items.size(); ++i)
            parse_effect(s.items[i], scope, registry, kind, out);
        return;
    }
    if (head == "when")
        fail("conditional effects are not supported", s.pos);
    if (head == "assign" || head == "increase" || head == "decrease") {
        if (s.items.size() != 3)
            fail("'" + head + "' takes a fluent and a value", s.pos);
        Expr e;
        e.kind = ExprKind::Effect;
        e.effect = head == "assign"     ? EffectKind::Assign
                   : head == "increase" ? EffectKind::Increase
                                        : EffectKind::Decrease;
        e.pos = s.pos;
        const SExpr &target = s.items[1];
        if (target.is_list() && !target.items.empty() && target.items.front().is_symbol())
            e.children.push_back(make_fluent_ref(target, raw_head(target), 1, scope));
        else if (target.is_symbol())
            e.children.push_back(make_fluent_ref(target, target.atom.text, 0, scope));
        else
            fail("effect target must be a fluent", target.pos);
        ExprScope rhs_scope = scope;
        rhs_scope.allow_time_step =
            kind == HappeningKind::Process && e.effect != EffectKind::Assign;
        Expr rhs = parse_numeric(s.items[2], rhs_scope, registry);
        if (rhs_scope.allow_time_step)
            count_time_steps(rhs, true, s.pos);
        e.children.push_back(std::move(rhs));
        out.push_back(std::move(e));
        return;
    }
    if (head == "not") {
        if (s.items.size() != 2)
            fail("'not' effect takes exactly one proposition", s.pos);
        const SExpr &inner = s.items[1];
        Expr e;
        e.kind = ExprKind::Effect;
        e.effect = EffectKind::ClearProp;
        e.pos = s.pos;
        if (inner.is_symbol())
            e.children.push_back(make_prop_ref(inner, inner.atom.text, 0, scope));
        else if (inner.is_list() && !inner.items.empty() && inner.items.front().is_symbol())
            e.children.push_back(make_prop_ref(inner, raw_head(inner), 1, scope));
        else
            fail("expected a proposition", inner.pos);
        out.push_back(std::move(e));
        return;
    }
    Expr e;
    e.kind = ExprKind::Effect;
    e.effect = EffectKind::SetProp;
    e.pos = s.pos;
    e.children.push_back(make_prop_ref(s, raw_head(s), 1, scope));
    out.push_back(std::move(e));
}

// Typed list: names... [- type] groups; untyped names default to "object".
std::vector<TypedParam> parse_typed_list(const SExpr &list, std::size_t first,
                                         std::size_t last) {
    std::vector<TypedParam> result;
    std::vector<std::string> pending;
    for (std::size_t i = first; i < last; ++i) {
        const SExpr &item = list.items[i];
        if (item.is_list() && item.head() == "either")
            fail("(either ...) types are not supported", item.pos);
        if (!item.is_symbol())
            fail("expected a name in typed list", item.pos);
        const std::string &text = item.atom.text;
        if (text == "-") {
            ++i;
            if (i >= last)
                fail("expected a type after '-'", item.pos);
            const SExpr &type_item = list.items[i];
            if (type_item.is_list() && type_item.head() == "either")
                fail("(either ...) types are not supported", type_item.pos);
            if (!type_item.is_symbol())
                fail("expected a type name", type_item.pos);
            for (auto &name : pending)
                result.push_back({std::move(name), type_item.atom.text});
            pending.clear();
        } else {
            pending.push_back(text);
        }
    }
    for (auto &name : pending)
        result.push_back({std::move(name), "object"});
    return result;
}

void parse_requirements(const SExpr &section, DomainModel &domain) {
    for (std::size_t i = 1; i < section.items.size(); ++i) {
        const SExpr &item = section.items[i];
        if (!item.is_symbol())
            fail("expected a requirement flag", item.pos);
        std::string flag = to_lower(item.atom.text);
        domain.requirements.push_back(flag);
        if (!kKnownRequirements.count(flag))
            domain.warnings.push_back("unknown requirement '" + item.atom.text + "'");
    }
}

void parse_types(const SExpr &section, DomainModel &domain) {
    auto typed = parse_typed_list(section, 1, section.items.size());
    for (const auto &entry : typed) {
        if (!domain.types.contains(entry.type) && entry.type != "object")
            domain.types.add(entry.type, "object");
        domain.types.add(entry.name, entry.type);
    }
    // reject cycles such as (a - b  b - a)
    for (const auto &name : domain.types.names()) {
        std::string cur = name;
        for (std::size_t steps = 0; steps <= domain.types.names().size(); ++steps) {
            if (cur == "object")
                break;
            cur = domain.types.parent(cur);
            if (steps == domain.types.names().size())
                fail("type hierarchy contains a cycle through '" + name + "'", section.pos);
        }
    }
}

void parse_declarations(const SExpr &section, const char *what,
                        std::vector<std::vector<TypedParam>> &params_out,
                        std::vector<std::string> &names_out) {
    for (std::size_t i = 1; i < section.items.size(); ++i) {
        const SExpr &item = section.items[i];
        if (!item.is_list() || item.items.empty() || !item.items.front().is_symbol())
            fail(std::string("expected a ") + what + " declaration", item.pos);
        names_out.push_back(raw_head(item));
        params_out.push_back(parse_typed_list(item, 1, item.items.size()));
    }
}

HappeningSchema parse_schema(const SExpr &section, HappeningKind kind, const DomainModel &domain,
                             const OperatorRegistry &registry) {
    if (section.items.size() < 2 || !section.items[1].is_symbol())
        fail("expected a happening name", section.pos);
    HappeningSchema schema;
    schema.kind = kind;
    schema.name = section.items[1].atom.text;
    schema.pos = section.pos;

    ExprScope scope;
    scope.domain = &domain;
    scope.params = &schema.params;

    bool saw_precondition = false;
    std::set<std::string> seen_keys;
    std::size_t i = 2;
    while (i < section.items.size()) {
        const SExpr &key = section.items[i];
        if (!key.is_symbol())
            fail("expected :parameters, :precondition or :effect", key.pos);
        std::string keyword = to_lower(key.atom.text);
        if (!seen_keys.insert(keyword).second)
            fail("duplicate '" + keyword + "' in " + schema.name, key.pos);
        if (i + 1 >= section.items.size())
            fail("missing value after '" + keyword + "'", key.pos);
        const SExpr &value = section.items[i + 1];
        if (keyword == ":parameters") {
            if (!value.is_list())
                fail(":parameters expects a list", value.pos);
            schema.params = parse_typed_list(value, 0, value.items.size());
            for (const auto &p : schema.params) {
                if (!is_variable(p.name))
                    fail("parameter '" + p.name + "' must start with '?'", value.pos);
                if (!domain.types.contains(p.type))
                    fail("parameter type '" + p.type + "' is not declared", value.pos);
            }
            std::set<std::string> names;
            for (const auto &p : schema.params)
                if (!names.insert(p.name).second)
                    fail("duplicate parameter '" + p.name + "'", value.pos);
        } else if (keyword == ":precondition") {
            schema.precondition = parse_formula(value, scope, registry);
            saw_precondition = true;
        } else if (keyword == ":effect") {
            parse_effect(value, scope, registry, kind, schema.effects);
        } else {
            fail("unexpected key '" + keyword + "' in happening", key.pos);
        }
        i += 2;
    }
    if (!saw_precondition)
        schema.precondition = Expr::make_and({});
    if (kind != HappeningKind::Process) {
        for (const auto &eff : schema.effects)
            if (eff.children.size() > 1 && count_time_steps(eff.children[1], true, eff.pos) > 0)
                fail("only process effects may reference #t", eff.pos);
    }
    return schema;
}

const SExpr &expect_define(const std::vector<SExpr> &top, const char *what) {
    if (top.empty())
        fail(std::string("expected a (define ...) form for the ") + what, SourcePos{1, 1});
    if (top.size() > 1)
        fail("unexpected trailing content after (define ...)", top[1].pos);
    const SExpr &def = top.front();
    if (def.head() != "define")
        fail(std::string("expected (define ...) at top level of the ") + what, def.pos);
    return def;
}

} // namespace

DomainModel parse_domain(const std::vector<Token> &tokens, const OperatorRegistry &registry) {
    const auto top = read_sexprs(tokens);
    const SExpr &def = expect_define(top, "domain");
    if (def.items.size() < 2 || !def.items[1].is_list() || def.items[1].head() != "domain" ||
        def.items[1].items.size() != 2 || !def.items[1].items[1].is_symbol())
        fail("expected (domain <name>)", def.pos);

    DomainModel domain;
    domain.name = def.items[1].items[1].atom.text;

    // Hoist declarations so schemas can reference predicates/functions
    // regardless of section order.
    std::vector<const SExpr *> schema_sections;
    std::vector<std::pair<const SExpr *, HappeningKind>> happening_sections;
    for (std::size_t i = 2; i < def.items.size(); ++i) {
        const SExpr &section = def.items[i];
        if (!section.is_list() || section.items.empty() || !section.items.front().is_symbol())
            fail("expected a domain section", section.pos);
        std::string head = section.head();
        if (head == ":requirements") {
            parse_requirements(section, domain);
        } else if (head == ":types") {
            parse_types(section, domain);
        } else if (head == ":predicates") {
            std::vector<std::vector<TypedParam>> params;
            std::vector<std::string> names;
            parse_declarations(section, "predicate", params, names);
            for (std::size_t k = 0; k < names.size(); ++k)
                domain.predicates.push_back({names[k], params[k]});
        } else if (head == ":functions") {
            std::vector<std::vector<TypedParam>> params;
            std::vector<std::string> names;
            parse_declarations(section, "function", params, names);
            for (std::size_t k = 0; k < names.size(); ++k)
                domain.functions.push_back({names[k], params[k]});
        } else if (head == ":action") {
            happening_sections.push_back({&section, HappeningKind::Action});
        } else if (head == ":event") {
            happening_sections.push_back({&section, HappeningKind::Event});
        } else if (head == ":process") {
            happening_sections.push_back({&section, HappeningKind::Process});
        } else if (head == ":durative-action") {
            fail("durative actions are not supported; compile them with the start-process-stop "
                 "model (instantaneous happenings starting and stopping a process)",
                 section.pos);
        } else if (head == ":derived") {
            fail("derived predicates are not supported", section.pos);
        } else if (head == ":constants") {
            fail("domain constants are not supported; declare objects in the problem",
                 section.pos);
        } else {
            fail("unknown domain section '" + head + "'", section.pos);
        }
    }
    for (auto [section, kind] : happening_sections)
        domain.schemas.push_back(parse_schema(*section, kind, domain, registry));

    std::set<std::string> names;
    for (const auto &p : domain.predicates)
        if (!names.insert("p " + p.name).second)
            fail("duplicate predicate '" + p.name + "'", def.pos);
    for (const auto &f : domain.functions)
        if (!names.insert("f " + f.name).second)
            fail("duplicate function '" + f.name + "'", def.pos);
    return domain;
}

ProblemModel parse_problem(const std::vector<Token> &tokens, const DomainModel &domain,
                           const OperatorRegistry &registry) {
    const auto top = read_sexprs(tokens);
    const SExpr &def = expect_define(top, "problem");
    if (def.items.size() < 2 || !def.items[1].is_list() || def.items[1].head() != "problem" ||
        def.items[1].items.size() != 2 || !def.items[1].items[1].is_symbol())
        fail("expected (problem <name>)", def.pos);

    ProblemModel problem;
    problem.name = def.items[1].items[1].atom.text;
    problem.goal = Expr::make_and({});

    ExprScope scope;
    scope.domain = &domain;
    scope.objects = &problem.objects;

    bool saw_goal = false;
    for (std::size_t i = 2; i < def.items.size(); ++i) {
        const SExpr &section = def.items[i];
        if (!section.is_list() || section.items.empty() || !section.items.front().is_symbol())
            fail("expected a problem section", section.pos);
        std::string head = section.head();
        if (head == ":domain") {
            if (section.items.size() != 2 || !section.items[1].is_symbol())
                fail("expected (:domain <name>)", section.pos);
            problem.domain_name = section.items[1].atom.text;
            if (problem.domain_name != domain.name)
                problem.warnings.push_back("problem references domain '" + problem.domain_name +
                                           "' but '" + domain.name + "' was loaded");
        } else if (head == ":objects") {
            auto typed = parse_typed_list(section, 1, section.items.size());
            for (const auto &entry : typed) {
                if (!domain.types.contains(entry.type))
                    fail("object '" + entry.name + "' has undeclared type '" + entry.type + "'",
                         section.pos);
                if (std::any_of(problem.objects.begin(), problem.objects.end(),
                                [&](const ObjectDecl &o) { return o.name == entry.name; }))
                    fail("duplicate object '" + entry.name + "'", section.pos);
                problem.objects.push_back({entry.name, entry.type});
            }
        } else if (head == ":init") {
            for (std::size_t k = 1; k < section.items.size(); ++k) {
                const SExpr &item = section.items[k];
                if (!item.is_list() || item.items.empty() || !item.items.front().is_symbol())
                    fail("expected an init literal or assignment", item.pos);
                std::string item_head = item.head();
                if (item_head == "=") {
                    if (item.items.size() != 3 || !item.items[2].is_number())
                        fail("init assignment expects (= (<fluent> ...) <number>)", item.pos);
                    const SExpr &target = item.items[1];
                    Expr ref;
                    if (target.is_list() && !target.items.empty() &&
                        target.items.front().is_symbol())
                        ref = make_fluent_ref(target, raw_head(target), 1, scope);
                    else if (target.is_symbol())
                        ref = make_fluent_ref(target, target.atom.text, 0, scope);
                    else
                        fail("init assignment target must be a fluent", target.pos);
                    problem.init_assignments.push_back(
                        {ref.name, ref.args, item.items[2].atom.number});
                } else if (item_head == "at" && item.items.size() > 1 &&
                           item.items[1].is_number()) {
                    fail("timed initial literals are not supported", item.pos);
                } else if (item_head == "not") {
                    fail("negative init literals are not supported (closed-world init)",
                         item.pos);
                } else {
                    Expr ref = make_prop_ref(item, raw_head(item), 1, scope);
                    problem.init_literals.push_back({ref.name, ref.args});
                }
            }
        } else if (head == ":goal") {
            if (section.items.size() != 2)
                fail("expected (:goal <formula>)", section.pos);
            problem.goal = parse_formula(section.items[1], scope, registry);
            saw_goal = true;
        } else if (head == ":metric") {
            if (problem.metric)
                fail("duplicate :metric section", section.pos);
            if (section.items.size() != 3 || !section.items[1].is_symbol())
                fail("expected (:metric minimize|maximize <expression>)", section.pos);
            std::string direction = to_lower(section.items[1].atom.text);
            if (direction != "minimize" && direction != "maximize")
                fail("metric direction must be minimize or maximize", section.items[1].pos);
            ExprScope metric_scope = scope;
            metric_scope.allow_totals = true;
            Metric metric;
            metric.direction = direction == "minimize" ? MetricDirection::Minimize
                                                       : MetricDirection::Maximize;
            metric.objective = parse_numeric(section.items[2], metric_scope, registry);
            problem.metric = std::move(metric);
        } else {
            fail("unknown problem section '" + head + "'", section.pos);
        }
    }
    if (!saw_goal)
        fail("problem has no :goal section", def.pos);
    return problem;
}

DomainModel parse_domain_text(std::string_view text, const OperatorRegistry &registry) {
    return parse_domain(tokenize(text), registry);
}

ProblemModel parse_problem_text(std::string_view text, const DomainModel &domain,
                                const OperatorRegistry &registry) {
    return parse_problem(tokenize(text), domain, registry);
}

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

DomainModel load_domain_file(const std::string &path, const OperatorRegistry &registry) {
    return parse_domain_text(read_file(path), registry);
}

ProblemModel load_problem_file(const std::string &path, const DomainModel &domain,
                               const OperatorRegistry &registry) {
    return parse_problem_text(read_file(path), domain, registry);
}

} // namespace hyplan
