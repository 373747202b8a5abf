#pragma once

#include <string_view>

#include "hyplan/ast.hpp"
#include "hyplan/operators.hpp"
#include "hyplan/sexpr.hpp"

namespace hyplan {

// The registry is consulted for operator symbols and arities while parsing
// expressions, so extended operators must be registered before parsing.
DomainModel parse_domain(const std::vector<Token> &tokens, const OperatorRegistry &registry);
ProblemModel parse_problem(const std::vector<Token> &tokens, const DomainModel &domain,
                           const OperatorRegistry &registry);

DomainModel parse_domain_text(std::string_view text, const OperatorRegistry &registry);
ProblemModel parse_problem_text(std::string_view text, const DomainModel &domain,
                                const OperatorRegistry &registry);

// Read a file and parse it; throws ConfigError if the file cannot be read.
DomainModel load_domain_file(const std::string &path, const OperatorRegistry &registry);
ProblemModel load_problem_file(const std::string &path, const DomainModel &domain,
                               const OperatorRegistry &registry);

} // namespace hyplan
