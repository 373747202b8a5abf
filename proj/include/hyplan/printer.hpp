#pragma once

#include <string>

#include "hyplan/ast.hpp"

namespace hyplan {

// Canonical text form of an expression. Used as the sort/dedup key for
// grounded conditions and as the precondition-tree child key.
std::string print_expr(const Expr &expr);

// Pretty-print parsed models back to PDDL. Re-parsing the output yields a
// structurally equal model.
std::string print_domain(const DomainModel &domain);
std::string print_problem(const ProblemModel &problem);

} // namespace hyplan
