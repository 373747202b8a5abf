#pragma once

#include <string>
#include <vector>

#include "hyplan/tokenizer.hpp"

namespace hyplan {

// Nested s-expression: either an atom token or a list of sub-expressions.
struct SExpr {
    bool is_atom = false;
    Token atom;               // valid when is_atom
    std::vector<SExpr> items; // valid when !is_atom
    SourcePos pos;

    bool is_list() const { return !is_atom; }
    bool is_symbol() const { return is_atom && atom.type == TokenType::Symbol; }
    bool is_number() const { return is_atom && atom.type == TokenType::Number; }

    // Lowercased head symbol of a list, or "" if not applicable.
    std::string head() const;
};

std::vector<SExpr> read_sexprs(const std::vector<Token> &tokens);

} // namespace hyplan
