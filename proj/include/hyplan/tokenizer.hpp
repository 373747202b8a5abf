#pragma once

#include <string_view>
#include <vector>

#include "hyplan/errors.hpp"

namespace hyplan {

enum class TokenType { LeftParen, RightParen, Symbol, Number };

struct Token {
    TokenType type;
    std::string text;    // raw spelling, case preserved
    double number = 0.0; // valid when type == Number
    SourcePos pos;
};

// Splits PDDL text into s-expression tokens. `;` starts a comment that runs
// to the end of the line. Throws ParseError on unbalanced parentheses.
std::vector<Token> tokenize(std::string_view text);

} // namespace hyplan
