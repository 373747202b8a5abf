#include "hyplan/tokenizer.hpp"

#include <cctype>

#include "hyplan/util.hpp"

namespace hyplan {

namespace {

bool is_atom_char(char c) {
    if (std::isspace(static_cast<unsigned char>(c)))
        return false;
    return c != '(' && c != ')' && c != ';';
}

} // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::vector<SourcePos> open_stack;
    int line = 1;
    int column = 1;
    std::size_t i = 0;

    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    };

    while (i < text.size()) {
        char c = text[i];
        if (c == ';') {
            while (i < text.size() && text[i] != '\n')
                advance(text[i++]);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            ++i;
            continue;
        }
        SourcePos pos{line, column};
        if (c == '(') {
            tokens.push_back({TokenType::LeftParen, "(", 0.0, pos});
            open_stack.push_back(pos);
            advance(c);
            ++i;
            continue;
        }
        if (c == ')') {
            if (open_stack.empty())
                throw ParseError("unbalanced ')'", pos);
            open_stack.pop_back();
            tokens.push_back({TokenType::RightParen, ")", 0.0, pos});
            advance(c);
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && is_atom_char(text[i]))
            advance(text[i++]);
        std::string atom(text.substr(start, i - start));
        if (auto num = parse_number(atom)) {
            tokens.push_back({TokenType::Number, std::move(atom), *num, pos});
        } else {
            tokens.push_back({TokenType::Symbol, std::move(atom), 0.0, pos});
        }
    }
    if (!open_stack.empty())
        throw ParseError("unclosed '('", open_stack.back());
    return tokens;
}

} // namespace hyplan
