#include "hyplan/sexpr.hpp"

#include "hyplan/util.hpp"

namespace hyplan {

std::string SExpr::head() const {
    if (is_atom || items.empty() || !items.front().is_atom)
        return "";
    return to_lower(items.front().atom.text);
}

namespace {

SExpr read_one(const std::vector<Token> &tokens, std::size_t &i) {
    const Token &tok = tokens[i];
    if (tok.type == TokenType::LeftParen) {
        SExpr list;
        list.pos = tok.pos;
        ++i;
        while (i < tokens.size() && tokens[i].type != TokenType::RightParen)
            list.items.push_back(read_one(tokens, i));
        // tokenize() guarantees balance, so the closing paren is present
        ++i;
        return list;
    }
    SExpr atom;
    atom.is_atom = true;
    atom.atom = tok;
    atom.pos = tok.pos;
    ++i;
    return atom;
}

} // namespace

std::vector<SExpr> read_sexprs(const std::vector<Token> &tokens) {
    std::vector<SExpr> result;
    std::size_t i = 0;
    while (i < tokens.size())
        result.push_back(read_one(tokens, i));
    return result;
}

} // namespace hyplan
