#pragma once

#include <stdexcept>
#include <string>

namespace hyplan {

struct SourcePos {
    int line = 0;
    int column = 0;
};

// Error in the PDDL input text; carries the position of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &message, SourcePos pos)
        : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                             ": " + message),
          pos_(pos) {}

    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

// Error while instantiating the model (ill-formed grounded problem).
class GroundError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Error while compiling a grounded expression (unknown operator, kind mismatch).
class CompileError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad run configuration: flags, registry misuse, missing heuristic.
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Subprocess attachment wire-protocol violation.
class ProtocolError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hyplan
