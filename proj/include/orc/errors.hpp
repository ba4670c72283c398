#ifndef ORC_ERRORS_HPP
#define ORC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orc {

// Every engine failure carries a stable kind so the CLI can emit
// machine-readable diagnostics. Violations of population axioms and
// constraints are *data* (see model.hpp / constraints.hpp), not errors.
enum class ErrorKind {
    DomainMismatch,
    UnknownType,
    UnknownRole,
    UnknownTime,
    UnboundVariable,
    UnknownPhrase,
    SyntaxError,
    UnresolvableName,
    NoJoinPath,
    AmbiguousJoinPath,
    TypeMismatch,
    EmptyProduct,
    DegenerateConstraint,
    AmbiguousLexicon,
    BadInput,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Parse-level error with a source position (byte offset into the rule text,
// or line number for file-shaped inputs).
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t position, std::string message)
        : Error(kind, std::move(message)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace orc

#endif
