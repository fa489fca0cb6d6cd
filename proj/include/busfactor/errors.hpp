#ifndef BUSFACTOR_ERRORS_HPP
#define BUSFACTOR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace busfactor {

// Unknown node / lookup failure.
class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violation (bad argument, invalid parameter combination).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed edge-list input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Synthetic graph generation could not satisfy its constraints.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Refusal to run an exponential oracle past its size guard.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace busfactor

#endif
