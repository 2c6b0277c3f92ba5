#ifndef MPGSD_ERRORS_HPP
#define MPGSD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mpgsd {

// Malformed instance file. `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Structurally well-formed input that violates a model invariant
// (zero vertex value, demand count below supply count, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A result that contradicts ground truth, e.g. a solver objective above the
// known optimum. Signals a bug, never a bad instance.
class IntegrityError : public std::runtime_error {
public:
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mpgsd

#endif
