#ifndef MATCHCOVER_ERRORS_HPP
#define MATCHCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matchcover {

/// Base class for all matchcover errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (edge list, graph6, ...).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg, int line = -1)
        : Error(line >= 1 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Input exceeds a solver size bound; exact computation refused.
class BoundError : public Error {
public:
    using Error::Error;
};

/// Invalid parameters for a graph family constructor.
class ConstructError : public Error {
public:
    using Error::Error;
};

/// A call violates an operation's stated precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace matchcover

#endif
