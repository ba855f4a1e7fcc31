#pragma once

#include <stdexcept>
#include <string>

namespace distspec {

// Malformed textual input (graph6 lines, hypergraph fixture files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside a supported size envelope (graph order, canonical-form cap,
// enumeration cap, degenerate matrices).
struct UnsupportedSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation needs a connected graph.
struct NotConnectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument violates an operation's stated precondition (bad partition,
// non-unit vector, non-regular base, wrong parity, non-positive tol).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input is outside the mathematical domain of the check
// (e.g. transmission-regular graphs have sigma = 0 by definition).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iteration cap hit before the requested certificate width was reached.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double achieved_gap)
        : std::runtime_error(what), achieved_gap_(achieved_gap) {}

    double achieved_gap() const { return achieved_gap_; }

private:
    double achieved_gap_;
};

}  // namespace distspec
