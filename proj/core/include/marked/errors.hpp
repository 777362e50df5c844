#pragma once

#include <stdexcept>
#include <string>

namespace marked {

/// Violated mathematical precondition on otherwise well-formed input
/// (non-strongly-stable ideal, non-truncation where one is required,
/// monomial outside the ideal, non-admissible Hilbert polynomial).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A reduction exceeded its step budget. Reachable only when the
/// truncation guard is bypassed (the relation is not Noetherian then).
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(const std::string& msg, long steps)
        : std::runtime_error(msg), steps_(steps) {}
    long steps() const { return steps_; }

private:
    long steps_;
};

/// Broken internal invariant; always a bug, never an input problem.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace marked
