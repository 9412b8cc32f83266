#pragma once

#include <stdexcept>
#include <string>

namespace sbm {

// Parameter or argument outside the mathematical domain of an operation.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// A root or curve intersection could not be bracketed; the caller may widen
// the search interval.
class bracket_error : public std::runtime_error {
public:
    explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

// A solver precondition checked at runtime (payoff smoothness, concavity,
// regime conditions) does not hold for the supplied problem.
class assumption_error : public std::runtime_error {
public:
    explicit assumption_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sbm
