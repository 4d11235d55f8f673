#pragma once

#include <stdexcept>
#include <string>

namespace iop {

/// Malformed text input (graph, orientation or formula files).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string & what) : std::runtime_error(what) {}
};

/// An operation was handed input outside its domain, e.g. a tree solver
/// receiving a graph with a cycle.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string & what) : std::invalid_argument(what) {}
};

/// A search ran out of its node budget. The answer is unknown, not negative.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string & what) : std::runtime_error(what) {}
};

}  // namespace iop
