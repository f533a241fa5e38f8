#pragma once

#include <stdexcept>
#include <string>

namespace trifree {

/// Parameters outside an operation's domain (k = 0, b = 0, ell = 0 where
/// ell >= 1 is required, brute-force cutoff exceeded, ...). Maps to CLI exit 2.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A coloring that is partial where a total one is required, or improper.
class ColoringError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A rotation system that does not describe a combinatorial map of its graph.
class EmbeddingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact quantity would need more bits than the configured budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace trifree
