#pragma once

#include <stdexcept>
#include <string>

namespace jacring {

/// Bad input: malformed files, non-homogeneous f, declared point not singular.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Computation finished but the theorem's hypotheses do not hold.
class HypothesesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal cross-checks failed: incomplete singular locus, duality asymmetry,
/// containment violations. Signals bad input data or a bug, never silently.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Resource cap exceeded (monomial basis larger than the configured budget).
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace jacring
