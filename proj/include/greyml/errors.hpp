#pragma once

#include <stdexcept>
#include <string>

namespace greyml {

/// Numerical failure: non-PD factorization, solver non-convergence,
/// degenerate systems. Maps to exit code 3 in the CLI.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// CSV/flag parse failure. Maps to exit code 2 in the CLI.
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace greyml
