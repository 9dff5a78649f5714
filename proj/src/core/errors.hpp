#pragma once

#include <stdexcept>
#include <string>

namespace rfunc {

/// Incompatible shapes or sizes for the requested operation.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A caller-visible precondition was violated (non-Hermitian input,
/// non-unitary conjugator, out-of-range parameter, non-finite entries).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative kernel ran out of its sweep budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed JSON input or schema mismatch.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal consistency check failed; indicates a bug rather than bad data.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace rfunc
