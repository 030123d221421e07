#pragma once

#include <stdexcept>
#include <string>

namespace qseq {

/// Argument outside the mathematical domain of an operation (non-finite
/// input, index out of range, wrong dimension, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The input is well-formed but does not satisfy a mathematical hypothesis
/// the operation relies on (e.g. the sequence is not q-concave).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Requested combination is valid but deliberately not supported.
class UnsupportedError : public std::domain_error {
public:
    explicit UnsupportedError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qseq
