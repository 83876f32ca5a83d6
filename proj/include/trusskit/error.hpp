#pragma once

/**
 * @file error.hpp
 * @brief Exception types used across trusskit.
 *
 * Four failure classes are kept apart so callers can tell a malformed input
 * from a well-formed input that simply fails an axiom, and both of those
 * from a caller bug (violated precondition) or a library bug.
 */

#include <stdexcept>
#include <string>

namespace trusskit {

/// Malformed input: non-total table, index out of range, unparsable file.
class structure_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates the axioms of its declared kind.
class axiom_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The arguments do not satisfy the documented precondition of an operation.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard refused the computation.
class size_guard_error : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

/// An identity that must hold mathematically failed; this is a bug.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace trusskit
