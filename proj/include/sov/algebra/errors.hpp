#pragma once

#include <stdexcept>
#include <string>

namespace sov {

/// Operands live over different variable sets.
class VarSetMismatch : public std::invalid_argument {
 public:
  explicit VarSetMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Exact division left a nonzero remainder. Inside this library that always
/// means an identity that should hold upstream did not.
class NotDivisible : public std::runtime_error {
 public:
  explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

/// A formal integral met a constant term (a logarithm or an undefined
/// P-functional value).
class ConstantTermError : public std::domain_error {
 public:
  explicit ConstantTermError(const std::string& what) : std::domain_error(what) {}
};

/// Input was required to be invariant under the type-C Weyl group.
class NotWeylInvariant : public std::invalid_argument {
 public:
  explicit NotWeylInvariant(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal cross-check between two independent routes failed.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sov
