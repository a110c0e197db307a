#pragma once

#include <stdexcept>
#include <string>

namespace qsearch {

/// Requested register size is outside what the dense simulator supports.
class CapacityError : public std::invalid_argument {
  public:
    explicit CapacityError(const std::string &what) : std::invalid_argument(what) {}
};

/// Internal bookkeeping broke an invariant (stale mapping, duplicate index, ...).
class InconsistencyError : public std::runtime_error {
  public:
    explicit InconsistencyError(const std::string &what) : std::runtime_error(what) {}
};

/// A cluster task demands more qubits than a worker provides.
class InfeasibleTaskError : public std::runtime_error {
  public:
    explicit InfeasibleTaskError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace qsearch
