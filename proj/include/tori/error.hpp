#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tori {

/// Invalid input: bad rank, malformed class string, out-of-range n, ...
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or field construction would exceed its configured budget.
class BudgetError : public std::runtime_error {
public:
  BudgetError(const std::string& what, std::uint64_t partial = 0)
    : std::runtime_error(what), partial_count(partial) {}
  std::uint64_t partial_count;
};

/// The request is well formed but has no shipped implementation route.
class UnsupportedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace tori
