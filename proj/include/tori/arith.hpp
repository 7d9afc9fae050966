#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "tori/error.hpp"

namespace tori {

inline bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

struct PrimePower {
  std::uint64_t p = 0;
  int k = 0;
};

inline std::optional<PrimePower> prime_power(std::uint64_t q) {
  if (q < 2)
    return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0)
    ++p;
  int k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1)
    return std::nullopt;
  return PrimePower{p, k};
}

inline PrimePower require_prime_power(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp)
    throw ParameterError("q=" + std::to_string(q) + " is not a prime power");
  return *pp;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) {
    if (b != 0 && r > UINT64_MAX / b)
      throw InternalError("integer power overflow");
    r *= b;
  }
  return r;
}

/// Distinct prime divisors by trial division.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i)
    r *= static_cast<std::uint64_t>(i);
  return r;
}

} // namespace tori
