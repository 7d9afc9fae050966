#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tori/arith.hpp"
#include "tori/weylclass.hpp"

namespace tori {

enum class TorusConstraint { None, DeterminantOne, EvenExponentSum };

inline std::string to_string(TorusConstraint c) {
  switch (c) {
  case TorusConstraint::None: return "None";
  case TorusConstraint::DeterminantOne: return "DeterminantOne";
  case TorusConstraint::EvenExponentSum: return "EvenExponentSum";
  }
  return "?";
}

struct TorusFactor {
  std::uint64_t order = 1;
  int sign = 1; // +1 or -1
  int length = 1; // n_i
};

struct TorusStructure {
  std::vector<TorusFactor> factors;
  TorusConstraint constraint = TorusConstraint::None;
  std::uint64_t full_order = 1;
  std::uint64_t intersected_order = 1;
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a)
    throw BudgetError("torus order exceeds 64 bits");
  return a * b;
}

// |1 + x + ... + x^{n-1}| for x = eps*q, as an exact integer
inline std::uint64_t geometric_abs(std::int64_t x, int n) {
  __int128 s = 0, p = 1;
  for (int i = 0; i < n; ++i) {
    s += p;
    p *= x;
  }
  return static_cast<std::uint64_t>(s < 0 ? -s : s);
}

// Kernel order of the determinant character on prod Z/d_i, where the i-th
// generator maps to lambda_i^{e_i} with lambda_i of order d_i.
inline std::uint64_t determinant_kernel_order(const std::vector<TorusFactor>& f, std::int64_t eps, std::uint64_t q) {
  std::uint64_t full = 1, image = 1;
  for (auto& x : f) {
    full = checked_mul(full, x.order);
    std::uint64_t e = geometric_abs(eps * static_cast<std::int64_t>(q), x.length) % x.order;
    std::uint64_t o = x.order / std::gcd(x.order, e);
    image = std::lcm(image, o);
  }
  return full / image;
}

} // namespace detail

/// Effective family for torus purposes: B in characteristic 2 is handled as C.
inline Family torus_family(const TorusClassDescriptor& d) {
  if (d.family == Family::B && d.q % 2 == 0)
    return Family::C;
  return d.family;
}

inline TorusStructure torus_factor_orders(const TorusClassDescriptor& d) {
  TorusStructure t;
  const auto q = d.q;
  if (is_type_a(d.family)) {
    const std::int64_t eps = d.family == Family::A2 ? -1 : 1;
    for (int n : d.type.positive) {
      std::uint64_t qn = ipow(q, n);
      std::uint64_t ord = (eps > 0 || n % 2 == 0) ? qn - 1 : qn + 1;
      t.factors.push_back({ord, static_cast<int>(eps), n});
    }
    t.constraint = TorusConstraint::DeterminantOne;
  } else {
    for (auto [n, positive] : d.type.blocks()) {
      std::uint64_t qn = ipow(q, n);
      t.factors.push_back({positive ? qn - 1 : qn + 1, positive ? 1 : -1, n});
    }
    Family f = torus_family(d);
    bool odd_q = q % 2 == 1;
    t.constraint = (f == Family::C || !odd_q) ? TorusConstraint::None : TorusConstraint::EvenExponentSum;
  }
  t.full_order = 1;
  for (auto& x : t.factors)
    t.full_order = detail::checked_mul(t.full_order, x.order);

  switch (t.constraint) {
  case TorusConstraint::None: t.intersected_order = t.full_order; break;
  case TorusConstraint::DeterminantOne:
    t.intersected_order = detail::determinant_kernel_order(t.factors, d.family == Family::A2 ? -1 : 1, q);
    break;
  case TorusConstraint::EvenExponentSum: {
    // the even-sum sublattice maps onto a proper subgroup only if every factor order is even
    bool all_even = !t.factors.empty() &&
                    std::all_of(t.factors.begin(), t.factors.end(), [](const TorusFactor& x) { return x.order % 2 == 0; });
    t.intersected_order = all_even ? t.full_order / 2 : t.full_order;
    break;
  }
  }
  return t;
}

inline std::uint64_t intersected_torus_order(const TorusClassDescriptor& d) {
  return torus_factor_orders(d).intersected_order;
}

/// |S| * |C_W(w)|. Twisted families take the centralizer from the Weyl oracle.
inline std::uint64_t algebraic_normaliser_order(const TorusClassDescriptor& d) {
  return detail::checked_mul(intersected_torus_order(d), centralizer_order(d));
}

} // namespace tori
