#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tori/exceptional.hpp"
#include "tori/torus.hpp"
#include "tori/weylclass.hpp"

namespace tori {

/// A root in the a_i coordinates of the ambient lattice.
struct WitnessRoot {
  enum class Kind { Difference, Sum, Double, Short, Tabulated };
  Kind kind = Kind::Difference;
  int i = 1;
  int j = 2;
  std::string label; // Tabulated only

  std::string str() const {
    auto a = [](int k) { return "a_" + std::to_string(k); };
    switch (kind) {
    case Kind::Difference: return a(i) + "-" + a(j);
    case Kind::Sum: return a(i) + "+" + a(j);
    case Kind::Double: return "2" + a(i);
    case Kind::Short: return a(i);
    case Kind::Tabulated: return label;
    }
    return "?";
  }
  friend bool operator==(const WitnessRoot&, const WitnessRoot&) = default;
};

struct DegeneracyVerdict {
  bool degenerate = false;
  std::vector<std::string> clauses;
  std::vector<WitnessRoot> witness_roots;

  std::string status() const { return degenerate ? "Degenerate" : "Nondegenerate"; }

  void add(const std::string& clause, WitnessRoot w) {
    degenerate = true;
    clauses.push_back(clause);
    witness_roots.push_back(std::move(w));
  }
};

namespace detail {

// 1-based start of the first positive cycle of length len in block order
inline std::optional<int> positive_block_start(const SignedCycleType& t, int len) {
  int offset = 1;
  for (auto [l, positive] : t.blocks()) {
    if (positive && l == len)
      return offset;
    offset += l;
  }
  return std::nullopt;
}

} // namespace detail

/// Closed-form degeneracy decision for the classical families.
/// For 2D the descriptor already carries the type of w0*w.
inline DegeneracyVerdict classify_classical(const TorusClassDescriptor& d) {
  validate_descriptor(d, false);
  using K = WitnessRoot::Kind;
  DegeneracyVerdict v;
  const auto& t = d.type;
  const bool two_ones = t.count_positive(1) >= 2;
  const auto two_block = detail::positive_block_start(t, 2);
  const bool one = t.count_positive(1) >= 1;

  Family f = torus_family(d); // B over even q is C
  switch (f) {
  case Family::A:
    if (d.q == 2 && two_ones)
      v.add("A1", {K::Difference, 1, 2, {}});
    break;
  case Family::A2: break;
  case Family::C:
    if (d.q == 2 && two_ones)
      v.add("Sp-a", {K::Difference, 1, 2, {}});
    if (d.q == 2 && two_block)
      v.add("Sp-b", {K::Sum, *two_block, *two_block + 1, {}});
    if ((d.q == 2 || d.q == 3) && one)
      v.add("Sp-c", {K::Double, 1, 1, {}});
    break;
  case Family::D:
  case Family::D2:
    if (d.q == 2 && two_ones)
      v.add("Om-a", {K::Difference, 1, 2, {}});
    if (d.q == 2 && two_block)
      v.add("Om-b", {K::Sum, *two_block, *two_block + 1, {}});
    // below the simple range: small odd-characteristic orthogonal cases
    if (f == Family::D && d.q == 3 && d.n == 2 && t.negative.empty()) {
      if (t.positive == std::vector<int>{1, 1}) {
        v.add("SO-a", {K::Difference, 1, 2, {}});
        v.add("SO-b", {K::Sum, 1, 2, {}});
      }
      if (t.positive == std::vector<int>{2})
        v.add("SO-b", {K::Sum, 1, 2, {}});
    }
    break;
  case Family::B:
    if (d.q == 3 && d.n <= 2 && t.negative.empty()) {
      if (t.positive == std::vector<int>{1, 1}) {
        v.add("SO-a", {K::Difference, 1, 2, {}});
        v.add("SO-b", {K::Sum, 1, 2, {}});
      }
      if (t.positive == std::vector<int>{2})
        v.add("SO-b", {K::Sum, 1, 2, {}});
      if (t.positive == std::vector<int>{1})
        v.add("SO-c", {K::Short, 1, 1, {}});
    }
    break;
  }
  return v;
}

struct ExceptionalClassLabel {
  ExGroup group = ExGroup::G2;
  std::string label; // canonical
};

inline ExceptionalClassLabel make_exceptional_label(ExGroup g, const std::string& raw) {
  return {g, canonical_label(g, raw)};
}

inline DegeneracyVerdict classify_exceptional(const ExceptionalClassLabel& e, std::uint64_t q) {
  require_prime_power(q);
  if (e.group == ExGroup::B2_2) {
    auto pp = require_prime_power(q);
    if (pp.p != 2 || pp.k % 2 == 0)
      throw ParameterError("2B2 takes q^2 = 2^(2a+1), e.g. 8");
  }
  std::string label = canonical_label(e.group, e.label);
  DegeneracyVerdict v;
  if (q > static_cast<std::uint64_t>(exceptional_q_bound(e.group)) || q != 2)
    return v;
  const auto& deg = exceptional_table(e.group).degenerate_q2;
  if (std::find(deg.begin(), deg.end(), label) != deg.end())
    v.add("Ex-" + to_string(e.group), {WitnessRoot::Kind::Tabulated, 0, 0, "root vanishing on T (table)"});
  return v;
}

struct ClassicalCensusRow {
  TorusClassDescriptor descriptor;
  DegeneracyVerdict verdict;
};

struct ExceptionalCensusRow {
  ExGroup group;
  std::uint64_t q;
  std::string label;
  DegeneracyVerdict verdict;
};

template <class Row>
struct Census {
  std::vector<Row> rows; // every class examined
  std::size_t total = 0;
  std::size_t degenerate = 0;
};

inline Census<ClassicalCensusRow> degenerate_census(Family f, int n_lo, int n_hi, const std::vector<std::uint64_t>& qs,
                                                    bool simple_filter = true) {
  Census<ClassicalCensusRow> c;
  if (n_lo > n_hi)
    throw ParameterError("empty n range");
  if (simple_filter)
    n_lo = std::max(n_lo, simple_range_min(f));
  for (int n = n_lo; n <= n_hi; ++n)
    for (auto q : qs) {
      if (simple_filter && !in_simple_range(f, n, q))
        continue;
      for (auto& d : enumerate_torus_classes(f, n, q, simple_filter)) {
        auto v = classify_classical(d);
        ++c.total;
        if (v.degenerate)
          ++c.degenerate;
        c.rows.push_back({d, std::move(v)});
      }
    }
  return c;
}

/// Every tabulated (group, q, label) triple; an empty q list means the tabulated q of each group.
inline Census<ExceptionalCensusRow> exceptional_census(const std::vector<ExGroup>& groups,
                                                       const std::vector<std::uint64_t>& qs = {}) {
  Census<ExceptionalCensusRow> c;
  for (auto g : groups) {
    auto qlist = qs.empty() ? tabulated_q(g) : qs;
    for (auto q : qlist)
      for (auto& label : exceptional_table(g).universe) {
        auto v = classify_exceptional({g, label}, q);
        ++c.total;
        if (v.degenerate)
          ++c.degenerate;
        c.rows.push_back({g, q, label, std::move(v)});
      }
  }
  return c;
}

} // namespace tori
