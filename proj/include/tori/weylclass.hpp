#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "tori/arith.hpp"
#include "tori/error.hpp"

namespace tori {

/// Classical families of finite groups of Lie type. A2/D2 are the twisted
/// families ^2A and ^2D.
enum class Family { A, A2, B, C, D, D2 };

inline std::string to_string(Family f) {
  switch (f) {
  case Family::A: return "A";
  case Family::A2: return "2A";
  case Family::B: return "B";
  case Family::C: return "C";
  case Family::D: return "D";
  case Family::D2: return "2D";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  for (Family f : {Family::A, Family::A2, Family::B, Family::C, Family::D, Family::D2})
    if (to_string(f) == s)
      return f;
  throw ParameterError("unknown classical family '" + s + "'");
}

inline bool is_twisted(Family f) { return f == Family::A2 || f == Family::D2; }
inline bool is_type_a(Family f) { return f == Family::A || f == Family::A2; }
inline bool is_type_d(Family f) { return f == Family::D || f == Family::D2; }

/// Smallest n for which the family yields a finite simple group.
inline int simple_range_min(Family f) {
  switch (f) {
  case Family::A: return 2;
  case Family::A2: return 3;
  case Family::B: return 3;
  case Family::C: return 2;
  case Family::D:
  case Family::D2: return 4;
  }
  return 1;
}

/// Inside the simple range but not simple: PSL2(2), PSL2(3), PSU3(2).
inline bool small_nonsimple(Family f, int n, std::uint64_t q) {
  return (f == Family::A && n == 2 && q <= 3) || (f == Family::A2 && n == 3 && q == 2);
}

/// Whether (f, n, q) passes the simple filter.
inline bool in_simple_range(Family f, int n, std::uint64_t q) {
  return n >= simple_range_min(f) && !small_nonsimple(f, n, q);
}

// ---------------------------------------------------------------------------
// Signed cycle types

struct SignedCycleType {
  std::vector<int> positive; // ascending
  std::vector<int> negative; // ascending

  SignedCycleType() = default;
  SignedCycleType(std::vector<int> pos, std::vector<int> neg) : positive(std::move(pos)), negative(std::move(neg)) {
    for (int x : positive)
      if (x <= 0)
        throw ParameterError("cycle lengths must be positive");
    for (int x : negative)
      if (x <= 0)
        throw ParameterError("cycle lengths must be positive");
    std::sort(positive.begin(), positive.end());
    std::sort(negative.begin(), negative.end());
  }

  int size() const {
    int s = 0;
    for (int x : positive)
      s += x;
    for (int x : negative)
      s += x;
    return s;
  }
  int cycle_count() const { return static_cast<int>(positive.size() + negative.size()); }
  int count_positive(int len) const { return static_cast<int>(std::count(positive.begin(), positive.end(), len)); }

  /// Cycle lengths in block order: positives first, then negatives.
  std::vector<std::pair<int, bool>> blocks() const {
    std::vector<std::pair<int, bool>> b;
    for (int x : positive)
      b.emplace_back(x, true);
    for (int x : negative)
      b.emplace_back(x, false);
    return b;
  }

  /// Every cycle positive of even length: the Sl_n class splits in W_H.
  bool all_positive_even() const {
    if (!negative.empty() || positive.empty())
      return false;
    return std::all_of(positive.begin(), positive.end(), [](int x) { return x % 2 == 0; });
  }

  std::string str() const {
    std::string s;
    for (int x : positive)
      s += "(" + std::to_string(x) + ")";
    for (int x : negative)
      s += "(" + std::to_string(x) + "-)";
    return s;
  }

  friend bool operator==(const SignedCycleType&, const SignedCycleType&) = default;
  friend auto operator<=>(const SignedCycleType& a, const SignedCycleType& b) {
    if (auto c = a.negative.size() <=> b.negative.size(); c != 0)
      return c;
    if (auto c = a.negative <=> b.negative; c != 0)
      return c;
    return a.positive <=> b.positive;
  }
};

struct ParsedClass {
  SignedCycleType type;
  int split_tag = 0;
};

/// Parse "(2)(3)(1-)" with an optional "#2" suffix. Part order is free on input.
inline ParsedClass parse_class(const std::string& text) {
  ParsedClass out;
  std::string s = text;
  auto hash = s.find('#');
  if (hash != std::string::npos) {
    std::string tag = s.substr(hash + 1);
    if (tag == "1")
      out.split_tag = 1;
    else if (tag == "2")
      out.split_tag = 2;
    else
      throw ParameterError("bad split suffix in '" + text + "'");
    s = s.substr(0, hash);
  }
  std::vector<int> pos, neg;
  std::size_t i = 0;
  if (s.empty())
    throw ParameterError("empty class string");
  while (i < s.size()) {
    if (s[i] != '(')
      throw ParameterError("expected '(' in class string '" + text + "'");
    auto close = s.find(')', i);
    if (close == std::string::npos)
      throw ParameterError("unterminated cycle in '" + text + "'");
    std::string body = s.substr(i + 1, close - i - 1);
    bool negative = !body.empty() && body.back() == '-';
    if (negative)
      body.pop_back();
    if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParameterError("bad cycle length in '" + text + "'");
    int len = std::stoi(body);
    if (len <= 0)
      throw ParameterError("cycle length must be positive in '" + text + "'");
    (negative ? neg : pos).push_back(len);
    i = close + 1;
  }
  out.type = SignedCycleType(pos, neg);
  return out;
}

// ---------------------------------------------------------------------------
// Descriptors

struct TorusClassDescriptor {
  Family family = Family::A;
  int n = 0;
  std::uint64_t q = 2;
  SignedCycleType type;
  int split_tag = 0; // 0: class does not split; 1/2: first/second W_H class

  std::string class_string() const {
    return type.str() + (split_tag == 2 ? "#2" : "");
  }

  std::string str() const {
    return to_string(family) + " n=" + std::to_string(n) + " q=" + std::to_string(q) + " " + class_string();
  }

  friend bool operator==(const TorusClassDescriptor&, const TorusClassDescriptor&) = default;
  friend auto operator<=>(const TorusClassDescriptor& a, const TorusClassDescriptor& b) {
    if (auto c = a.family <=> b.family; c != 0)
      return c;
    if (auto c = a.n <=> b.n; c != 0)
      return c;
    if (auto c = a.q <=> b.q; c != 0)
      return c;
    if (auto c = a.type <=> b.type; c != 0)
      return c;
    return a.split_tag <=> b.split_tag;
  }
};

/// Check a descriptor against the parametrisation rules of its family.
inline void validate_descriptor(const TorusClassDescriptor& d, bool simple_filter = true) {
  require_prime_power(d.q);
  if (d.n < 1)
    throw ParameterError("n must be positive");
  if (simple_filter && d.n < simple_range_min(d.family))
    throw ParameterError(to_string(d.family) + " with n=" + std::to_string(d.n) +
                         " is outside the simple range (n >= " + std::to_string(simple_range_min(d.family)) +
                         "); pass the no-simple-filter override");
  if (simple_filter && small_nonsimple(d.family, d.n, d.q))
    throw ParameterError(to_string(d.family) + " with n=" + std::to_string(d.n) + " q=" + std::to_string(d.q) +
                         " is not simple; pass the no-simple-filter override");
  if (d.type.size() != d.n)
    throw ParameterError("class " + d.type.str() + " does not have size n=" + std::to_string(d.n));
  if (is_type_a(d.family) && !d.type.negative.empty())
    throw ParameterError("type-A classes have no negative cycles");
  int negs = static_cast<int>(d.type.negative.size());
  if (d.family == Family::D && negs % 2 != 0)
    throw ParameterError("D classes have an even number of negative cycles");
  if (d.family == Family::D2 && negs % 2 == 0)
    throw ParameterError("2D classes are stored by the type of w0*w, which has an odd number of negative cycles");
  bool splits = d.family == Family::D && d.type.all_positive_even();
  if (splits && d.split_tag == 0)
    throw InternalError("split class without tag");
  if (!splits && d.split_tag == 2)
    throw ParameterError("class " + d.type.str() + " does not split; '#2' is not allowed");
}

/// Parse a class string into a descriptor; a split class without suffix is member 1.
inline TorusClassDescriptor make_descriptor(Family f, int n, std::uint64_t q, const std::string& cls,
                                            bool simple_filter = true) {
  ParsedClass pc = parse_class(cls);
  TorusClassDescriptor d{f, n, q, pc.type, pc.split_tag};
  if (f == Family::D && d.type.all_positive_even() && d.split_tag == 0)
    d.split_tag = 1;
  if (d.split_tag == 1 && !(f == Family::D && d.type.all_positive_even()))
    d.split_tag = 0;
  validate_descriptor(d, simple_filter);
  return d;
}

/// Partitions of n, each ascending, in lexicographic order.
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, 1);
  return out;
}

inline std::vector<SignedCycleType> all_signed_cycle_types(int n) {
  std::vector<SignedCycleType> out;
  for (int s = 0; s <= n; ++s)
    for (auto& pos : partitions(s))
      for (auto& neg : partitions(n - s))
        out.emplace_back(pos, neg);
  std::sort(out.begin(), out.end());
  return out;
}

/// The parameter set of torus classes for a family, in canonical order.
inline std::vector<TorusClassDescriptor> enumerate_torus_classes(Family f, int n, std::uint64_t q,
                                                                 bool simple_filter = true) {
  require_prime_power(q);
  if (n < 1)
    throw ParameterError("n must be positive");
  if (simple_filter && !in_simple_range(f, n, q))
    throw ParameterError(to_string(f) + " with n=" + std::to_string(n) + " q=" + std::to_string(q) +
                         " is outside the simple range");
  std::vector<TorusClassDescriptor> out;
  if (is_type_a(f)) {
    for (auto& p : partitions(n))
      out.push_back({f, n, q, SignedCycleType(p, {}), 0});
    std::sort(out.begin(), out.end());
    return out;
  }
  for (auto& t : all_signed_cycle_types(n)) {
    int negs = static_cast<int>(t.negative.size());
    if (f == Family::D && negs % 2 != 0)
      continue;
    if (f == Family::D2 && negs % 2 == 0)
      continue;
    if (f == Family::D && t.all_positive_even()) {
      out.push_back({f, n, q, t, 1});
      out.push_back({f, n, q, t, 2});
    } else {
      out.push_back({f, n, q, t, 0});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Signed permutations

/// A permutation tau of {+-1..+-n} with tau(-i) = -tau(i); images[i-1] = tau(i).
struct SignedPermutation {
  std::vector<int> images;

  static SignedPermutation identity(int n) {
    SignedPermutation p;
    for (int i = 1; i <= n; ++i)
      p.images.push_back(i);
    return p;
  }

  int n() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return i > 0 ? images[i - 1] : -images[-i - 1]; }

  /// (a*b)(i) = a(b(i))
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
    SignedPermutation r;
    r.images.resize(a.images.size());
    for (int i = 1; i <= a.n(); ++i)
      r.images[i - 1] = a(b(i));
    return r;
  }

  SignedPermutation inverse() const {
    SignedPermutation r;
    r.images.resize(images.size());
    for (int i = 1; i <= n(); ++i) {
      int j = images[i - 1];
      r.images[std::abs(j) - 1] = j > 0 ? i : -i;
    }
    return r;
  }

  int negative_sign_count() const {
    return static_cast<int>(std::count_if(images.begin(), images.end(), [](int x) { return x < 0; }));
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

/// Consecutive blocks, positive cycles first; a negative cycle flips sign at the wrap.
inline SignedPermutation standard_representative(const SignedCycleType& t) {
  SignedPermutation p;
  p.images.resize(t.size());
  int start = 1;
  for (auto [len, positive] : t.blocks()) {
    for (int k = 0; k < len - 1; ++k)
      p.images[start + k - 1] = start + k + 1;
    p.images[start + len - 2] = positive ? start : -start;
    start += len;
  }
  return p;
}

inline SignedCycleType signed_cycle_type(const SignedPermutation& p) {
  const int n = p.n();
  std::vector<bool> seen(n + 1, false);
  std::vector<int> pos, neg;
  for (int i = 1; i <= n; ++i) {
    if (seen[i])
      continue;
    int len = 0;
    int cur = i;
    do {
      seen[std::abs(cur)] = true;
      cur = p(cur);
      ++len;
    } while (std::abs(cur) != i);
    (cur == i ? pos : neg).push_back(len);
  }
  return SignedCycleType(pos, neg);
}

// ---------------------------------------------------------------------------
// Centralizer orders

inline std::uint64_t weyl_group_order(Family f, int n) {
  if (is_type_a(f))
    return factorial(n);
  std::uint64_t b = (std::uint64_t{1} << n) * factorial(n);
  return is_type_d(f) ? b / 2 : b;
}

inline std::uint64_t sym_centralizer(const std::vector<int>& parts) {
  std::map<int, int> mult;
  for (int x : parts)
    ++mult[x];
  std::uint64_t r = 1;
  for (auto [j, m] : mult)
    r *= ipow(j, m) * factorial(m);
  return r;
}

inline std::uint64_t hyperoctahedral_centralizer(const SignedCycleType& t) {
  std::map<int, int> mp, mn;
  for (int x : t.positive)
    ++mp[x];
  for (int x : t.negative)
    ++mn[x];
  std::uint64_t r = 1;
  for (auto [j, m] : mp)
    r *= ipow(2 * j, m) * factorial(m);
  for (auto [j, m] : mn)
    r *= ipow(2 * j, m) * factorial(m);
  return r;
}

struct ClassStats {
  std::uint64_t class_size = 0;
  std::uint64_t centralizer = 0;
};

using WeylOracleKey = std::pair<SignedCycleType, int>; // (type, split tag)

namespace detail {

// Elements of the hyperoctahedral group B_n, indexed by (Lehmer rank, sign mask).
class HyperoctahedralIndex {
public:
  explicit HyperoctahedralIndex(int n) : n_(n), fact_(factorial(n)) {}

  std::uint64_t size() const { return fact_ << n_; }

  std::uint64_t encode(const SignedPermutation& p) const {
    std::uint64_t rank = 0;
    std::uint32_t mask = 0;
    std::array<int, 16> abs_img{};
    for (int i = 0; i < n_; ++i) {
      abs_img[i] = std::abs(p.images[i]);
      if (p.images[i] < 0)
        mask |= 1u << i;
    }
    for (int i = 0; i < n_; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n_; ++j)
        if (abs_img[j] < abs_img[i])
          ++smaller;
      rank = rank * (n_ - i) + smaller;
    }
    return (rank << n_) | mask;
  }

  SignedPermutation decode(std::uint64_t code) const {
    std::uint32_t mask = static_cast<std::uint32_t>(code & ((1u << n_) - 1));
    std::uint64_t rank = code >> n_;
    std::vector<int> digits(n_);
    for (int i = n_ - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(rank % (n_ - i));
      rank /= (n_ - i);
    }
    std::vector<int> avail;
    for (int i = 1; i <= n_; ++i)
      avail.push_back(i);
    SignedPermutation p;
    p.images.resize(n_);
    for (int i = 0; i < n_; ++i) {
      int v = avail[digits[i]];
      avail.erase(avail.begin() + digits[i]);
      p.images[i] = (mask >> i) & 1 ? -v : v;
    }
    return p;
  }

private:
  int n_;
  std::uint64_t fact_;
};

inline std::vector<SignedPermutation> weyl_generators(Family f, int n) {
  std::vector<SignedPermutation> gens;
  for (int i = 1; i < n; ++i) {
    auto s = SignedPermutation::identity(n);
    std::swap(s.images[i - 1], s.images[i]);
    gens.push_back(s);
  }
  if (is_type_a(f) || n < 1)
    return gens;
  auto t = SignedPermutation::identity(n);
  if (is_type_d(f)) {
    if (n >= 2) {
      t.images[0] = -2;
      t.images[1] = -1;
      gens.push_back(t);
    }
  } else {
    t.images[0] = -1;
    gens.push_back(t);
  }
  return gens;
}

inline bool in_weyl_group(Family f, const SignedPermutation& p) {
  if (is_type_a(f))
    return p.negative_sign_count() == 0;
  if (is_type_d(f))
    return p.negative_sign_count() % 2 == 0;
  return true;
}

} // namespace detail

/// Brute-force class sizes and centralizer orders of the Weyl group (or of
/// its sigma-classes for twisted families) by explicit enumeration.
/// A/2A: Sym(n) (sigma acts trivially); B/C: Sl_n; D: W_H; 2D: W_H-orbits on
/// the coset w0*W_H, keyed by the type of w0*w.
inline std::map<WeylOracleKey, ClassStats> brute_force_weyl_oracle(Family f, int n) {
  if (n > 7)
    throw BudgetError("Weyl oracle limited to n <= 7");
  if (n < 1)
    throw ParameterError("n must be positive");
  if (is_type_d(f) && n < 2)
    throw ParameterError("type D Weyl oracle needs n >= 2");
  detail::HyperoctahedralIndex idx(n);
  const auto gens = detail::weyl_generators(f, n);
  const std::uint64_t group_order = weyl_group_order(f, n);

  // members of the acted-on set
  auto member = [&](const SignedPermutation& p) {
    if (is_type_a(f))
      return p.negative_sign_count() == 0;
    if (f == Family::D)
      return p.negative_sign_count() % 2 == 0;
    if (f == Family::D2)
      return p.negative_sign_count() % 2 == 1;
    return true;
  };

  std::vector<std::int32_t> cls(idx.size(), -1);
  std::map<WeylOracleKey, ClassStats> out;
  std::int32_t next_id = 0;
  std::vector<std::uint64_t> stack;
  for (std::uint64_t code = 0; code < idx.size(); ++code) {
    if (cls[code] >= 0)
      continue;
    SignedPermutation start = idx.decode(code);
    if (!member(start))
      continue;
    std::uint64_t size = 0;
    cls[code] = next_id;
    stack.push_back(code);
    bool contains_standard = false;
    SignedCycleType t = signed_cycle_type(start);
    std::uint64_t std_code = idx.encode(standard_representative(t));
    while (!stack.empty()) {
      std::uint64_t c = stack.back();
      stack.pop_back();
      ++size;
      if (c == std_code)
        contains_standard = true;
      SignedPermutation x = idx.decode(c);
      for (auto& g : gens) {
        std::uint64_t y = idx.encode(g * x * g.inverse());
        if (cls[y] < 0) {
          cls[y] = next_id;
          stack.push_back(y);
        }
      }
    }
    ++next_id;
    int tag = 0;
    if (f == Family::D && t.all_positive_even())
      tag = contains_standard ? 1 : 2;
    out[{t, tag}] = ClassStats{size, group_order / size};
  }
  return out;
}

/// Memoised oracle tables, shared across calls.
inline const std::map<WeylOracleKey, ClassStats>& weyl_oracle_cached(Family f, int n) {
  static std::mutex mu;
  static std::map<std::pair<Family, int>, std::map<WeylOracleKey, ClassStats>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({f, n});
  if (it == cache.end())
    it = cache.emplace(std::pair{f, n}, brute_force_weyl_oracle(f, n)).first;
  return it->second;
}

/// |C_W(w)| by closed formula for untwisted families; sigma-centralizer
/// orders for twisted families come from the brute-force oracle only.
inline std::uint64_t centralizer_order(Family f, int n, const SignedCycleType& t, int split_tag = 0) {
  if (t.size() != n)
    throw ParameterError("class size does not match n");
  switch (f) {
  case Family::A:
    if (!t.negative.empty())
      throw ParameterError("type-A classes have no negative cycles");
    return sym_centralizer(t.positive);
  case Family::B:
  case Family::C: return hyperoctahedral_centralizer(t);
  case Family::D: {
    if (t.negative.size() % 2 != 0)
      throw ParameterError("D classes have an even number of negative cycles");
    std::uint64_t c = hyperoctahedral_centralizer(t);
    return t.all_positive_even() ? c : c / 2;
  }
  case Family::A2:
  case Family::D2: {
    if (n > 7)
      throw UnsupportedError("sigma-centralizer of twisted family " + to_string(f) +
                             " is oracle-only and the oracle is limited to n <= 7");
    const auto& table = weyl_oracle_cached(f, n);
    auto it = table.find({t, split_tag});
    if (it == table.end())
      throw ParameterError("class " + t.str() + " not present for " + to_string(f));
    return it->second.centralizer;
  }
  }
  return 0;
}

inline std::uint64_t centralizer_order(const TorusClassDescriptor& d) {
  return centralizer_order(d.family, d.n, d.type, d.split_tag);
}

} // namespace tori
