#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tori/error.hpp"
#include "tori/rational.hpp"

namespace tori {

enum class RootFamily { A, B, C, D, G2, F4, E6, E7, E8 };

inline std::string to_string(RootFamily f) {
  switch (f) {
  case RootFamily::A: return "A";
  case RootFamily::B: return "B";
  case RootFamily::C: return "C";
  case RootFamily::D: return "D";
  case RootFamily::G2: return "G2";
  case RootFamily::F4: return "F4";
  case RootFamily::E6: return "E6";
  case RootFamily::E7: return "E7";
  case RootFamily::E8: return "E8";
  }
  return "?";
}

inline RootFamily parse_root_family(const std::string& s) {
  for (RootFamily f : {RootFamily::A, RootFamily::B, RootFamily::C, RootFamily::D, RootFamily::G2,
                       RootFamily::F4, RootFamily::E6, RootFamily::E7, RootFamily::E8})
    if (to_string(f) == s)
      return f;
  throw ParameterError("unknown root system family '" + s + "'");
}

inline bool is_exceptional(RootFamily f) {
  return f == RootFamily::G2 || f == RootFamily::F4 || f == RootFamily::E6 || f == RootFamily::E7 ||
         f == RootFamily::E8;
}

struct RootSystemType {
  RootFamily family = RootFamily::A;
  int rank = 1;

  RootSystemType() = default;
  RootSystemType(RootFamily f, int r) : family(f), rank(r) { validate(); }

  /// Exceptional families carry a fixed rank.
  static RootSystemType exceptional(RootFamily f) {
    switch (f) {
    case RootFamily::G2: return {f, 2};
    case RootFamily::F4: return {f, 4};
    case RootFamily::E6: return {f, 6};
    case RootFamily::E7: return {f, 7};
    case RootFamily::E8: return {f, 8};
    default: throw ParameterError(to_string(f) + " needs an explicit rank");
    }
  }

  void validate() const {
    auto bad = [&](const std::string& why) {
      throw ParameterError("invalid rank " + std::to_string(rank) + " for " + to_string(family) + ": " + why);
    };
    switch (family) {
    case RootFamily::A: if (rank < 1) bad("need rank >= 1"); break;
    case RootFamily::B:
    case RootFamily::C: if (rank < 2) bad("need rank >= 2"); break;
    case RootFamily::D: if (rank < 3) bad("need rank >= 3"); break;
    case RootFamily::G2: if (rank != 2) bad("fixed rank 2"); break;
    case RootFamily::F4: if (rank != 4) bad("fixed rank 4"); break;
    case RootFamily::E6: if (rank != 6) bad("fixed rank 6"); break;
    case RootFamily::E7: if (rank != 7) bad("fixed rank 7"); break;
    case RootFamily::E8: if (rank != 8) bad("fixed rank 8"); break;
    }
  }

  std::string name() const {
    return is_exceptional(family) ? to_string(family) : to_string(family) + std::to_string(rank);
  }

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

using RationalVector = std::vector<Rational>;

struct Root {
  RationalVector coords;
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root& a, const Root& b) { return a.coords <=> b.coords; }
};

inline Rational inner(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size())
    throw InternalError("inner product of vectors of different dimension");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

inline Rational squared_norm(const RationalVector& v) { return inner(v, v); }

/// The Cartan integer <alpha, beta> = 2(alpha, beta)/(beta, beta).
inline std::int64_t cartan_pairing(const Root& alpha, const Root& beta) {
  Rational bb = squared_norm(beta.coords);
  if (bb.is_zero())
    throw InternalError("cartan pairing against a zero-length vector");
  Rational v = Rational(2) * inner(alpha.coords, beta.coords) / bb;
  if (!v.is_integer())
    throw InternalError("non-integral Cartan pairing " + v.str());
  return v.num();
}

struct RootSystem {
  RootSystemType type;
  int ambient_dim = 0;
  std::vector<Root> roots;
  std::vector<Root> simple;
  std::vector<std::vector<std::int64_t>> cartan;
  std::vector<RationalVector> weights;
  int delta = 1;

  std::size_t size() const { return roots.size(); }
  bool contains(const Root& r) const { return std::binary_search(roots.begin(), roots.end(), r); }
};

/// Index of the weight lattice over the root lattice for the universal group.
inline int delta_table(const RootSystemType& t) {
  switch (t.family) {
  case RootFamily::A: return t.rank + 1;
  case RootFamily::B:
  case RootFamily::C: return 2;
  case RootFamily::D: return 4;
  case RootFamily::G2:
  case RootFamily::F4:
  case RootFamily::E8: return 1;
  case RootFamily::E6: return 3;
  case RootFamily::E7: return 2;
  }
  return 0;
}

/// Fields above this bound have only nondegenerate tori in the universal group.
inline int q_bound(const RootSystemType& t) {
  switch (t.family) {
  case RootFamily::D: return 5;
  case RootFamily::B:
  case RootFamily::C:
  case RootFamily::E6: return 4;
  case RootFamily::G2:
  case RootFamily::E7: return 3;
  case RootFamily::A:
  case RootFamily::F4:
  case RootFamily::E8: return 2;
  }
  return 0;
}

namespace detail {

inline RationalVector unit(int dim, int i, Rational c = 1) {
  RationalVector v(dim);
  v[i] = c;
  return v;
}

inline RationalVector combo(int dim, std::initializer_list<std::pair<int, int>> terms) {
  RationalVector v(dim);
  for (auto [i, c] : terms)
    v[i] += Rational(c);
  return v;
}

inline RationalVector operator_add(const RationalVector& a, const RationalVector& b, Rational cb = 1) {
  RationalVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += cb * b[i];
  return r;
}

// a_eps for a sign string like "+------+".
inline RationalVector half_signs(const std::string& signs) {
  RationalVector v;
  for (char c : signs)
    v.push_back(Rational(c == '+' ? 1 : -1, 2));
  return v;
}

inline void add_pm_pairs(std::vector<RationalVector>& out, int dim) {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1})
          out.push_back(combo(dim, {{i, si}, {j, sj}}));
}

inline std::vector<RationalVector> e8_roots() {
  std::vector<RationalVector> out;
  add_pm_pairs(out, 8);
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0)
      continue; // even number of minus signs
    RationalVector v(8);
    for (int i = 0; i < 8; ++i)
      v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
    out.push_back(v);
  }
  return out;
}

// Gauss-Jordan inverse of a square integer matrix over the rationals.
inline std::vector<RationalVector> inverse(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  std::vector<RationalVector> a(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = Rational(m[i][j]);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero())
      ++p;
    if (p == n)
      throw InternalError("singular Cartan matrix");
    std::swap(a[p], a[c]);
    Rational inv = Rational(1) / a[c][c];
    for (auto& x : a[c])
      x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero())
        continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k)
        a[r][k] -= f * a[c][k];
    }
  }
  std::vector<RationalVector> out(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i][j] = a[i][n + j];
  return out;
}

} // namespace detail

/// Roots in the ambient orthonormal basis, simple roots in the fixed printed
/// order, Cartan matrix, fundamental weights and Delta.
inline RootSystem build_root_system(const RootSystemType& type) {
  using namespace detail;
  type.validate();
  const int l = type.rank;
  RootSystem rs;
  rs.type = type;
  std::vector<RationalVector> all;
  std::vector<RationalVector> simple;

  switch (type.family) {
  case RootFamily::A: {
    const int dim = l + 1;
    rs.ambient_dim = dim;
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) {
        all.push_back(combo(dim, {{i, 1}, {j, -1}}));
        all.push_back(combo(dim, {{i, -1}, {j, 1}}));
      }
    for (int i = 0; i < l; ++i)
      simple.push_back(combo(dim, {{i, 1}, {i + 1, -1}}));
    break;
  }
  case RootFamily::B:
  case RootFamily::C:
  case RootFamily::D: {
    rs.ambient_dim = l;
    add_pm_pairs(all, l);
    if (type.family == RootFamily::B)
      for (int i = 0; i < l; ++i) {
        all.push_back(unit(l, i, 1));
        all.push_back(unit(l, i, -1));
      }
    if (type.family == RootFamily::C)
      for (int i = 0; i < l; ++i) {
        all.push_back(unit(l, i, 2));
        all.push_back(unit(l, i, -2));
      }
    for (int i = 0; i + 1 < l; ++i)
      simple.push_back(combo(l, {{i, 1}, {i + 1, -1}}));
    if (type.family == RootFamily::B)
      simple.push_back(unit(l, l - 1, 1));
    else if (type.family == RootFamily::C)
      simple.push_back(unit(l, l - 1, 2));
    else
      simple.push_back(combo(l, {{l - 2, 1}, {l - 1, 1}}));
    break;
  }
  case RootFamily::G2: {
    rs.ambient_dim = 3;
    RationalVector a{0, 1, -1}, b{1, -2, 1};
    std::vector<RationalVector> pos{a, b, operator_add(a, b), operator_add(b, a, 2), operator_add(b, a, 3),
                                    operator_add(operator_add(b, b), a, 3)};
    for (auto& v : pos) {
      all.push_back(v);
      RationalVector neg(v);
      for (auto& x : neg)
        x = -x;
      all.push_back(neg);
    }
    simple = {a, b};
    break;
  }
  case RootFamily::F4: {
    rs.ambient_dim = 4;
    add_pm_pairs(all, 4);
    for (int i = 0; i < 4; ++i) {
      all.push_back(unit(4, i, 1));
      all.push_back(unit(4, i, -1));
    }
    for (int mask = 0; mask < 16; ++mask) {
      RationalVector v(4);
      for (int i = 0; i < 4; ++i)
        v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
      all.push_back(v);
    }
    simple = {combo(4, {{1, 1}, {2, -1}}), combo(4, {{2, 1}, {3, -1}}), unit(4, 3, 1), half_signs("+---")};
    break;
  }
  case RootFamily::E6:
  case RootFamily::E7:
  case RootFamily::E8: {
    rs.ambient_dim = 8;
    std::vector<RationalVector> e8_simple{half_signs("+------+"),    combo(8, {{6, 1}, {7, -1}}),
                                          combo(8, {{5, 1}, {6, -1}}), combo(8, {{6, 1}, {7, 1}}),
                                          combo(8, {{4, 1}, {5, -1}}), combo(8, {{3, 1}, {4, -1}}),
                                          combo(8, {{2, 1}, {3, -1}}), combo(8, {{1, 1}, {2, -1}})};
    RationalVector perp7 = combo(8, {{0, 1}, {1, 1}});
    RationalVector perp6 = combo(8, {{1, 1}, {2, -1}});
    for (auto& v : e8_roots()) {
      if (type.family != RootFamily::E8 && !inner(v, perp7).is_zero())
        continue;
      if (type.family == RootFamily::E6 && !inner(v, perp6).is_zero())
        continue;
      all.push_back(v);
    }
    simple.assign(e8_simple.begin(), e8_simple.begin() + l);
    break;
  }
  }

  for (auto& v : all)
    rs.roots.push_back(Root{v});
  std::sort(rs.roots.begin(), rs.roots.end());
  rs.roots.erase(std::unique(rs.roots.begin(), rs.roots.end()), rs.roots.end());
  for (auto& v : simple)
    rs.simple.push_back(Root{v});

  rs.cartan.assign(l, std::vector<std::int64_t>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      rs.cartan[i][j] = cartan_pairing(rs.simple[i], rs.simple[j]);

  // alpha_i = sum_j a_ij lambda_j, so lambda = A^{-1} alpha.
  auto inv = inverse(rs.cartan);
  for (int j = 0; j < l; ++j) {
    RationalVector w(rs.ambient_dim);
    for (int k = 0; k < l; ++k)
      w = operator_add(w, rs.simple[k].coords, inv[j][k]);
    rs.weights.push_back(w);
  }
  rs.delta = delta_table(type);
  return rs;
}

/// Expected |Sigma| for a type.
inline std::size_t expected_root_count(const RootSystemType& t) {
  const std::size_t l = t.rank;
  switch (t.family) {
  case RootFamily::A: return l * (l + 1);
  case RootFamily::B:
  case RootFamily::C: return 2 * l * l;
  case RootFamily::D: return 2 * l * (l - 1);
  case RootFamily::G2: return 12;
  case RootFamily::F4: return 48;
  case RootFamily::E6: return 72;
  case RootFamily::E7: return 126;
  case RootFamily::E8: return 240;
  }
  return 0;
}

/// Minimum squared norm over nonzero vectors sum c_i g_i with every c_i in
/// [-bound, bound]. Exact: coordinates are scaled to integers first.
inline Rational min_squared_norm_bounded(const std::vector<RationalVector>& gens, int bound) {
  if (gens.empty())
    throw ParameterError("no generators");
  const std::size_t dim = gens[0].size();
  std::int64_t scale = 1;
  for (auto& g : gens)
    for (auto& x : g)
      scale = std::lcm(scale, x.den());
  std::vector<std::vector<std::int64_t>> g(gens.size(), std::vector<std::int64_t>(dim));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t k = 0; k < dim; ++k)
      g[i][k] = gens[i][k].num() * (scale / gens[i][k].den());

  const std::size_t m = gens.size();
  std::vector<int> c(m, -bound);
  std::vector<std::int64_t> v(dim, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < dim; ++k)
      v[k] += -bound * g[i][k];
  std::optional<std::int64_t> best;
  while (true) {
    std::int64_t n2 = 0;
    for (auto x : v)
      n2 += x * x;
    if (n2 != 0 && (!best || n2 < *best))
      best = n2;
    // odometer step
    std::size_t i = 0;
    while (i < m && c[i] == bound) {
      c[i] = -bound;
      for (std::size_t k = 0; k < dim; ++k)
        v[k] -= 2 * bound * g[i][k];
      ++i;
    }
    if (i == m)
      break;
    ++c[i];
    for (std::size_t k = 0; k < dim; ++k)
      v[k] += g[i][k];
  }
  if (!best)
    throw InternalError("all generators vanish");
  return Rational(*best, scale * scale);
}

/// Squared minimum norm used by the q-bound argument: over the root lattice
/// for non-A types, over the weight lattice for A_l.
inline Rational weight_lattice_min_norm(const RootSystemType& type) {
  RootSystem rs = build_root_system(type);
  std::vector<RationalVector> gens;
  if (type.family == RootFamily::A)
    gens = rs.weights;
  else
    for (auto& r : rs.simple)
      gens.push_back(r.coords);
  return min_squared_norm_bounded(gens, 3);
}

} // namespace tori
