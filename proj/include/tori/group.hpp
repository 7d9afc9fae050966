#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "tori/matrix.hpp"

namespace tori {

inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

enum class Membership { DeterminantOne, FormPreserving, FormPreservingDicksonEven };

/// A matrix group given by generators, with the form data it preserves.
/// Coordinates follow (1..n, -1..-n); a leading 0 coordinate for odd orthogonal.
struct GroupSpec {
  std::string name;
  std::shared_ptr<const Field> field;
  int dim = 0;
  Membership membership = Membership::DeterminantOne;
  std::optional<Matrix> gram; // bilinear (symplectic) form, or quadratic form Q (upper triangular)
  std::vector<Matrix> generators;
};

namespace detail {

inline Matrix unit_sum(std::shared_ptr<const Field> F, int dim, std::initializer_list<std::tuple<int, int, Elt>> terms) {
  Matrix m = Matrix::identity(F, dim);
  for (auto [i, j, v] : terms)
    m(i, j) = F->add(m(i, j), v);
  return m;
}

// Additive spanning set of GF(q) over GF(p)
inline std::vector<Elt> field_basis(const Field& F) {
  std::vector<Elt> out;
  Elt w = F.primitive_element();
  Elt x = 1;
  for (int i = 0; i < F.k(); ++i) {
    out.push_back(x);
    x = F.mul(x, w);
  }
  return out;
}

} // namespace detail

/// Symplectic Gram matrix J: J(i,-i) = 1, J(-i,i) = -1.
inline Matrix symplectic_form(std::shared_ptr<const Field> F, int n) {
  Matrix J(F, 2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    J(i, n + i) = 1;
    J(n + i, i) = F->neg(1);
  }
  return J;
}

/// Split quadratic form sum x_i x_{-i}, as an upper-triangular matrix.
inline Matrix split_quadratic_form(std::shared_ptr<const Field> F, int n) {
  Matrix Q(F, 2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    Q(i, n + i) = 1;
  return Q;
}

inline GroupSpec special_linear_group(int n, std::uint64_t q) {
  auto F = field(q);
  GroupSpec g{"SL" + std::to_string(n) + "(" + std::to_string(q) + ")", F, n, Membership::DeterminantOne, {}, {}};
  for (Elt t : detail::field_basis(*F))
    for (int i = 0; i + 1 < n; ++i) {
      g.generators.push_back(detail::unit_sum(F, n, {{i, i + 1, t}}));
      g.generators.push_back(detail::unit_sum(F, n, {{i + 1, i, t}}));
    }
  return g;
}

/// Root element x_alpha(t) of Sp_{2n} in the (1..n,-1..-n) coordinates.
/// kind: 0 a_i - a_j, 1 a_i + a_j, 2 2a_i, 3 -(a_i + a_j), 4 -2a_i (indices 1-based).
inline Matrix symplectic_root_element(std::shared_ptr<const Field> F, int n, int kind, int i, int j, Elt t) {
  const int a = i - 1, b = j - 1;
  const Elt mt = F->neg(t);
  switch (kind) {
  case 0: return detail::unit_sum(F, 2 * n, {{a, b, t}, {n + b, n + a, mt}});
  case 1: return detail::unit_sum(F, 2 * n, {{a, n + b, t}, {b, n + a, t}});
  case 2: return detail::unit_sum(F, 2 * n, {{a, n + a, t}});
  case 3: return detail::unit_sum(F, 2 * n, {{n + b, a, t}, {n + a, b, t}});
  case 4: return detail::unit_sum(F, 2 * n, {{n + a, a, t}});
  }
  throw InternalError("bad root kind");
}

inline GroupSpec symplectic_group(int n, std::uint64_t q) {
  auto F = field(q);
  GroupSpec g{"Sp" + std::to_string(2 * n) + "(" + std::to_string(q) + ")", F, 2 * n, Membership::FormPreserving,
              symplectic_form(F, n), {}};
  for (Elt t : detail::field_basis(*F)) {
    for (int i = 1; i < n; ++i) {
      g.generators.push_back(symplectic_root_element(F, n, 0, i, i + 1, t));
      g.generators.push_back(symplectic_root_element(F, n, 0, i + 1, i, t));
    }
    g.generators.push_back(symplectic_root_element(F, n, 2, n, n, t));
    g.generators.push_back(symplectic_root_element(F, n, 4, n, n, t));
  }
  return g;
}

/// Orthogonal root element of Omega^+_{2n}: kind 0 a_i - a_j, 1 a_i + a_j, 3 -(a_i + a_j).
inline Matrix orthogonal_root_element(std::shared_ptr<const Field> F, int n, int kind, int i, int j, Elt t) {
  const int a = i - 1, b = j - 1;
  const Elt mt = F->neg(t);
  switch (kind) {
  case 0: return detail::unit_sum(F, 2 * n, {{a, b, t}, {n + b, n + a, mt}});
  case 1: return detail::unit_sum(F, 2 * n, {{a, n + b, t}, {b, n + a, mt}});
  case 3: return detail::unit_sum(F, 2 * n, {{n + b, a, t}, {n + a, b, mt}});
  }
  throw InternalError("bad root kind");
}

/// Omega^+_{2n}(q), q even, generated by root elements of the simple roots and their negatives.
inline GroupSpec omega_plus_group(int n, std::uint64_t q) {
  auto F = field(q);
  if (F->p() != 2)
    throw UnsupportedError("Omega^+ generators are shipped for even q only");
  if (n < 2)
    throw ParameterError("Omega^+_{2n} needs n >= 2");
  GroupSpec g{"Omega+" + std::to_string(2 * n) + "(" + std::to_string(q) + ")", F, 2 * n,
              Membership::FormPreservingDicksonEven, split_quadratic_form(F, n), {}};
  for (Elt t : detail::field_basis(*F)) {
    for (int i = 1; i < n; ++i) {
      g.generators.push_back(orthogonal_root_element(F, n, 0, i, i + 1, t));
      g.generators.push_back(orthogonal_root_element(F, n, 0, i + 1, i, t));
    }
    g.generators.push_back(orthogonal_root_element(F, n, 1, n - 1, n, t));
    g.generators.push_back(orthogonal_root_element(F, n, 3, n - 1, n, t));
  }
  return g;
}

/// Whether m preserves the form data of the spec (ignores the Dickson condition).
inline bool preserves_form(const GroupSpec& g, const Matrix& m) {
  const Field& F = *g.field;
  switch (g.membership) {
  case Membership::DeterminantOne: return m.determinant() == 1;
  case Membership::FormPreserving: return m.transpose() * (*g.gram) * m == *g.gram;
  case Membership::FormPreservingDicksonEven: {
    // x^T Q x is preserved iff g^T Q g - Q is alternating
    Matrix A = m.transpose() * (*g.gram) * m - *g.gram;
    for (int i = 0; i < A.rows(); ++i) {
      if (A(i, i) != 0)
        return false;
      for (int j = 0; j < i; ++j)
        if (F.add(A(i, j), A(j, i)) != 0)
          return false;
    }
    return true;
  }
  }
  return false;
}

inline bool is_member(const GroupSpec& g, const Matrix& m) {
  if (!preserves_form(g, m))
    return false;
  if (g.membership == Membership::FormPreservingDicksonEven)
    return dickson_even(m);
  return true;
}

/// Packs a matrix into 64 bits: entry codes of ceil(log2 q) bits each, row-major.
class MatrixCodec {
public:
  MatrixCodec(std::shared_ptr<const Field> F, int dim) : F_(std::move(F)), dim_(dim) {
    bits_ = std::bit_width(static_cast<std::uint32_t>(F_->q() - 1));
    if (static_cast<long>(bits_) * dim * dim > 64)
      throw UnsupportedError("matrix of size " + std::to_string(dim) + " over " + F_->name() +
                             " does not fit the 64-bit element key");
    mask_ = (1ull << bits_) - 1;
  }
  std::uint64_t encode(const Matrix& m) const {
    std::uint64_t k = 0;
    int s = 0;
    for (Elt v : m.data()) {
      k |= static_cast<std::uint64_t>(v) << s;
      s += bits_;
    }
    return k;
  }
  Matrix decode(std::uint64_t k) const {
    Matrix m(F_, dim_, dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        m(i, j) = static_cast<Elt>(k & mask_);
        k >>= bits_;
      }
    return m;
  }
  /// Product of encoded matrices; GF(2) uses row XOR on packed rows.
  std::uint64_t multiply(std::uint64_t x, std::uint64_t y) const {
    if (F_->q() == 2) {
      const std::uint64_t row_mask = dim_ == 64 ? ~0ull : (1ull << dim_) - 1;
      std::uint64_t r = 0;
      for (int i = 0; i < dim_; ++i) {
        std::uint64_t xr = (x >> (i * dim_)) & row_mask, acc = 0;
        while (xr) {
          int k = std::countr_zero(xr);
          acc ^= (y >> (k * dim_)) & row_mask;
          xr &= xr - 1;
        }
        r |= acc << (i * dim_);
      }
      return r;
    }
    return encode(decode(x) * decode(y));
  }
  int dim() const { return dim_; }
  const std::shared_ptr<const Field>& field() const { return F_; }

private:
  std::shared_ptr<const Field> F_;
  int dim_;
  int bits_ = 1;
  std::uint64_t mask_ = 1;
};

/// A finite matrix group stored as the set of encoded elements.
class EnumeratedGroup {
public:
  EnumeratedGroup(MatrixCodec codec, std::vector<std::uint64_t> elems)
    : codec_(std::move(codec)), elems_(std::move(elems)), set_(elems_.begin(), elems_.end()) {}

  std::size_t order() const { return elems_.size(); }
  const std::vector<std::uint64_t>& keys() const { return elems_; }
  const MatrixCodec& codec() const { return codec_; }
  bool contains(std::uint64_t k) const { return set_.count(k) != 0; }
  bool contains(const Matrix& m) const { return contains(codec_.encode(m)); }
  Matrix element(std::size_t i) const { return codec_.decode(elems_[i]); }

private:
  MatrixCodec codec_;
  std::vector<std::uint64_t> elems_;
  std::unordered_set<std::uint64_t> set_;
};

/// Closure of generators under multiplication (finite group, so this is the generated subgroup).
inline EnumeratedGroup enumerate_generated(std::shared_ptr<const Field> F, int dim, const std::vector<Matrix>& gens,
                                           std::uint64_t budget = kDefaultBudget) {
  MatrixCodec codec(F, dim);
  std::vector<std::uint64_t> g;
  for (auto& m : gens)
    g.push_back(codec.encode(m));
  std::vector<std::uint64_t> elems{codec.encode(Matrix::identity(F, dim))};
  std::unordered_set<std::uint64_t> seen(elems.begin(), elems.end());
  for (std::size_t head = 0; head < elems.size(); ++head) {
    std::uint64_t x = elems[head];
    for (auto s : g) {
      std::uint64_t y = codec.multiply(x, s);
      if (seen.insert(y).second) {
        elems.push_back(y);
        if (elems.size() > budget)
          throw BudgetError("group enumeration exceeded budget " + std::to_string(budget), elems.size());
      }
    }
  }
  return EnumeratedGroup(std::move(codec), std::move(elems));
}

inline EnumeratedGroup enumerate_group(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget) {
  return enumerate_generated(spec.field, spec.dim, spec.generators, budget);
}

/// Derived subgroup: normal closure of the commutators of the generators.
inline EnumeratedGroup derived_subgroup(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget) {
  std::vector<Matrix> inv;
  for (auto& g : spec.generators)
    inv.push_back(g.inverse());
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < spec.generators.size(); ++i)
    for (std::size_t j = 0; j < spec.generators.size(); ++j)
      gens.push_back(spec.generators[i] * spec.generators[j] * inv[i] * inv[j]);
  while (true) {
    auto H = enumerate_generated(spec.field, spec.dim, gens, budget);
    bool grew = false;
    for (std::size_t i = 0; i < spec.generators.size() && !grew; ++i)
      for (auto& h : std::vector<Matrix>(gens)) {
        Matrix c = spec.generators[i] * h * inv[i];
        if (!H.contains(c)) {
          gens.push_back(c);
          grew = true;
          break;
        }
      }
    if (!grew)
      return H;
  }
}

/// |N_G(S)| with S generated by s_gens: count g in G with g s g^{-1} in S for every generator s.
inline std::uint64_t subgroup_normalizer_order(const EnumeratedGroup& G, const std::vector<Matrix>& s_gens,
                                               std::uint64_t budget = kDefaultBudget) {
  const auto& codec = G.codec();
  auto S = enumerate_generated(codec.field(), codec.dim(), s_gens, budget);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < G.order(); ++i) {
    Matrix g = G.element(i);
    Matrix gi = g.inverse();
    bool ok = true;
    for (auto& s : s_gens)
      if (!S.contains(g * s * gi)) {
        ok = false;
        break;
      }
    if (ok)
      ++count;
  }
  return count;
}

/// Elements of G satisfying a predicate.
inline std::uint64_t count_elements(const EnumeratedGroup& G, const std::function<bool(const Matrix&)>& pred) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < G.order(); ++i)
    if (pred(G.element(i)))
      ++c;
  return c;
}

} // namespace tori
