#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "tori/classify.hpp"
#include "tori/group.hpp"
#include "tori/torus.hpp"

namespace tori {

/// Matrix model of the ambient group for a classical descriptor.
enum class Ambient { Linear, Unitary, Symplectic, OrthogonalOdd, OrthogonalEven, OrthogonalChar2 };

inline Ambient ambient_of(const TorusClassDescriptor& d) {
  const bool even_q = d.q % 2 == 0;
  switch (d.family) {
  case Family::A: return Ambient::Linear;
  case Family::A2: return Ambient::Unitary;
  case Family::C: return Ambient::Symplectic;
  case Family::B: return even_q ? Ambient::Symplectic : Ambient::OrthogonalOdd;
  case Family::D:
  case Family::D2: return even_q ? Ambient::OrthogonalChar2 : Ambient::OrthogonalEven;
  }
  return Ambient::Linear;
}

/// Coordinates: type A uses 1..n; the rest use (1..n, -1..-n), with a leading 0 for odd orthogonal.
struct Layout {
  Ambient ambient;
  int n = 0;
  int dim = 0;
  int offset = 0;
  bool signed_coords() const { return ambient != Ambient::Linear && ambient != Ambient::Unitary; }
  int pos(int i) const { return i > 0 ? offset + i - 1 : offset + n - i - 1; } // i in +-1..+-n
};

inline Layout layout_of(const TorusClassDescriptor& d) {
  Layout l{ambient_of(d), d.n, 0, 0};
  switch (l.ambient) {
  case Ambient::Linear:
  case Ambient::Unitary: l.dim = d.n; break;
  case Ambient::OrthogonalOdd:
    l.dim = 2 * d.n + 1;
    l.offset = 1;
    break;
  default: l.dim = 2 * d.n;
  }
  return l;
}

/// Diagonal torus element stored by exponents of the field's primitive element.
using LogDiag = std::vector<std::uint64_t>;

struct TorusRealization {
  TorusClassDescriptor descriptor;
  Layout layout;
  std::shared_ptr<const Field> field; // GF(q^L)
  int extension = 1;                  // L
  std::vector<LogDiag> generator_logs;
  std::vector<LogDiag> intersected_logs;

  std::uint64_t modulus() const { return field->q() - 1; }
  Matrix matrix(const LogDiag& e) const {
    std::vector<Elt> d;
    for (auto x : e)
      d.push_back(field->exp(x));
    return Matrix::diagonal(field, d);
  }
  std::vector<Matrix> generators() const {
    std::vector<Matrix> out;
    for (auto& g : generator_logs)
      out.push_back(matrix(g));
    return out;
  }
  std::vector<Matrix> intersected_generators() const {
    std::vector<Matrix> out;
    for (auto& g : intersected_logs)
      out.push_back(matrix(g));
    return out;
  }
};

namespace detail {

// Smallest L with every eigenvalue order dividing q^L - 1.
inline int base_extension(const TorusClassDescriptor& d) {
  int L = 1;
  for (auto [len, positive] : d.type.blocks()) {
    int need = len;
    if (!positive || (d.family == Family::A2 && len % 2 == 1))
      need = 2 * len;
    L = std::lcm(L, need);
  }
  return L;
}

// Integer kernel of k -> sum k_i c_i (mod N), as lattice generators.
inline std::vector<std::vector<std::int64_t>> modular_kernel(const std::vector<std::int64_t>& c, std::int64_t N) {
  const std::size_t m = c.size();
  std::vector<std::int64_t> row(c);
  row.push_back(N);
  const std::size_t w = m + 1;
  std::vector<std::vector<std::int64_t>> U(w, std::vector<std::int64_t>(w, 0)); // columns U[j]
  for (std::size_t j = 0; j < w; ++j)
    U[j][j] = 1;
  while (true) {
    std::size_t piv = w;
    for (std::size_t j = 0; j < w; ++j)
      if (row[j] != 0 && (piv == w || std::llabs(row[j]) < std::llabs(row[piv])))
        piv = j;
    bool done = true;
    for (std::size_t j = 0; j < w; ++j) {
      if (j == piv || row[j] == 0)
        continue;
      std::int64_t f = row[j] / row[piv];
      row[j] -= f * row[piv];
      for (std::size_t r = 0; r < w; ++r)
        U[j][r] -= f * U[piv][r];
      if (row[j] != 0)
        done = false;
    }
    if (done) {
      std::vector<std::vector<std::int64_t>> out;
      for (std::size_t j = 0; j < w; ++j)
        if (j != piv)
          out.emplace_back(U[j].begin(), U[j].begin() + static_cast<long>(m));
      return out;
    }
  }
}

inline LogDiag combine(const std::vector<LogDiag>& gens, const std::vector<std::int64_t>& k, std::uint64_t N) {
  LogDiag r(gens[0].size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::int64_t ki = ((k[i] % static_cast<std::int64_t>(N)) + static_cast<std::int64_t>(N)) % static_cast<std::int64_t>(N);
    for (std::size_t p = 0; p < r.size(); ++p)
      r[p] = static_cast<std::uint64_t>((r[p] + static_cast<unsigned __int128>(ki) * gens[i][p]) % N);
  }
  return r;
}

} // namespace detail

/// Elements of the abelian group generated by diagonal elements given by exponents mod N.
inline std::vector<LogDiag> diagonal_group_elements(const std::vector<LogDiag>& gens, std::uint64_t N,
                                                    std::uint64_t budget = kDefaultBudget) {
  if (gens.empty())
    return {};
  std::set<LogDiag> seen;
  std::vector<LogDiag> queue{LogDiag(gens[0].size(), 0)};
  seen.insert(queue[0]);
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (auto& g : gens) {
      LogDiag x = queue[h];
      for (std::size_t p = 0; p < x.size(); ++p)
        x[p] = (x[p] + g[p]) % N;
      if (seen.insert(x).second) {
        queue.push_back(x);
        if (queue.size() > budget)
          throw BudgetError("diagonal group exceeded budget", queue.size());
      }
    }
  return queue;
}

inline std::uint64_t diagonal_group_order(const std::vector<LogDiag>& gens, std::uint64_t N,
                                          std::uint64_t budget = kDefaultBudget) {
  return gens.empty() ? 1 : diagonal_group_elements(gens, N, budget).size();
}

/// Explicit diagonal torus generators u_i over GF(q^L), and generators of the intersection with O^{p'}.
/// L is a multiple of min_extension.
inline TorusRealization realize_torus(const TorusClassDescriptor& d, int min_extension = 1) {
  validate_descriptor(d, false);
  TorusRealization r;
  r.descriptor = d;
  r.layout = layout_of(d);
  const Layout& lay = r.layout;
  const int L0 = std::lcm(detail::base_extension(d), min_extension);
  // large enough for a regular diagonal element as well
  const std::uint64_t need = std::max<std::uint64_t>(4 * lay.dim, static_cast<std::uint64_t>(d.n) * d.n + d.n + 2);
  int L = L0;
  auto fits = [&](int e) {
    long double v = 1;
    for (int i = 0; i < e; ++i)
      v *= static_cast<long double>(d.q);
    return v <= static_cast<long double>(Field::kMaxOrder);
  };
  while (fits(L) && ipow(d.q, L) - 1 <= need)
    L += L0;
  if (!fits(L))
    throw BudgetError("torus of " + d.str() + " needs GF(" + std::to_string(d.q) + "^" + std::to_string(L) +
                      "), beyond the 2^16 field cap");
  r.extension = L;
  r.field = field(ipow(d.q, L));
  const std::uint64_t N = r.modulus();
  const TorusStructure ts = torus_factor_orders(d);

  int start = 1;
  std::size_t b = 0;
  for (auto [len, positive] : d.type.blocks()) {
    const std::uint64_t ord = ts.factors[b++].order;
    const std::uint64_t lam = N / ord; // log of an element of exact order ord
    LogDiag u(lay.dim, 0);
    // exponent of the j-th entry: lam * q^j, or lam * (-q)^j for the unitary case
    std::uint64_t e = lam % N;
    for (int j = 0; j < len; ++j) {
      u[lay.pos(start + j)] = e;
      if (lay.signed_coords())
        u[lay.pos(-(start + j))] = (N - e) % N;
      std::uint64_t next = static_cast<std::uint64_t>((static_cast<unsigned __int128>(e) * d.q) % N);
      if (lay.ambient == Ambient::Unitary)
        next = (N - next) % N;
      e = next;
    }
    r.generator_logs.push_back(u);
    start += len;
  }

  const auto& g = r.generator_logs;
  switch (ts.constraint) {
  case TorusConstraint::None: r.intersected_logs = g; break;
  case TorusConstraint::EvenExponentSum: {
    std::vector<std::int64_t> k(g.size(), 0);
    k[0] = 2;
    r.intersected_logs.push_back(detail::combine(g, k, N));
    for (std::size_t i = 1; i < g.size(); ++i) {
      std::fill(k.begin(), k.end(), 0);
      k[0] = 1;
      k[i] = 1;
      r.intersected_logs.push_back(detail::combine(g, k, N));
    }
    break;
  }
  case TorusConstraint::DeterminantOne: {
    std::vector<std::int64_t> c;
    for (auto& u : g) {
      std::uint64_t s = 0;
      for (auto x : u)
        s = (s + x) % N;
      c.push_back(static_cast<std::int64_t>(s));
    }
    for (auto& k : detail::modular_kernel(c, static_cast<std::int64_t>(N)))
      r.intersected_logs.push_back(detail::combine(g, k, N));
    break;
  }
  }
  return r;
}

/// The positive roots of the ambient group, in a_i notation.
inline std::vector<WitnessRoot> positive_roots(const Layout& lay) {
  using K = WitnessRoot::Kind;
  std::vector<WitnessRoot> out;
  for (int i = 1; i <= lay.n; ++i)
    for (int j = i + 1; j <= lay.n; ++j)
      out.push_back({K::Difference, i, j, {}});
  if (!lay.signed_coords())
    return out;
  for (int i = 1; i <= lay.n; ++i)
    for (int j = i + 1; j <= lay.n; ++j)
      out.push_back({K::Sum, i, j, {}});
  if (lay.ambient == Ambient::Symplectic)
    for (int i = 1; i <= lay.n; ++i)
      out.push_back({K::Double, i, i, {}});
  if (lay.ambient == Ambient::OrthogonalOdd)
    for (int i = 1; i <= lay.n; ++i)
      out.push_back({K::Short, i, i, {}});
  return out;
}

/// Exponent of alpha(h) for diagonal h given by logs.
inline std::uint64_t root_value_log(const Layout& lay, const WitnessRoot& a, const LogDiag& h, std::uint64_t N) {
  std::uint64_t hi = h[lay.pos(a.i)];
  std::uint64_t hj = a.kind == WitnessRoot::Kind::Difference || a.kind == WitnessRoot::Kind::Sum ? h[lay.pos(a.j)] : 0;
  switch (a.kind) {
  case WitnessRoot::Kind::Difference: return (hi + N - hj) % N;
  case WitnessRoot::Kind::Sum: return (hi + hj) % N;
  case WitnessRoot::Kind::Double: return (2 * hi) % N;
  case WitnessRoot::Kind::Short: return hi % N;
  case WitnessRoot::Kind::Tabulated: break;
  }
  throw InternalError("no value for a tabulated root");
}

/// Roots that are identically 1 on the intersected torus.
inline std::vector<WitnessRoot> vanishing_roots(const TorusRealization& r) {
  std::vector<WitnessRoot> out;
  const std::uint64_t N = r.modulus();
  for (auto& a : positive_roots(r.layout)) {
    bool vanishes = true;
    for (auto& h : r.intersected_logs)
      if (root_value_log(r.layout, a, h, N) != 0) {
        vanishes = false;
        break;
      }
    if (vanishes)
      out.push_back(a);
  }
  return out;
}

inline std::vector<WitnessRoot> vanishing_roots(const TorusClassDescriptor& d) { return vanishing_roots(realize_torus(d)); }

/// Unipotent root element x_alpha(t) in the ambient coordinates.
inline Matrix root_element(const Layout& lay, std::shared_ptr<const Field> F, const WitnessRoot& a, Elt t = 1) {
  Matrix x = Matrix::identity(F, lay.dim);
  const Elt mt = F->neg(t);
  auto put = [&](int i, int j, Elt v) { x(i, j) = F->add(x(i, j), v); };
  switch (a.kind) {
  case WitnessRoot::Kind::Difference:
    put(lay.pos(a.i), lay.pos(a.j), t);
    if (lay.signed_coords())
      put(lay.pos(-a.j), lay.pos(-a.i), mt);
    break;
  case WitnessRoot::Kind::Sum:
    // E + t(e_{i,-j} - e_{j,-i}); symplectic only in characteristic 2
    put(lay.pos(a.i), lay.pos(-a.j), t);
    put(lay.pos(a.j), lay.pos(-a.i), mt);
    break;
  case WitnessRoot::Kind::Double: put(lay.pos(a.i), lay.pos(-a.i), t); break;
  case WitnessRoot::Kind::Short:
    // E + t(2e_{i,0} - e_{0,-i}) - t^2 e_{i,-i}
    put(lay.pos(a.i), 0, F->mul(F->from_int(2), t));
    put(0, lay.pos(-a.i), mt);
    put(lay.pos(a.i), lay.pos(-a.i), F->neg(F->mul(t, t)));
    break;
  case WitnessRoot::Kind::Tabulated: throw ParameterError("no matrix for a tabulated root");
  }
  return x;
}

/// Form matrix preserved by the ambient group (Gram for bilinear forms, upper-triangular Q in characteristic 2).
inline std::optional<Matrix> ambient_form(const Layout& lay, std::shared_ptr<const Field> F) {
  switch (lay.ambient) {
  case Ambient::Linear:
  case Ambient::Unitary: return std::nullopt;
  case Ambient::Symplectic: return symplectic_form(F, lay.n);
  case Ambient::OrthogonalChar2: return split_quadratic_form(F, lay.n);
  case Ambient::OrthogonalOdd:
  case Ambient::OrthogonalEven: {
    Matrix B(F, lay.dim, lay.dim);
    if (lay.ambient == Ambient::OrthogonalOdd)
      B(0, 0) = F->from_int(2);
    for (int i = 1; i <= lay.n; ++i) {
      B(lay.pos(i), lay.pos(-i)) = 1;
      B(lay.pos(-i), lay.pos(i)) = 1;
    }
    return B;
  }
  }
  return std::nullopt;
}

/// Lift of the standard representative of the stored type to a monomial matrix compatible with the form.
inline Matrix weyl_lift(const Layout& lay, std::shared_ptr<const Field> F, const SignedCycleType& t) {
  SignedPermutation w = standard_representative(t);
  Matrix M(F, lay.dim, lay.dim);
  if (lay.offset)
    M(0, 0) = 1;
  for (int j = 1; j <= lay.n; ++j) {
    int k = w(j);
    if (!lay.signed_coords()) {
      M(lay.pos(k), lay.pos(j)) = 1;
      continue;
    }
    M(lay.pos(k), lay.pos(j)) = 1;
    Elt s = (lay.ambient == Ambient::Symplectic && k < 0) ? F->neg(1) : 1;
    M(lay.pos(-k), lay.pos(-j)) = s;
  }
  return M;
}

/// sigma*w applied to x: M x^[q] M^{-1}; the unitary case uses the inverse transpose of x^[q].
inline Matrix sigma_w(const TorusRealization& r, const Matrix& x) {
  Matrix M = weyl_lift(r.layout, r.field, r.descriptor.type);
  Matrix y = x.frobenius(r.descriptor.q);
  if (r.layout.ambient == Ambient::Unitary)
    y = y.inverse().transpose();
  return M * y * M.inverse();
}

struct WitnessCheck {
  std::string clause;
  WitnessRoot root;
  Elt parameter = 1; // t in x_alpha(t)
  bool membership = false;
  bool centralizes = false;
  bool not_normalizing = false;
  std::string witness_hex;
  bool passed() const { return membership && centralizes && not_normalizing; }
};

struct WitnessReport {
  TorusClassDescriptor descriptor;
  std::vector<WitnessCheck> checks;
  bool passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.passed(); });
  }
};

/// Smallest parameter t (1 first, then by discrete log) with x_alpha(t) fixed by sigma*w.
inline std::optional<Elt> fixed_root_parameter(const TorusRealization& r, const WitnessRoot& a) {
  const Field& F = *r.field;
  for (std::uint64_t k = 0; k < F.q() - 1; ++k) {
    Elt t = F.exp(k);
    Matrix x = root_element(r.layout, r.field, a, t);
    if (sigma_w(r, x) == x)
      return t;
  }
  return std::nullopt;
}

/// The classifier's witness for one triggered clause, as an explicit matrix over GF(q^L).
/// t = 1 unless sigma*w moves x_alpha(1); then the first fixed parameter.
inline Matrix witness_element(const TorusRealization& r, const std::string& clause) {
  auto v = classify_classical(r.descriptor);
  for (std::size_t i = 0; i < v.clauses.size(); ++i)
    if (v.clauses[i] == clause) {
      auto t = fixed_root_parameter(r, v.witness_roots[i]);
      return root_element(r.layout, r.field, v.witness_roots[i], t.value_or(1));
    }
  throw ParameterError("clause " + clause + " is not triggered for " + r.descriptor.str());
}

inline Matrix witness_element(const TorusClassDescriptor& d, const std::string& clause) {
  return witness_element(realize_torus(d), clause);
}

namespace detail {

inline bool member_of_ambient(const TorusRealization& r, const Matrix& x) {
  const Field& F = *r.field;
  const Layout& lay = r.layout;
  auto form = ambient_form(lay, r.field);
  switch (lay.ambient) {
  case Ambient::Linear:
  case Ambient::Unitary: // the unitary condition is the sigma*w-fixed test
    if (x.determinant() != 1)
      return false;
    break;
  case Ambient::Symplectic:
  case Ambient::OrthogonalOdd:
  case Ambient::OrthogonalEven:
    if (!(x.transpose() * (*form) * x == *form) || x.determinant() != 1)
      return false;
    break;
  case Ambient::OrthogonalChar2: {
    Matrix A = x.transpose() * (*form) * x - *form;
    for (int i = 0; i < A.rows(); ++i) {
      if (A(i, i) != 0)
        return false;
      for (int j = 0; j < i; ++j)
        if (F.add(A(i, j), A(j, i)) != 0)
          return false;
    }
    if (!dickson_even(x))
      return false;
    break;
  }
  }
  return true;
}

inline bool is_unipotent(const Matrix& x) {
  Matrix n = x - Matrix::identity(x.field_ptr(), x.rows());
  Matrix p = n;
  for (int i = 1; i < x.rows(); ++i)
    p = p * n;
  for (auto v : p.data())
    if (v != 0)
      return false;
  return true;
}

// Diagonal element of the ambient torus with pairwise distinct entries.
inline Matrix regular_diagonal(const TorusRealization& r) {
  const Layout& lay = r.layout;
  const std::uint64_t N = r.modulus();
  LogDiag e(lay.dim, 0);
  if (lay.signed_coords()) {
    for (int i = 1; i <= lay.n; ++i) {
      e[lay.pos(i)] = static_cast<std::uint64_t>(i) % N;
      e[lay.pos(-i)] = (N - static_cast<std::uint64_t>(i) % N) % N;
    }
  } else {
    std::uint64_t s = 0;
    for (int i = 1; i < lay.n; ++i) {
      e[i - 1] = static_cast<std::uint64_t>(i);
      s += static_cast<std::uint64_t>(i);
    }
    e[lay.n - 1] = (N - s % N) % N; // determinant one
  }
  std::set<std::uint64_t> distinct(e.begin(), e.end());
  if (distinct.size() != e.size())
    throw InternalError("extension too small for a regular diagonal element");
  return r.matrix(e);
}

} // namespace detail

/// Run the three witness checks on x_alpha(1) for an arbitrary root alpha.
inline WitnessCheck check_root_witness(const TorusRealization& r, const WitnessRoot& root, const std::string& clause = {}) {
  WitnessCheck c;
  c.clause = clause;
  c.root = root;
  c.parameter = fixed_root_parameter(r, root).value_or(1);
  Matrix x = root_element(r.layout, r.field, root, c.parameter);
  c.witness_hex = x.hex();
  c.membership = detail::member_of_ambient(r, x) && sigma_w(r, x) == x && detail::is_unipotent(x);
  const auto gens = r.intersected_generators();
  c.centralizes = std::all_of(gens.begin(), gens.end(), [&](const Matrix& h) { return x * h == h * x; });
  const Matrix R = detail::regular_diagonal(r);
  c.not_normalizing = !(x * R * x.inverse()).is_diagonal();
  return c;
}

/// Check every triggered clause's witness: membership in the sigma*w-fixed group, centralizing
/// the intersected torus, and not normalizing the full diagonal torus.
inline WitnessReport verify_witness(const TorusRealization& r) {
  auto v = classify_classical(r.descriptor);
  if (!v.degenerate)
    throw ParameterError(r.descriptor.str() + " is nondegenerate; there is no witness to check");
  WitnessReport rep{r.descriptor, {}};
  for (std::size_t i = 0; i < v.clauses.size(); ++i)
    rep.checks.push_back(check_root_witness(r, v.witness_roots[i], v.clauses[i]));
  return rep;
}

inline WitnessReport verify_witness(const TorusClassDescriptor& d) { return verify_witness(realize_torus(d)); }

} // namespace tori
