#pragma once

#include <optional>
#include <random>

#include "tori/verify.hpp"

namespace tori {

namespace detail {

inline Elt frob_pow(const Field& F, Elt x, std::uint64_t q, int m) {
  for (int i = 0; i < m; ++i)
    x = F.pow(x, static_cast<std::int64_t>(q));
  return x;
}

inline std::vector<Elt> subfield_elements(const Field& F, std::uint64_t r) {
  std::vector<Elt> out{0};
  const std::uint64_t step = (F.q() - 1) / (r - 1);
  for (std::uint64_t k = 0; k < r - 1; ++k)
    out.push_back(F.exp(k * step));
  return out;
}

inline Elt relative_trace(const Field& F, Elt x, std::uint64_t q, int l) {
  Elt t = 0, y = x;
  for (int i = 0; i < l; ++i) {
    t = F.add(t, y);
    y = F.pow(y, static_cast<std::int64_t>(q));
  }
  return t;
}

inline Elt pairing(const Field& F, const Matrix& J, const Matrix& C, int a, int b) {
  Elt s = 0;
  for (int i = 0; i < J.rows(); ++i)
    for (int j = 0; j < J.cols(); ++j)
      if (J(i, j) != 0)
        s = F.add(s, F.mul(F.mul(C(i, a), J(i, j)), C(j, b)));
  return s;
}

} // namespace detail

/// A matrix C over GF(q^L) with F(C) = C M, M the lift of w, and C^T J C hyperbolic in the symplectic case.
/// Conjugation by C carries the diagonal sigma*w-torus into the sigma-fixed group.
inline Matrix torus_conjugator(const TorusRealization& r, std::uint64_t search_budget = kDefaultBudget) {
  const Layout& lay = r.layout;
  if (lay.ambient != Ambient::Linear && lay.ambient != Ambient::Symplectic)
    throw UnsupportedError("brute-force conjugator is implemented for linear and symplectic groups");
  const Field& F = *r.field;
  const std::uint64_t q = r.descriptor.q;
  Matrix C(r.field, lay.dim, lay.dim);
  std::optional<Matrix> J = ambient_form(lay, r.field);

  int start = 1;
  for (auto [l, positive] : r.descriptor.type.blocks()) {
    const std::uint64_t ql = ipow(q, static_cast<unsigned>(l));
    if (positive) {
      auto sub = detail::subfield_elements(F, ql);
      std::optional<Elt> beta;
      for (Elt b : sub) {
        Matrix moore(r.field, l, l);
        for (int i = 0; i < l; ++i)
          for (int j = 0; j < l; ++j)
            moore(i, j) = detail::frob_pow(F, b, q, i + j);
        if (moore.rank() == l) {
          beta = b;
          break;
        }
      }
      if (!beta)
        throw InternalError("no normal basis element found");
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
          C(lay.pos(start + j), lay.pos(start + i)) = detail::frob_pow(F, *beta, q, i + j);
      if (lay.signed_coords()) {
        std::optional<Elt> gamma;
        for (Elt g : sub) {
          bool dual = true;
          for (int m = 0; m < l && dual; ++m) {
            Elt t = detail::relative_trace(F, F.mul(detail::frob_pow(F, *beta, q, m), g), q, l);
            dual = t == (m == 0 ? 1u : 0u);
          }
          if (dual) {
            gamma = g;
            break;
          }
        }
        if (!gamma)
          throw InternalError("no trace-dual element found");
        for (int i = 0; i < l; ++i)
          for (int j = 0; j < l; ++j)
            C(lay.pos(-(start + j)), lay.pos(-(start + i))) = detail::frob_pow(F, *gamma, q, i + j);
      }
    } else {
      // one orbit start, .., start+l-1, -start, .., -(start+l-1); F^{2l} acts on the seed by the wrap sign
      const std::uint64_t q2l = ql * ql;
      Elt alpha = 1;
      if (q % 2 == 1) {
        if ((F.q() - 1) % (2 * (q2l - 1)) != 0)
          throw InternalError("extension too small for the negative-cycle seed");
        alpha = F.exp((F.q() - 1) / (2 * (q2l - 1)));
      }
      auto K = detail::subfield_elements(F, q2l);
      auto positions = [&](int k) { return k < l ? start + k : -(start + k - l); };
      std::mt19937_64 rng(0x746f7269u + static_cast<unsigned>(start));
      std::uniform_int_distribution<std::size_t> pick(0, K.size() - 1);
      bool found = false;
      for (std::uint64_t tries = 0; !found; ++tries) {
        if (tries > search_budget)
          throw BudgetError("negative-cycle conjugator search exceeded budget", tries);
        std::vector<Elt> seed(2 * static_cast<std::size_t>(l));
        for (auto& e : seed)
          e = K[pick(rng)];
        for (int k = 0; k < 2 * l; ++k) {
          int col = lay.pos(positions(k));
          Elt ak = detail::frob_pow(F, alpha, q, k);
          for (int j = 0; j < l; ++j) {
            C(lay.pos(start + j), col) = F.mul(ak, detail::frob_pow(F, seed[j], q, k));
            C(lay.pos(-(start + j)), col) = F.mul(ak, detail::frob_pow(F, seed[l + j], q, k));
          }
        }
        bool ok = true;
        const int c0 = lay.pos(start);
        for (int m = 1; m < 2 * l && ok; ++m) {
          Elt v = detail::pairing(F, *J, C, c0, lay.pos(positions(m)));
          ok = (m == l) == (v != 0);
        }
        found = ok;
      }
      if (!found)
        throw InternalError("no conjugator seed for a negative cycle");
    }
    start += l;
  }

  Matrix M = weyl_lift(lay, r.field, r.descriptor.type);
  if (!(C.frobenius(q) == C * M) || C.rank() != lay.dim)
    throw InternalError("torus conjugator fails F(C) = C M");
  if (J) {
    for (int i = 1; i <= lay.n; ++i)
      for (int j = -lay.n; j <= lay.n; ++j)
        if (j != 0 && j != -i && detail::pairing(F, *J, C, lay.pos(i), lay.pos(j)) != 0)
          throw InternalError("torus conjugator is not hyperbolic");
  }
  return C;
}

struct BruteForceRow {
  TorusClassDescriptor descriptor;
  std::uint64_t torus_order = 0;
  std::uint64_t normaliser_order = 0;                // |N_G(T)|
  std::uint64_t algebraic_order = 0;                 // |N_G(T-bar)|, counted
  std::optional<std::uint64_t> formula_order;        // |C_W(w)| |T|
  bool classified_degenerate = false;
  bool oracle_degenerate() const { return normaliser_order > algebraic_order; }
  bool agrees() const {
    return oracle_degenerate() == classified_degenerate && (!formula_order || *formula_order == algebraic_order);
  }
};

struct BruteForceReport {
  std::string group;
  std::uint64_t group_order = 0;
  std::vector<BruteForceRow> rows;
  bool agrees() const {
    return std::all_of(rows.begin(), rows.end(), [](auto& r) { return r.agrees(); });
  }
};

/// Compare normalizers of every torus class of SL_n(q) (family A) or Sp_2n(q) (family C), q prime,
/// by enumerating the group. With derived set, G is the derived subgroup.
inline BruteForceReport brute_force_normalizers(Family f, int n, std::uint64_t q, bool derived = false,
                                                std::uint64_t budget = kDefaultBudget) {
  if (f != Family::A && f != Family::C)
    throw UnsupportedError("brute force covers families A and C");
  if (!is_prime(q))
    throw UnsupportedError("brute force needs a prime q");
  GroupSpec spec = f == Family::A ? special_linear_group(n, q) : symplectic_group(n, q);
  EnumeratedGroup G = derived ? derived_subgroup(spec, budget) : enumerate_group(spec, budget);
  BruteForceReport rep;
  rep.group = (f == Family::A ? "SL" + std::to_string(n) : "Sp" + std::to_string(2 * n)) + "(" + std::to_string(q) +
              ")" + (derived ? "'" : "");
  rep.group_order = G.order();
  const auto small = G.codec().field();

  for (auto& d : enumerate_torus_classes(f, n, q, false)) {
    int min_ext = 1;
    if (f == Family::C && q % 2 == 1)
      for (int l : d.type.negative)
        min_ext = std::lcm(min_ext, 4 * l);
    TorusRealization r = realize_torus(d, min_ext);
    const Field& B = *r.field;
    Matrix Cm = torus_conjugator(r, budget);
    Matrix Ci = Cm.inverse();

    auto to_small = [&](const Matrix& x) {
      Matrix y(small, x.rows(), x.cols());
      for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
          Elt v = x(i, j);
          std::uint64_t a = 0;
          while (a < q && B.from_int(static_cast<std::int64_t>(a)) != v)
            ++a;
          if (a == q)
            throw InternalError("conjugated torus element is not defined over GF(q)");
          y(i, j) = small->from_int(static_cast<std::int64_t>(a));
        }
      return y;
    };
    auto to_big = [&](const Matrix& x) {
      Matrix y(r.field, x.rows(), x.cols());
      for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
          for (std::uint64_t a = 0; a < q; ++a)
            if (small->from_int(static_cast<std::int64_t>(a)) == x(i, j))
              y(i, j) = B.from_int(static_cast<std::int64_t>(a));
      return y;
    };

    std::vector<Matrix> T;
    for (auto& h : diagonal_group_elements(r.intersected_logs, r.modulus(), budget)) {
      Matrix y = to_small(Cm * r.matrix(h) * Ci);
      if (G.contains(y))
        T.push_back(y);
    }
    BruteForceRow row;
    row.descriptor = d;
    row.torus_order = T.size();
    row.normaliser_order = subgroup_normalizer_order(G, T, budget);
    row.algebraic_order = count_elements(G, [&](const Matrix& g) { return (Ci * to_big(g) * Cm).is_monomial(); });
    if (!derived)
      row.formula_order = algebraic_normaliser_order(d);
    row.classified_degenerate = classify_classical(d).degenerate;
    rep.rows.push_back(row);
  }
  return rep;
}

} // namespace tori
