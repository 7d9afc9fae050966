#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tori/field.hpp"

namespace tori {

/// Dense matrix over a shared finite field, row-major.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::shared_ptr<const Field> f, int rows, int cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  static Matrix identity(std::shared_ptr<const Field> f, int n) {
    Matrix m(std::move(f), n, n);
    for (int i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }
  static Matrix diagonal(std::shared_ptr<const Field> f, const std::vector<Elt>& d) {
    Matrix m(std::move(f), static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
      m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return *f_; }
  const std::shared_ptr<const Field>& field_ptr() const { return f_; }
  Elt& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  Elt operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<Elt>& data() const { return a_; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_)
      throw InternalError("matrix dimension mismatch");
    const Field& F = *x.f_;
    Matrix r(x.f_, x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        Elt v = x(i, k);
        if (v == 0)
          continue;
        for (int j = 0; j < y.cols_; ++j)
          if (Elt w = y(k, j))
            r(i, j) = F.add(r(i, j), F.mul(v, w));
      }
    return r;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i)
      r.a_[i] = x.f_->add(x.a_[i], y.a_[i]);
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i)
      r.a_[i] = x.f_->sub(x.a_[i], y.a_[i]);
    return r;
  }

  Matrix transpose() const {
    Matrix r(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        r(j, i) = (*this)(i, j);
    return r;
  }

  /// Entrywise map (e.g. the Frobenius x -> x^q).
  template <class Fn>
  Matrix map(Fn fn) const {
    Matrix r = *this;
    for (auto& v : r.a_)
      v = fn(v);
    return r;
  }
  Matrix frobenius(std::uint64_t q) const {
    return map([&](Elt v) { return f_->pow(v, static_cast<std::int64_t>(q)); });
  }

  bool is_identity() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1u : 0u))
          return false;
    return true;
  }
  bool is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (i != j && (*this)(i, j) != 0)
          return false;
    return true;
  }
  /// Exactly one nonzero entry in each row and column.
  bool is_monomial() const {
    std::vector<int> col_count(cols_, 0);
    for (int i = 0; i < rows_; ++i) {
      int c = 0;
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) {
          ++c;
          ++col_count[j];
        }
      if (c != 1)
        return false;
    }
    for (int c : col_count)
      if (c != 1)
        return false;
    return true;
  }

  int rank() const {
    Matrix m = *this;
    return m.eliminate(nullptr).first;
  }
  Elt determinant() const {
    if (rows_ != cols_)
      throw InternalError("determinant of non-square matrix");
    Matrix m = *this;
    auto [rank, det] = m.eliminate(nullptr);
    return rank == rows_ ? det : 0;
  }
  Matrix inverse() const {
    if (rows_ != cols_)
      throw InternalError("inverse of non-square matrix");
    Matrix m = *this;
    Matrix inv = identity(f_, rows_);
    auto [rank, det] = m.eliminate(&inv);
    if (rank != rows_)
      throw InternalError("matrix is singular");
    return inv;
  }

  /// Hex entry codes, rows separated by ';'.
  std::string hex() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      if (i)
        s += ';';
      for (int j = 0; j < cols_; ++j) {
        if (j)
          s += ',';
        s += f_->str((*this)(i, j));
      }
    }
    return s;
  }

private:
  // Gauss-Jordan; applies the same row operations to `aug` when given.
  // Returns (rank, determinant of the square part if full rank).
  std::pair<int, Elt> eliminate(Matrix* aug) {
    const Field& F = *f_;
    int r = 0;
    Elt det = 1;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int piv = -1;
      for (int i = r; i < rows_; ++i)
        if ((*this)(i, c) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) {
        det = 0;
        continue;
      }
      if (piv != r) {
        swap_rows(piv, r);
        if (aug)
          aug->swap_rows(piv, r);
        det = F.neg(det);
      }
      Elt pv = (*this)(r, c);
      det = F.mul(det, pv);
      Elt ipv = F.inv(pv);
      scale_row(r, ipv);
      if (aug)
        aug->scale_row(r, ipv);
      for (int i = 0; i < rows_; ++i) {
        if (i == r)
          continue;
        Elt fct = (*this)(i, c);
        if (fct == 0)
          continue;
        Elt nf = F.neg(fct);
        add_row(i, r, nf);
        if (aug)
          aug->add_row(i, r, nf);
      }
      ++r;
    }
    return {r, det};
  }
  void swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c)
      std::swap((*this)(i, c), (*this)(j, c));
  }
  void scale_row(int i, Elt s) {
    for (int c = 0; c < cols_; ++c)
      (*this)(i, c) = f_->mul((*this)(i, c), s);
  }
  void add_row(int dst, int src, Elt s) {
    for (int c = 0; c < cols_; ++c)
      if (Elt v = (*this)(src, c))
        (*this)(dst, c) = f_->add((*this)(dst, c), f_->mul(s, v));
  }

  std::shared_ptr<const Field> f_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elt> a_;
};

/// Dickson invariant in characteristic 2: parity of rank(x - I); true when even.
inline bool dickson_even(const Matrix& m) {
  if (m.field().p() != 2)
    throw ParameterError("Dickson invariant is defined here for characteristic 2 only");
  return (m - Matrix::identity(m.field_ptr(), m.rows())).rank() % 2 == 0;
}

} // namespace tori
