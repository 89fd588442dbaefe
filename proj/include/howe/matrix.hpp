#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "howe/cyclotomic.hpp"

namespace howe {

// Dense matrix over Q(zeta_L). Everything here is exact; float embeddings
// live in numeric.hpp. Sizes stay small (graded blocks), so schoolbook
// algorithms and plain Gaussian elimination are the right tool.
class CycMatrix {
 public:
  CycMatrix() : rows_(0), cols_(0) {}
  CycMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Cyclotomic(0)) {}

  static CycMatrix identity(std::size_t n) {
    CycMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
    return m;
  }

  static CycMatrix scalar(std::size_t n, const Cyclotomic& c) {
    CycMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cyclotomic& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Cyclotomic& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& c : a_)
      if (!c.is_zero()) return false;
    return true;
  }

  bool same_shape(const CycMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  friend bool operator==(const CycMatrix& x, const CycMatrix& y) {
    if (!x.same_shape(y)) return false;
    for (std::size_t k = 0; k < x.a_.size(); ++k)
      if (x.a_[k] != y.a_[k]) return false;
    return true;
  }
  friend bool operator!=(const CycMatrix& x, const CycMatrix& y) { return !(x == y); }

  CycMatrix operator-() const {
    CycMatrix r(*this);
    for (auto& c : r.a_) c = -c;
    return r;
  }

  friend CycMatrix operator+(const CycMatrix& x, const CycMatrix& y) {
    if (!x.same_shape(y)) throw std::invalid_argument("CycMatrix: shape mismatch in +");
    CycMatrix r(x);
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
    return r;
  }
  friend CycMatrix operator-(const CycMatrix& x, const CycMatrix& y) {
    if (!x.same_shape(y)) throw std::invalid_argument("CycMatrix: shape mismatch in -");
    CycMatrix r(x);
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
    return r;
  }
  friend CycMatrix operator*(const CycMatrix& x, const CycMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("CycMatrix: shape mismatch in *");
    CycMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) {
          if (y.at(k, j).is_zero()) continue;
          r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
      }
    return r;
  }
  friend CycMatrix operator*(const Cyclotomic& c, const CycMatrix& x) {
    CycMatrix r(x);
    for (auto& v : r.a_) v *= c;
    return r;
  }
  friend CycMatrix operator*(const CycMatrix& x, const Cyclotomic& c) { return c * x; }

  CycMatrix transpose() const {
    CycMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  CycMatrix conjugate_transpose() const {
    CycMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conjugate();
    return r;
  }

  CycMatrix hstack(const CycMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("CycMatrix: hstack row mismatch");
    CycMatrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  CycMatrix column(std::size_t j) const {
    CycMatrix r(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
  }

  // Row-reduced echelon form in place; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && at(sel, col).is_zero()) ++sel;
      if (sel == rows_) continue;
      swap_rows(sel, row);
      Cyclotomic inv = at(row, col).inverse();
      for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || at(i, col).is_zero()) continue;
        Cyclotomic f = at(i, col);
        for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    CycMatrix tmp(*this);
    return tmp.rref().size();
  }

  // Basis of the null space, one column per free variable.
  CycMatrix kernel() const {
    CycMatrix tmp(*this);
    std::vector<std::size_t> pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::size_t nfree = cols_ - pivots.size();
    CycMatrix k(cols_, nfree);
    std::size_t out = 0;
    for (std::size_t col = 0; col < cols_; ++col) {
      if (is_pivot[col]) continue;
      k.at(col, out) = Cyclotomic(1);
      for (std::size_t p = 0; p < pivots.size(); ++p)
        k.at(pivots[p], out) = -tmp.at(p, col);
      ++out;
    }
    return k;
  }

  // Solves A X = B; nullopt if inconsistent. When the solution is not
  // unique, free variables are set to zero.
  static std::optional<CycMatrix> solve(const CycMatrix& A, const CycMatrix& B) {
    if (A.rows() != B.rows()) throw std::invalid_argument("CycMatrix: solve shape mismatch");
    CycMatrix aug = A.hstack(B);
    std::vector<std::size_t> pivots = aug.rref();
    for (auto p : pivots)
      if (p >= A.cols()) return std::nullopt;  // pivot in the B block: inconsistent
    CycMatrix X(A.cols(), B.cols());
    for (std::size_t p = 0; p < pivots.size(); ++p)
      for (std::size_t j = 0; j < B.cols(); ++j) X.at(pivots[p], j) = aug.at(p, A.cols() + j);
    return X;
  }

  // Monic characteristic polynomial coefficients c_0..c_n (c_n = 1) by
  // Faddeev-LeVerrier; exact over a field of characteristic zero.
  std::vector<Cyclotomic> charpoly() const {
    if (rows_ != cols_) throw std::invalid_argument("CycMatrix: charpoly needs square matrix");
    std::size_t n = rows_;
    std::vector<Cyclotomic> c(n + 1, Cyclotomic(0));
    c[n] = Cyclotomic(1);
    CycMatrix M = identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
      if (k > 1) {
        M = *this * M;
        for (std::size_t i = 0; i < n; ++i) M.at(i, i) += c[n - k + 1];
      } else {
        M = identity(n);
      }
      CycMatrix AM = *this * M;
      Cyclotomic tr(0);
      for (std::size_t i = 0; i < n; ++i) tr += AM.at(i, i);
      c[n - k] = -(tr.scaled(Rational(1, static_cast<long>(k))));
    }
    return c;
  }

 private:
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t col = 0; col < cols_; ++col) std::swap(at(i, col), at(j, col));
  }

  std::size_t rows_, cols_;
  std::vector<Cyclotomic> a_;
};

}  // namespace howe
