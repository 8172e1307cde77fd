// Dense exact linear algebra over a FieldSpec: reduced row echelon form,
// rank, kernels, row-space comparisons. No floating point anywhere.
#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spbw/scalar.hpp"

namespace spbw {

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
      : rows_(rows), cols_(cols), f_(f), a_(rows * cols, Scalar::zero(f)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return f_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  std::vector<Scalar> row(std::size_t i) const {
    return std::vector<Scalar>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  void set_row(std::size_t i, const std::vector<Scalar>& r) {
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = r[c];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  std::size_t rows_, cols_;
  FieldSpec f_;
  std::vector<Scalar> a_;
};

inline Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("matrix width mismatch");
  Matrix r(a.rows() + b.rows(), a.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

// In-place Gauss-Jordan with leftmost-column, first-nonzero-row pivoting.
// Deterministic: the result and the pivot column list depend only on the input.
inline std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(r, sel);
    Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

// Basis of {x : m x = 0}, returned as rows, one per free column, in
// ascending free-column order.
inline Matrix nullspace(const Matrix& m) {
  Matrix w = m;
  std::vector<std::size_t> piv = rref(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : piv) is_pivot[c] = true;
  std::size_t nfree = m.cols() - piv.size();
  Matrix basis(nfree, m.cols(), m.field());
  std::size_t out = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    basis.at(out, c) = Scalar::one(m.field());
    for (std::size_t pr = 0; pr < piv.size(); ++pr)
      basis.at(out, piv[pr]) = -w.at(pr, c);
    ++out;
  }
  return basis;
}

// Basis of {v : v m = 0}, one row vector of length m.rows() per basis element.
inline Matrix left_kernel(const Matrix& m) { return nullspace(transpose(m)); }

inline bool rowspace_contains(const Matrix& space, const std::vector<Scalar>& v) {
  Matrix ext(space.rows() + 1, space.cols(), space.field());
  for (std::size_t i = 0; i < space.rows(); ++i)
    for (std::size_t j = 0; j < space.cols(); ++j) ext.at(i, j) = space.at(i, j);
  ext.set_row(space.rows(), v);
  return rank(ext) == rank(space);
}

inline bool rowspaces_equal(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  std::size_t ra = rank(a), rb = rank(b);
  return ra == rb && rank(vstack(a, b)) == ra;
}

// Incremental span builder: rows are reduced against the accumulated echelon
// set; rows that enlarge the span are kept. Insertion order is the tie-break.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim, const FieldSpec& f) : dim_(dim), f_(f) {}

  // Returns true when v was independent of the current span.
  bool add(std::vector<Scalar> v) {
    if (v.size() != dim_) throw std::invalid_argument("span dimension mismatch");
    for (;;) {
      std::size_t lead = dim_;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) {
          lead = j;
          break;
        }
      if (lead == dim_) return false;
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        Scalar inv = v[lead].inverse();
        for (auto& x : v) x *= inv;
        rows_.emplace(lead, std::move(v));
        return true;
      }
      Scalar f = v[lead];
      const auto& base = it->second;
      for (std::size_t j = lead; j < dim_; ++j) v[j] -= f * base[j];
    }
  }

  bool contains(std::vector<Scalar> v) const {
    for (;;) {
      std::size_t lead = dim_;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) {
          lead = j;
          break;
        }
      if (lead == dim_) return true;
      auto it = rows_.find(lead);
      if (it == rows_.end()) return false;
      Scalar f = v[lead];
      const auto& base = it->second;
      for (std::size_t j = lead; j < dim_; ++j) v[j] -= f * base[j];
    }
  }

  std::size_t dim() const { return rows_.size(); }

 private:
  std::size_t dim_;
  FieldSpec f_;
  std::map<std::size_t, std::vector<Scalar>> rows_;
};

// Indices of rows of v that are independent of span(u) and of the previously
// selected rows, scanned in row order.
inline std::vector<std::size_t> extend_basis(const Matrix& u, const Matrix& v) {
  if (u.rows() > 0 && u.cols() != v.cols())
    throw std::invalid_argument("extend_basis width mismatch");
  SpanBuilder span(v.cols(), v.field());
  for (std::size_t i = 0; i < u.rows(); ++i) span.add(u.row(i));
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < v.rows(); ++i)
    if (span.add(v.row(i))) chosen.push_back(i);
  return chosen;
}

}  // namespace spbw
