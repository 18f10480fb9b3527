#pragma once
// Dense exact-rational matrices and the linear-algebra kernel used by every
// other part of the library: reduced row echelon form, kernels, solving,
// bilinear-form radicals and an affine-subspace intersection test.
//
// Pivoting is deterministic (first nonzero entry scanning left-to-right,
// top-to-bottom), so every derived basis is reproducible bit-for-bit.
// 0xN and Nx0 matrices are legal throughout; empty hom-spaces are routine.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "weightcat/errors.hpp"
#include "weightcat/rational.hpp"

namespace weightcat {

class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw ShapeError("entry count != rows*cols");
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
  }
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

  // Row-major initializer for small literals in tests and fixtures.
  static Mat from_rows(const std::vector<std::vector<Scalar>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw ShapeError("ragged row list");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw ShapeError("index out of range");
    return e_[i * cols_ + j];
  }
  const Scalar& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw ShapeError("index out of range");
    return e_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  friend Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("add: shape mismatch");
    Mat r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("sub: shape mismatch");
    Mat r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
    return r;
  }
  friend Mat operator-(const Mat& a) {
    Mat r = a;
    for (auto& x : r.e_) x = -x;
    return r;
  }
  friend Mat operator*(const Scalar& c, const Mat& a) {
    Mat r = a;
    for (auto& x : r.e_) x *= c;
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw ShapeError("mul: inner dimensions differ");
    Mat r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b.at(k, j);
          if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Scalar trace() const {
    if (rows_ != cols_) throw ShapeError("trace of non-square matrix");
    Scalar t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  // [a | b] side by side.
  static Mat hcat(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_) throw ShapeError("hcat: row counts differ");
    Mat r(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
  }
  // a stacked over b.
  static Mat vcat(const Mat& a, const Mat& b) {
    if (a.cols_ != b.cols_) throw ShapeError("vcat: column counts differ");
    Mat r(a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
  }

  Mat block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) throw ShapeError("block out of range");
    Mat r(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
      for (std::size_t j = 0; j < ncols; ++j) r.at(i, j) = at(row0 + i, col0 + j);
    return r;
  }

  Mat col(std::size_t j) const { return block(0, j, rows_, 1); }
  Mat row(std::size_t i) const { return block(i, 0, 1, cols_); }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += (i ? "; " : "");
      for (std::size_t j = 0; j < cols_; ++j) out += (j ? " " : "") + at(i, j).str();
    }
    return out + "]";
  }
  friend std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << m.str(); }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

// In-place Gauss-Jordan elimination to reduced row echelon form.
// Returns the pivot columns in increasing order.  Deterministic: for each
// column (left to right) the first remaining row with a nonzero entry wins.
inline std::vector<std::size_t> rref_in_place(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
    std::size_t pr = next_row;
    while (pr < m.rows() && m.at(pr, col).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != next_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(next_row, j));
    Scalar inv = m.at(next_row, col).reciprocal();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(next_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == next_row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(next_row, j);
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

inline std::size_t mat_rank(const Mat& m) {
  Mat r = m;
  return rref_in_place(r).size();
}

// Kernel basis as column vectors; count = cols - rank, exactly.
inline std::vector<Mat> mat_kernel(const Mat& m) {
  Mat r = m;
  std::vector<std::size_t> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Mat> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Mat v(m.cols(), 1);
    v.at(free, 0) = Scalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v.at(pivots[k], 0) = -r.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves a*x = b (b may have several columns).  Returns the particular
// solution with all free variables zero, or nullopt when inconsistent.
inline std::optional<Mat> solve_linear(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve_linear: row counts differ");
  Mat aug = Mat::hcat(a, b);
  std::vector<std::size_t> pivots = rref_in_place(aug);
  for (std::size_t p : pivots)
    if (p >= a.cols()) return std::nullopt;  // pivot in the augmented part
  Mat x(a.cols(), b.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(pivots[k], j) = aug.at(k, a.cols() + j);
  return x;
}

inline std::optional<Mat> mat_inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw ShapeError("inverse of non-square matrix");
  if (mat_rank(a) != a.rows()) return std::nullopt;
  return solve_linear(a, Mat::identity(a.rows()));
}

// Left radical of a bilinear form with Gram matrix `pairing`
// (pairing[i][j] = <u_i, v_j>): the vectors f with <f, v_j> = 0 for all j.
// A vector f = sum f_i u_i is in the radical iff pairing^T f = 0.
inline std::vector<Mat> bilinear_radical(const Mat& pairing) {
  return mat_kernel(pairing.transpose());
}

// Does (point + span(directions)) intersect span(subspace)?
// One linear solve: point + D t = S s  <=>  [D | -S] (t; s) = -point.
inline bool affine_meets_subspace(const Mat& point, const std::vector<Mat>& directions,
                                  const std::vector<Mat>& subspace) {
  const std::size_t dim = point.rows();
  if (point.cols() != 1) throw ShapeError("affine_meets_subspace: point must be a column");
  Mat lhs(dim, 0);
  for (const Mat& d : directions) {
    if (d.rows() != dim || d.cols() != 1) throw ShapeError("direction dimension mismatch");
    lhs = Mat::hcat(lhs, d);
  }
  for (const Mat& s : subspace) {
    if (s.rows() != dim || s.cols() != 1) throw ShapeError("subspace dimension mismatch");
    lhs = Mat::hcat(lhs, -s);
  }
  return solve_linear(lhs, -point).has_value();
}

// Dimension of the span of a list of column vectors.
inline std::size_t span_dim(const std::vector<Mat>& vectors) {
  if (vectors.empty()) return 0;
  Mat stacked(0, vectors[0].rows());
  for (const Mat& v : vectors) stacked = Mat::vcat(stacked, v.transpose());
  return mat_rank(stacked);
}

// Is v in the span of the given column vectors?
inline bool in_span(const Mat& v, const std::vector<Mat>& basis) {
  const std::size_t dim = v.rows();
  Mat lhs(dim, 0);
  for (const Mat& b : basis) lhs = Mat::hcat(lhs, b);
  return solve_linear(lhs, v).has_value();
}

// True iff the two lists of column vectors span the same subspace.
inline bool same_span(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  for (const Mat& v : a)
    if (!in_span(v, b)) return false;
  for (const Mat& v : b)
    if (!in_span(v, a)) return false;
  return true;
}

// Incrementally built span of column vectors with exact membership queries.
// Internally keeps a fully reduced basis (each stored vector is zero at every
// other stored vector's pivot), so a single reduction pass is exact.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  std::size_t rank() const { return basis_.size(); }

  bool contains(const Mat& v) const {
    std::vector<Scalar> w = to_vec(v);
    reduce(w);
    for (const Scalar& c : w)
      if (!c.is_zero()) return false;
    return true;
  }

  // Adds v to the span; returns true when the rank grew.
  bool add(const Mat& v) {
    std::vector<Scalar> w = to_vec(v);
    reduce(w);
    std::size_t pivot = dim_;
    for (std::size_t i = 0; i < dim_; ++i)
      if (!w[i].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == dim_) return false;
    const Scalar lead = w[pivot];
    for (auto& c : w) c = c / lead;
    for (auto& [p, r] : basis_) {
      const Scalar factor = r[pivot];
      if (factor.is_zero()) continue;
      for (std::size_t i = 0; i < dim_; ++i) r[i] = r[i] - factor * w[i];
    }
    basis_.push_back({pivot, std::move(w)});
    return true;
  }

 private:
  std::vector<Scalar> to_vec(const Mat& v) const {
    if (v.rows() != dim_ || v.cols() != 1)
      throw ShapeError("SpanBuilder: expected a dim x 1 column");
    std::vector<Scalar> w(dim_);
    for (std::size_t i = 0; i < dim_; ++i) w[i] = v.at(i, 0);
    return w;
  }
  void reduce(std::vector<Scalar>& w) const {
    for (const auto& [p, r] : basis_) {
      const Scalar factor = w[p];
      if (factor.is_zero()) continue;
      for (std::size_t i = 0; i < dim_; ++i) w[i] = w[i] - factor * r[i];
    }
  }

  std::size_t dim_;
  std::vector<std::pair<std::size_t, std::vector<Scalar>>> basis_;
};

}  // namespace weightcat
