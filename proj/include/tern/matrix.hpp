#pragma once

// Small dense matrices over a Field. Rows are row vectors; maps act on the
// right (v -> v * M) throughout the library.

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tern/gf.hpp"

namespace tern {

using Vec = std::vector<Elem>;

class Matrix {
 public:
  Matrix(const Field& field, int rows, int cols)
      : field_(&field), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }

  static Matrix identity(const Field& field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const Field& field, int cols, const std::vector<Vec>& rows) {
    Matrix m(field, static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows_; ++r) {
      if (static_cast<int>(rows[r].size()) != cols) throw std::invalid_argument("row length mismatch");
      for (int c = 0; c < cols; ++c) {
        if (rows[r][c] >= field.order()) throw FieldError("entry out of range for " + field.name());
        m(r, c) = rows[r][c];
      }
    }
    return m;
  }

  const Field& field() const { return *field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Elem operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::span<const Elem> row(int r) const { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
  Vec row_vec(int r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }
  std::span<const Elem> data() const { return data_; }

  Matrix operator*(const Matrix& rhs) const {
    check_field(rhs);
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    const Field& f = *field_;
    Matrix out(f, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Elem a = (*this)(i, k);
        if (a == 0) continue;
        for (int j = 0; j < rhs.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(a, rhs(k, j)));
      }
    return out;
  }

  Matrix transpose() const {
    Matrix out(*field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix map_entries(const FieldAutomorphism& sigma) const {
    Matrix out = *this;
    for (auto& e : out.data_) e = sigma(e);
    return out;
  }

  /// Gauss-Jordan elimination in place to reduced row-echelon form with the
  /// leftmost-pivot convention. Returns the pivot columns; rows past the rank
  /// are zero.
  std::vector<int> reduce() {
    const Field& f = *field_;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int sel = -1;
      for (int i = r; i < rows_; ++i)
        if ((*this)(i, c) != 0) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      if (sel != r)
        for (int j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(r, j));
      const Elem s = f.inv((*this)(r, c));
      for (int j = 0; j < cols_; ++j) (*this)(r, j) = f.mul(s, (*this)(r, j));
      for (int i = 0; i < rows_; ++i) {
        if (i == r) continue;
        const Elem factor = (*this)(i, c);
        if (factor == 0) continue;
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = f.sub((*this)(i, j), f.mul(factor, (*this)(r, j)));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    Matrix tmp = *this;
    return static_cast<int>(tmp.reduce().size());
  }

  /// The first n rows.
  Matrix top(int n) const {
    Matrix out(*field_, n, cols_);
    std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(n) * cols_, out.data_.begin());
    return out;
  }

  Matrix stack(const Matrix& below) const {
    check_field(below);
    if (cols_ != below.cols_) throw std::invalid_argument("column mismatch in stack");
    Matrix out(*field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
  }

  Elem determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    const Field& f = *field_;
    Matrix a = *this;
    Elem det = 1;
    for (int c = 0; c < cols_; ++c) {
      int sel = -1;
      for (int i = c; i < rows_; ++i)
        if (a(i, c) != 0) {
          sel = i;
          break;
        }
      if (sel < 0) return 0;
      if (sel != c) {
        for (int j = 0; j < cols_; ++j) std::swap(a(sel, j), a(c, j));
        det = f.neg(det);
      }
      det = f.mul(det, a(c, c));
      const Elem s = f.inv(a(c, c));
      for (int i = c + 1; i < rows_; ++i) {
        const Elem factor = f.mul(a(i, c), s);
        if (factor == 0) continue;
        for (int j = c; j < cols_; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(c, j)));
      }
    }
    return det;
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    const int n = rows_;
    Matrix aug(*field_, n, 2 * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = 1;
    }
    auto pivots = aug.reduce();
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix out(*field_, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
  }

  /// Basis (as rows, in reduced echelon form) of {w : this * w^T = 0}.
  Matrix nullspace() const {
    const Field& f = *field_;
    Matrix a = *this;
    const auto pivots = a.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      Vec w(cols_, 0);
      w[free] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) w[pivots[r]] = f.neg(a(static_cast<int>(r), free));
      basis.push_back(std::move(w));
    }
    Matrix out = from_rows(f, cols_, basis);
    out.reduce();
    return out;
  }

  bool operator==(const Matrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }
  std::strong_ordering operator<=>(const Matrix& other) const {
    if (auto c = rows_ <=> other.rows_; c != 0) return c;
    if (auto c = cols_ <=> other.cols_; c != 0) return c;
    return data_ <=> other.data_;
  }

 private:
  void check_field(const Matrix& other) const {
    if (field_ != other.field_) throw FieldError("matrices over different fields");
  }

  const Field* field_;
  int rows_;
  int cols_;
  std::vector<Elem> data_;
};

inline Vec vec_times(const Vec& v, const Matrix& m) {
  if (static_cast<int>(v.size()) != m.rows()) throw std::invalid_argument("vector length mismatch");
  const Field& f = m.field();
  Vec out(m.cols(), 0);
  for (int k = 0; k < m.rows(); ++k) {
    if (v[k] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[k], m(k, j)));
  }
  return out;
}

inline Vec map_entries(const Vec& v, const FieldAutomorphism& sigma) {
  Vec out = v;
  for (auto& e : out) e = sigma(e);
  return out;
}

inline Vec scale(const Field& f, Elem c, const Vec& v) {
  Vec out = v;
  for (auto& e : out) e = f.mul(c, e);
  return out;
}

inline bool is_zero(const Vec& v) {
  for (Elem e : v)
    if (e != 0) return false;
  return true;
}

}  // namespace tern
