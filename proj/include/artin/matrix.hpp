#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "artin/errors.hpp"
#include "artin/field.hpp"

namespace artin {

template <Field F>
using Vec = std::vector<typename F::Elem>;

/// Dense row-major matrix over an exact field.
template <Field F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() = default;
  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_ints(const F& field,
                          std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionError("ragged matrix literal");
      std::size_t j = 0;
      for (long long v : row) m(i, j++) = field.from_int(v);
      ++i;
    }
    return m;
  }

  static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vec<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionError("row length mismatch");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec<F> row_vec(std::size_t i) const { return Vec<F>(row(i).begin(), row(i).end()); }
  Vec<F> column(std::size_t j) const {
    Vec<F> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_column(std::size_t j, const Vec<F>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  std::vector<Elem>& data() { return data_; }
  const std::vector<Elem>& data() const { return data_; }

  void append_row(std::span<const Elem> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw DimensionError("append_row: length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.add(data_[k], o.data_[k]);
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.sub(data_[k], o.data_[k]);
    return r;
  }
  Matrix scaled(const Elem& c) const {
    Matrix r(*this);
    for (auto& x : r.data_) x = field_.mul(x, c);
    return r;
  }

  Matrix operator*(const Matrix& o) const;
  Vec<F> apply(const Vec<F>& v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += field_.to_string((*this)(i, j));
      }
      s += "]\n";
    }
    return s;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  F field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// Reduced row-echelon form with leftmost-pivot, first-nonzero-row tie-breaking.
/// Zero rows are dropped: `reduced` has exactly rank rows.
template <Field F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
};

template <Field F>
Echelon<F> rref(Matrix<F> m);

template <Field F>
std::size_t rank(Matrix<F> m);

/// Basis of the right null space {v : m v = 0}, returned in reduced row-echelon form.
template <Field F>
Matrix<F> kernel_basis(const Matrix<F>& m);

/// Some X with a X = b, or nullopt when the system is inconsistent.
template <Field F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b);

template <Field F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b);

template <Field F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b);

/// A linear subspace of F^n, stored as a reduced row-echelon basis.
template <Field F>
class Subspace {
 public:
  Subspace() = default;
  Subspace(const F& field, std::size_t ambient) : basis_(field, 0, ambient), ambient_(ambient) {}

  static Subspace span(const Matrix<F>& rows);
  static Subspace full(const F& field, std::size_t n) {
    Subspace s;
    s.ambient_ = n;
    s.basis_ = Matrix<F>::identity(field, n);
    s.pivots_.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.pivots_[i] = i;
    return s;
  }
  /// Adopts an echelon basis without re-reducing it.
  static Subspace from_echelon(Echelon<F> e, std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = std::move(e.reduced);
    if (s.basis_.rows() == 0) s.basis_ = Matrix<F>(s.basis_.field(), 0, ambient);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  const F& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> non_pivots() const;

  /// v minus its projection along the basis; zero iff v lies in the subspace.
  Vec<F> reduce(Vec<F> v) const;
  bool contains(const Vec<F>& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of a member vector with respect to the basis (its pivot entries).
  Vec<F> coordinates(const Vec<F>& v) const;
  /// Image of v in ambient/this, coordinatized by the non-pivot columns.
  Vec<F> quotient_coordinates(const Vec<F>& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

 private:
  void check_ambient(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw DimensionError("subspace ambient dimension mismatch");
  }

  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
  std::size_t ambient_ = 0;
};

/// Column space of m, as a subspace of F^{rows}.
template <Field F>
Subspace<F> image_basis(const Matrix<F>& m) {
  return Subspace<F>::span(m.transpose());
}

// Small vector helpers shared by the algebra layers.
template <Field F>
bool is_zero_vec(const F& f, const Vec<F>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

template <Field F>
void axpy(const F& f, const typename F::Elem& a, const Vec<F>& x, Vec<F>& y) {
  if (f.is_zero(a)) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!f.is_zero(x[i])) y[i] = f.add(y[i], f.mul(a, x[i]));
}

}  // namespace artin
