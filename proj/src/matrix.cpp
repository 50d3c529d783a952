#include "artin/matrix.hpp"

#include <algorithm>
#include <limits>
#include <type_traits>

namespace artin {

namespace {

// GF(p) elimination on a 64-bit buffer with delayed modular reduction: each row
// tracks how many multiply-adds it has absorbed since its last full reduction.
struct FpEliminator {
  std::uint64_t p;
  std::size_t rows, cols;
  std::vector<std::uint64_t> a;
  std::vector<std::uint32_t> pending;
  std::uint64_t limit;

  FpEliminator(const Matrix<PrimeField>& m)
      : p(m.field().characteristic()), rows(m.rows()), cols(m.cols()),
        a(m.data().begin(), m.data().end()), pending(m.rows(), 0) {
    std::uint64_t sq = (p - 1) * (p - 1);
    limit = sq == 0 ? std::numeric_limits<std::uint32_t>::max()
                    : std::min<std::uint64_t>((std::numeric_limits<std::uint64_t>::max() - p) / sq,
                                              std::numeric_limits<std::uint32_t>::max());
  }

  std::uint64_t* row(std::size_t i) { return a.data() + i * cols; }

  void reduce_row(std::size_t i, std::size_t from) {
    std::uint64_t* r = row(i);
    for (std::size_t k = from; k < cols; ++k) r[k] %= p;
    pending[i] = 0;
  }

  static std::uint64_t inverse(std::uint64_t x, std::uint64_t p) {
    long long t = 0, nt = 1, r = static_cast<long long>(p), nr = static_cast<long long>(x);
    while (nr != 0) {
      long long q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
  }

  // Gaussian elimination; `full` also clears above each pivot (reduced form).
  std::vector<std::size_t> run(bool full) {
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> nz;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i) {
        std::uint64_t& x = row(i)[c];
        x %= p;
        if (x != 0) {
          piv = i;
          break;
        }
      }
      if (piv == rows) continue;
      if (piv != r) {
        std::swap_ranges(row(piv) + c, row(piv) + cols, row(r) + c);
        std::swap(pending[piv], pending[r]);
      }
      reduce_row(r, c);
      std::uint64_t* pr = row(r);
      std::uint64_t inv = inverse(pr[c], p);
      nz.clear();
      for (std::size_t k = c; k < cols; ++k) {
        if (pr[k] != 0) {
          pr[k] = pr[k] * inv % p;
          nz.push_back(k);
        }
      }
      bool sparse = nz.size() * 4 < cols - c;
      std::size_t start = full ? 0 : r + 1;
      for (std::size_t i = start; i < rows; ++i) {
        if (i == r) continue;
        std::uint64_t* ri = row(i);
        std::uint64_t v = ri[c] % p;
        if (v == 0) {
          ri[c] = 0;
          continue;
        }
        if (pending[i] + 1 > limit) reduce_row(i, c);
        std::uint64_t f = p - v;
        if (sparse) {
          for (std::size_t k : nz) ri[k] += f * pr[k];
        } else {
          for (std::size_t k = c; k < cols; ++k) ri[k] += f * pr[k];
        }
        ++pending[i];
        ri[c] = 0;
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }
};

template <Field F>
std::vector<std::size_t> generic_eliminate(Matrix<F>& m, bool full) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (!f.is_zero(m(i, c))) {
        piv = i;
        break;
      }
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t k = c; k < m.cols(); ++k) std::swap(m(piv, k), m(r, k));
    auto inv = f.inv(m(r, c));
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!f.is_zero(m(r, k))) m(r, k) = f.mul(m(r, k), inv);
    std::size_t start = full ? 0 : r + 1;
    for (std::size_t i = start; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!f.is_zero(m(r, k))) m(i, k) = f.sub(m(i, k), f.mul(factor, m(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <Field F>
std::vector<std::size_t> eliminate(Matrix<F>& m, bool full) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    FpEliminator e(m);
    auto pivots = e.run(full);
    auto& d = m.data();
    for (std::size_t k = 0; k < d.size(); ++k)
      d[k] = static_cast<std::uint32_t>(e.a[k] % e.p);
    return pivots;
  } else {
    return generic_eliminate(m, full);
  }
}

}  // namespace

template <Field F>
Matrix<F> Matrix<F>::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  if constexpr (std::is_same_v<F, PrimeField>) {
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t sq = (p - 1) * (p - 1);
    const std::uint64_t limit =
        sq == 0 ? std::numeric_limits<std::uint64_t>::max()
                : (std::numeric_limits<std::uint64_t>::max() - p) / sq;
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      std::uint64_t count = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t a = (*this)(i, k);
        if (a == 0) continue;
        if (++count > limit) {
          for (auto& x : acc) x %= p;
          count = 1;
        }
        const Elem* orow = o.data_.data() + k * o.cols_;
        for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * orow[j];
      }
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = static_cast<Elem>(acc[j] % p);
    }
  } else {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (!field_.is_zero(o(k, j))) r(i, j) = field_.add(r(i, j), field_.mul(a, o(k, j)));
      }
  }
  return r;
}

template <Field F>
Vec<F> Matrix<F>::apply(const Vec<F>& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
  Vec<F> out(rows_, field_.zero());
  if constexpr (std::is_same_v<F, PrimeField>) {
    const std::uint64_t p = field_.characteristic();
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint64_t acc = 0;
      const Elem* r = data_.data() + i * cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        acc += static_cast<std::uint64_t>(r[j]) * v[j];
        if ((j & 1023) == 1023) acc %= p;
      }
      out[i] = static_cast<Elem>(acc % p);
    }
  } else {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!field_.is_zero(v[j]) && !field_.is_zero((*this)(i, j)))
          out[i] = field_.add(out[i], field_.mul((*this)(i, j), v[j]));
  }
  return out;
}

template <Field F>
Echelon<F> rref(Matrix<F> m) {
  auto pivots = eliminate(m, true);
  Matrix<F> reduced(m.field(), pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    std::copy(m.row(i).begin(), m.row(i).end(), reduced.row(i).begin());
  return {std::move(reduced), std::move(pivots)};
}

template <Field F>
std::size_t rank(Matrix<F> m) {
  if (m.rows() > m.cols()) m = m.transpose();
  return eliminate(m, false).size();
}

template <Field F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  const F& f = m.field();
  const std::size_t n = m.cols();
  // Eliminating with columns reversed makes the standard null-space vectors come out
  // already in reduced row-echelon form (leading 1 at each free column).
  Matrix<F> rev(f, m.rows(), n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) rev(i, n - 1 - j) = m(i, j);
  auto e = rref(std::move(rev));
  std::vector<char> is_pivot(n, 0);
  for (std::size_t pc : e.pivots) is_pivot[pc] = 1;
  Matrix<F> ker(f, n - e.pivots.size(), n);
  std::size_t row = 0;
  for (std::size_t orig = 0; orig < n; ++orig) {
    std::size_t rc = n - 1 - orig;
    if (is_pivot[rc]) continue;
    ker(row, orig) = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const auto& x = e.reduced(i, rc);
      if (!f.is_zero(x)) ker(row, n - 1 - e.pivots[i]) = f.neg(x);
    }
    ++row;
  }
  return ker;
}

template <Field F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve: row count mismatch");
  const F& f = a.field();
  auto e = rref(hstack(a, b));
  Matrix<F> x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, a.cols() + j);
  }
  return x;
}

template <Field F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack: row count mismatch");
  Matrix<F> r(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), r.row(i).begin());
    std::copy(b.row(i).begin(), b.row(i).end(), r.row(i).begin() + a.cols());
  }
  return r;
}

template <Field F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack: column count mismatch");
  Matrix<F> r(a.field(), a.rows() + b.rows(), a.cols());
  std::copy(a.data().begin(), a.data().end(), r.data().begin());
  std::copy(b.data().begin(), b.data().end(), r.data().begin() + a.data().size());
  return r;
}

template <Field F>
Subspace<F> Subspace<F>::span(const Matrix<F>& rows) {
  return from_echelon(rref(rows), rows.cols());
}

template <Field F>
std::vector<std::size_t> Subspace<F>::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

template <Field F>
Vec<F> Subspace<F>::reduce(Vec<F> v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match ambient space");
  const F& f = field();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    auto c = v[pivots_[i]];
    if (f.is_zero(c)) continue;
    auto r = basis_.row(i);
    for (std::size_t k = pivots_[i]; k < ambient_; ++k)
      if (!f.is_zero(r[k])) v[k] = f.sub(v[k], f.mul(c, r[k]));
  }
  return v;
}

template <Field F>
bool Subspace<F>::contains(const Vec<F>& v) const {
  return is_zero_vec(field(), reduce(v));
}

template <Field F>
bool Subspace<F>::contains(const Subspace& other) const {
  check_ambient(other);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis().row_vec(i))) return false;
  return true;
}

template <Field F>
Vec<F> Subspace<F>::coordinates(const Vec<F>& v) const {
  Vec<F> c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

template <Field F>
Vec<F> Subspace<F>::quotient_coordinates(const Vec<F>& v) const {
  auto r = reduce(v);
  Vec<F> out;
  out.reserve(ambient_ - pivots_.size());
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(r[c]);
  }
  return out;
}

template <Field F>
Subspace<F> Subspace<F>::sum(const Subspace& other) const {
  check_ambient(other);
  return span(vstack(basis_, other.basis_));
}

template <Field F>
Subspace<F> Subspace<F>::intersection(const Subspace& other) const {
  check_ambient(other);
  // Zassenhaus: rows (a | a) and (b | 0); rows whose left half vanishes span a ∩ b.
  const F& f = field();
  const std::size_t n = ambient_;
  Matrix<F> z(f, dim() + other.dim(), 2 * n);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t k = 0; k < n; ++k) z(i, k) = z(i, n + k) = basis_(i, k);
  for (std::size_t i = 0; i < other.dim(); ++i)
    for (std::size_t k = 0; k < n; ++k) z(dim() + i, k) = other.basis_(i, k);
  auto e = rref(std::move(z));
  Matrix<F> rows(f, 0, n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    if (e.pivots[i] >= n) rows.append_row(e.reduced.row(i).subspan(n, n));
  return span(rows);
}

#define ARTIN_INSTANTIATE_MATRIX(F)                                               \
  template class Matrix<F>;                                                       \
  template class Subspace<F>;                                                     \
  template Echelon<F> rref<F>(Matrix<F>);                                         \
  template std::size_t rank<F>(Matrix<F>);                                        \
  template Matrix<F> kernel_basis<F>(const Matrix<F>&);                           \
  template std::optional<Matrix<F>> solve<F>(const Matrix<F>&, const Matrix<F>&); \
  template Matrix<F> hstack<F>(const Matrix<F>&, const Matrix<F>&);               \
  template Matrix<F> vstack<F>(const Matrix<F>&, const Matrix<F>&);

ARTIN_INSTANTIATE_MATRIX(PrimeField)
ARTIN_INSTANTIATE_MATRIX(RationalField)

}  // namespace artin
