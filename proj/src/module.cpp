#include "artin/module.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>

#include "artin/random.hpp"

namespace artin {

namespace {

std::atomic<std::uint64_t> next_module_id{1};

// Pivot list of a matrix already in reduced row-echelon form.
template <Field F>
Subspace<F> subspace_from_rref(Matrix<F> rows, std::size_t ambient) {
  const F& f = rows.field();
  Echelon<F> e{std::move(rows), {}};
  for (std::size_t i = 0; i < e.reduced.rows(); ++i) {
    std::size_t c = 0;
    while (c < ambient && f.is_zero(e.reduced(i, c))) ++c;
    e.pivots.push_back(c);
  }
  return Subspace<F>::from_echelon(std::move(e), ambient);
}

// x_g acting on R^n, component-major coordinates.
template <Field F>
Vec<F> free_apply(const GradedRing<F>& ring, std::size_t n, std::size_t basis_elem, const Vec<F>& v) {
  const F& f = ring.field();
  const std::size_t lam = ring.length();
  Vec<F> out(n * lam, f.zero());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < lam; ++j) {
      const auto& x = v[r * lam + j];
      if (f.is_zero(x)) continue;
      for (const auto& [w, c] : ring.product(basis_elem, j))
        out[r * lam + w] = f.add(out[r * lam + w], f.mul(x, c));
    }
  return out;
}

template <Field F>
Matrix<F> block_diagonal(const F& f, const std::vector<const Matrix<F>*>& blocks) {
  std::size_t n = 0;
  for (auto* b : blocks) n += b->rows();
  Matrix<F> m(f, n, n);
  std::size_t off = 0;
  for (auto* b : blocks) {
    for (std::size_t i = 0; i < b->rows(); ++i)
      for (std::size_t j = 0; j < b->cols(); ++j) m(off + i, off + j) = (*b)(i, j);
    off += b->rows();
  }
  return m;
}

template <Field F>
Matrix<F> stacked_actions(const FiniteModule<F>& m) {
  Matrix<F> s(m.field(), 0, m.dim());
  for (const auto& a : m.actions())
    for (std::size_t i = 0; i < a.rows(); ++i) s.append_row(a.row(i));
  return s;
}

// Quotient without the closure check (caller guarantees s is a submodule).
template <Field F>
FiniteModule<F> quotient_unchecked(const FiniteModule<F>& m, const Subspace<F>& s) {
  auto np = s.non_pivots();
  const std::size_t q = np.size();
  std::vector<Matrix<F>> acts;
  for (const auto& a : m.actions()) {
    Matrix<F> qa(m.field(), q, q);
    for (std::size_t j = 0; j < q; ++j) {
      auto qc = s.quotient_coordinates(a.column(np[j]));
      for (std::size_t i = 0; i < q; ++i) qa(i, j) = qc[i];
    }
    acts.push_back(std::move(qa));
  }
  return FiniteModule<F>::unchecked(m.ring(), q, std::move(acts));
}

template <Field F>
Vec<F> kron_unit(const F& f, std::size_t dn, std::size_t i, std::size_t j, std::size_t total) {
  Vec<F> v(total, f.zero());
  v[i * dn + j] = f.one();
  return v;
}

template <Field F>
struct NaiveTensor {
  Subspace<F> relators;  // W inside M ⊗_k N, index i * dim N + j
  FiniteModule<F> module;
};

template <Field F>
NaiveTensor<F> naive_tensor(const FiniteModule<F>& m, const FiniteModule<F>& n) {
  require_same_ring(m, n);
  const F& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim(), total = dm * dn;
  Matrix<F> rows(f, 0, total);
  Vec<F> buf(total);
  for (std::size_t g = 0; g < m.actions().size(); ++g) {
    const auto& am = m.action(g);
    const auto& an = n.action(g);
    for (std::size_t u = 0; u < dm; ++u)
      for (std::size_t v = 0; v < dn; ++v) {
        std::fill(buf.begin(), buf.end(), f.zero());
        for (std::size_t i = 0; i < dm; ++i)
          if (!f.is_zero(am(i, u))) buf[i * dn + v] = f.add(buf[i * dn + v], am(i, u));
        for (std::size_t j = 0; j < dn; ++j)
          if (!f.is_zero(an(j, v))) buf[u * dn + j] = f.sub(buf[u * dn + j], an(j, v));
        rows.append_row(buf);
      }
  }
  auto w = Subspace<F>::span(rows);
  std::vector<Matrix<F>> acts;
  for (const auto& am : m.actions()) {
    Matrix<F> k(f, total, total);
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t kk = 0; kk < dm; ++kk) {
        if (f.is_zero(am(i, kk))) continue;
        for (std::size_t j = 0; j < dn; ++j) k(i * dn + j, kk * dn + j) = am(i, kk);
      }
    acts.push_back(std::move(k));
  }
  auto big = FiniteModule<F>::unchecked(m.ring(), total, std::move(acts));
  return {w, quotient_by(big, w)};
}

}  // namespace

// ---- RMatrix ----

template <Field F>
bool RMatrix<F>::is_minimal() const {
  const F& f = ring_->field();
  for (const auto& e : entries_)
    if (!f.is_zero(e[0])) return false;
  return true;
}

template <Field F>
bool RMatrix<F>::is_zero() const {
  for (const auto& e : entries_)
    if (!is_zero_vec(ring_->field(), e)) return false;
  return true;
}

template <Field F>
RMatrix<F> RMatrix<F>::operator*(const RMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("RMatrix product: shape mismatch");
  RMatrix r(ring_, rows_, o.cols_);
  const F& f = ring_->field();
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      auto& out = r(i, j);
      for (std::size_t k = 0; k < cols_; ++k) {
        auto p = ring_->multiply((*this)(i, k), o(k, j));
        for (std::size_t t = 0; t < p.size(); ++t) out[t] = f.add(out[t], p[t]);
      }
    }
  return r;
}

template <Field F>
Matrix<F> RMatrix<F>::realize() const {
  const std::size_t lam = ring_->length();
  const F& f = ring_->field();
  Matrix<F> m(f, rows_ * lam, cols_ * lam);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& e = (*this)(r, c);
      for (std::size_t b = 0; b < lam; ++b) {
        if (f.is_zero(e[b])) continue;
        for (std::size_t j = 0; j < lam; ++j)
          for (const auto& [w, x] : ring_->product(b, j))
            m(r * lam + w, c * lam + j) = f.add(m(r * lam + w, c * lam + j), f.mul(e[b], x));
      }
    }
  return m;
}

// ---- FiniteModule ----

template <Field F>
FiniteModule<F> FiniteModule<F>::unchecked(RingPtr<F> ring, std::size_t dim, std::vector<Matrix<F>> actions,
                                           std::optional<std::size_t> free_rank) {
  FiniteModule m;
  m.ring_ = std::move(ring);
  m.dim_ = dim;
  m.actions_ = std::move(actions);
  m.free_rank_ = free_rank;
  m.state_ = std::make_shared<State>();
  m.state_->id = next_module_id++;
  return m;
}

template <Field F>
FiniteModule<F>::FiniteModule(RingPtr<F> ring, std::vector<Matrix<F>> actions,
                              std::optional<std::size_t> free_rank) {
  if (!ring) throw PreconditionError("module needs a ring");
  if (actions.size() != ring->num_vars())
    throw DimensionError("expected one action matrix per ring generator");
  const std::size_t d = actions.empty() ? 0 : actions[0].rows();
  for (const auto& a : actions)
    if (a.rows() != d || a.cols() != d) throw DimensionError("action matrices must be square of equal size");
  for (std::size_t g = 0; g < actions.size(); ++g)
    for (std::size_t h = g + 1; h < actions.size(); ++h)
      if (!(actions[g] * actions[h] == actions[h] * actions[g]))
        throw InvariantError("action matrices do not commute");
  const F& f = ring->field();
  std::map<Exponent, Matrix<F>> memo;
  std::function<const Matrix<F>&(const Exponent&)> mono = [&](const Exponent& e) -> const Matrix<F>& {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    Matrix<F> r = Matrix<F>::identity(f, d);
    for (std::size_t g = 0; g < e.size(); ++g)
      if (e[g] > 0) {
        Exponent e2 = e;
        --e2[g];
        r = actions[g] * mono(e2);
        break;
      }
    return memo.emplace(e, std::move(r)).first->second;
  };
  for (const auto& rel : ring->presentation().relations) {
    Matrix<F> sum(f, d, d);
    for (const auto& [e, c] : rel.terms()) sum = sum + mono(e).scaled(f.from_int(c));
    if (!sum.is_zero()) throw InvariantError("action matrices violate a ring relation");
  }
  *this = unchecked(std::move(ring), d, std::move(actions), free_rank);
}

template <Field F>
const std::vector<Matrix<F>>& FiniteModule<F>::basis_actions() const {
  std::call_once(state_->once, [this] {
    const auto& r = *ring_;
    auto& out = state_->basis_actions;
    out.reserve(r.length());
    out.push_back(Matrix<F>::identity(field(), dim_));
    for (std::size_t i = 1; i < r.length(); ++i) {
      Exponent e = r.basis()[i];
      std::size_t g = 0;
      while (e[g] == 0) ++g;
      --e[g];
      out.push_back(actions_[g] * out[*r.basis_index(e)]);
    }
  });
  return state_->basis_actions;
}

template <Field F>
bool ModuleMap<F>::is_linear() const {
  for (std::size_t g = 0; g < source.actions().size(); ++g)
    if (!(matrix * source.action(g) == target.action(g) * matrix)) return false;
  return true;
}

template <Field F>
void require_same_ring(const FiniteModule<F>& a, const FiniteModule<F>& b) {
  if (a.ring() != b.ring()) throw PreconditionError("modules live over different rings");
}

// ---- constructions ----

template <Field F>
FiniteModule<F> free_module(const RingPtr<F>& r, std::size_t n) {
  std::vector<Matrix<F>> acts;
  for (std::size_t g = 0; g < r->num_vars(); ++g) {
    const auto& mg = r->multiplication_matrix(r->generator_index(g));
    std::vector<const Matrix<F>*> blocks(n, &mg);
    acts.push_back(block_diagonal(r->field(), blocks));
  }
  return FiniteModule<F>::unchecked(r, n * r->length(), std::move(acts), n);
}

template <Field F>
FiniteModule<F> residue_field(const RingPtr<F>& r) {
  std::vector<Matrix<F>> acts(r->num_vars(), Matrix<F>(r->field(), 1, 1));
  return FiniteModule<F>::unchecked(r, 1, std::move(acts));
}

template <Field F>
FiniteModule<F> from_presentation(const RMatrix<F>& p) {
  const auto& ring = *p.ring();
  const F& f = ring.field();
  const std::size_t lam = ring.length(), n = p.rows();
  Matrix<F> rows(f, 0, n * lam);
  Vec<F> buf(n * lam);
  for (std::size_t c = 0; c < p.cols(); ++c)
    for (std::size_t b = 0; b < lam; ++b) {
      std::fill(buf.begin(), buf.end(), f.zero());
      for (std::size_t r = 0; r < n; ++r) {
        const auto& e = p(r, c);
        for (std::size_t j = 0; j < lam; ++j) {
          if (f.is_zero(e[j])) continue;
          for (const auto& [w, x] : ring.product(b, j))
            buf[r * lam + w] = f.add(buf[r * lam + w], f.mul(e[j], x));
        }
      }
      rows.append_row(buf);
    }
  return quotient_unchecked(free_module(p.ring(), n), Subspace<F>::span(rows));
}

template <Field F>
FiniteModule<F> matlis_dual(const FiniteModule<F>& m) {
  std::vector<Matrix<F>> acts;
  for (const auto& a : m.actions()) acts.push_back(a.transpose());
  return FiniteModule<F>::unchecked(m.ring(), m.dim(), std::move(acts));
}

template <Field F>
FiniteModule<F> direct_sum(const FiniteModule<F>& a, const FiniteModule<F>& b) {
  require_same_ring(a, b);
  std::vector<Matrix<F>> acts;
  for (std::size_t g = 0; g < a.actions().size(); ++g)
    acts.push_back(block_diagonal(a.field(), {&a.action(g), &b.action(g)}));
  std::optional<std::size_t> fr;
  if (a.free_rank() && b.free_rank()) fr = *a.free_rank() + *b.free_rank();
  return FiniteModule<F>::unchecked(a.ring(), a.dim() + b.dim(), std::move(acts), fr);
}

// ---- invariants ----

template <Field F>
Subspace<F> msub(const FiniteModule<F>& m, std::size_t j) {
  auto s = Subspace<F>::full(m.field(), m.dim());
  for (std::size_t step = 0; step < j && s.dim() > 0; ++step) {
    Matrix<F> rows(m.field(), 0, m.dim());
    for (const auto& a : m.actions()) {
      auto img = s.basis() * a.transpose();  // rows are (A s_i)^T
      for (std::size_t i = 0; i < img.rows(); ++i) rows.append_row(img.row(i));
    }
    s = Subspace<F>::span(rows);
  }
  return s;
}

template <Field F>
std::size_t min_gens(const FiniteModule<F>& m) {
  return m.dim() - msub(m, 1).dim();
}

template <Field F>
Rational gamma(const FiniteModule<F>& m) {
  if (m.dim() == 0) throw UndefinedInputError("gamma is undefined for the zero module");
  Rational g(static_cast<long>(m.dim()), static_cast<long>(min_gens(m)));
  g.canonicalize();
  return g - 1;
}

template <Field F>
Subspace<F> socle(const FiniteModule<F>& m) {
  if (m.actions().empty()) return Subspace<F>::full(m.field(), m.dim());
  return subspace_from_rref(kernel_basis(stacked_actions(m)), m.dim());
}

template <Field F>
bool k_summand(const FiniteModule<F>& m) {
  return !msub(m, 1).contains(socle(m));
}

template <Field F>
Subspace<F> submodule_generated(const FiniteModule<F>& m, const Matrix<F>& gens) {
  auto s = Subspace<F>::span(gens);
  while (true) {
    Matrix<F> rows = s.basis();
    for (const auto& a : m.actions()) {
      auto img = s.basis() * a.transpose();
      for (std::size_t i = 0; i < img.rows(); ++i) rows.append_row(img.row(i));
    }
    auto next = Subspace<F>::span(rows);
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

template <Field F>
bool is_submodule(const FiniteModule<F>& m, const Subspace<F>& s) {
  for (const auto& a : m.actions()) {
    auto img = s.basis() * a.transpose();
    for (std::size_t i = 0; i < img.rows(); ++i)
      if (!s.contains(img.row_vec(i))) return false;
  }
  return true;
}

template <Field F>
FiniteModule<F> submodule(const FiniteModule<F>& m, const Subspace<F>& s) {
  if (s.ambient_dim() != m.dim()) throw DimensionError("submodule: ambient mismatch");
  const std::size_t k = s.dim();
  std::vector<Matrix<F>> acts;
  for (const auto& a : m.actions()) {
    auto img = s.basis() * a.transpose();
    Matrix<F> sa(m.field(), k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto v = img.row_vec(j);
      if (!s.contains(v)) throw InvariantError("subspace is not closed under the ring action");
      auto c = s.coordinates(v);
      for (std::size_t i = 0; i < k; ++i) sa(i, j) = c[i];
    }
    acts.push_back(std::move(sa));
  }
  return FiniteModule<F>::unchecked(m.ring(), k, std::move(acts));
}

template <Field F>
FiniteModule<F> quotient_by(const FiniteModule<F>& m, const Subspace<F>& s) {
  if (s.ambient_dim() != m.dim()) throw DimensionError("quotient_by: ambient mismatch");
  if (!is_submodule(m, s)) throw InvariantError("subspace is not closed under the ring action");
  return quotient_unchecked(m, s);
}

template <Field F>
Matrix<F> minimal_generators(const FiniteModule<F>& m) {
  auto np = msub(m, 1).non_pivots();
  Matrix<F> g(m.field(), np.size(), m.dim());
  for (std::size_t i = 0; i < np.size(); ++i) g(i, np[i]) = m.field().one();
  return g;
}

template <Field F>
Matrix<F> ring_action(const FiniteModule<F>& m, const Vec<F>& r) {
  const F& f = m.field();
  const auto& ba = m.basis_actions();
  Matrix<F> out(f, m.dim(), m.dim());
  for (std::size_t b = 0; b < r.size(); ++b) {
    if (f.is_zero(r[b])) continue;
    auto& od = out.data();
    const auto& bd = ba[b].data();
    for (std::size_t t = 0; t < od.size(); ++t)
      if (!f.is_zero(bd[t])) od[t] = f.add(od[t], f.mul(r[b], bd[t]));
  }
  return out;
}

template <Field F>
Matrix<F> evaluate_on(const RMatrix<F>& p, const FiniteModule<F>& n, bool transpose_blocks) {
  const std::size_t d = n.dim();
  const std::size_t R = transpose_blocks ? p.cols() : p.rows();
  const std::size_t C = transpose_blocks ? p.rows() : p.cols();
  Matrix<F> out(n.field(), R * d, C * d);
  for (std::size_t r = 0; r < p.rows(); ++r)
    for (std::size_t c = 0; c < p.cols(); ++c) {
      if (is_zero_vec(n.field(), p(r, c))) continue;
      auto blk = ring_action(n, p(r, c));
      std::size_t bi = transpose_blocks ? c : r, bj = transpose_blocks ? r : c;
      for (std::size_t i = 0; i < d; ++i)
        std::copy(blk.row(i).begin(), blk.row(i).end(), out.row(bi * d + i).begin() + bj * d);
    }
  return out;
}

template <Field F>
Cover<F> cover(const FiniteModule<F>& m) {
  auto np = msub(m, 1).non_pivots();
  const auto& ba = m.basis_actions();
  const std::size_t lam = m.ring()->length(), nu = np.size();
  Cover<F> c;
  c.rank = nu;
  c.pi = Matrix<F>(m.field(), m.dim(), nu * lam);
  for (std::size_t r = 0; r < nu; ++r)
    for (std::size_t b = 0; b < lam; ++b)
      for (std::size_t i = 0; i < m.dim(); ++i) c.pi(i, r * lam + b) = ba[b](i, np[r]);
  auto s = solve(c.pi, Matrix<F>::identity(m.field(), m.dim()));
  if (!s) throw InvariantError("cover is not surjective");
  c.section = std::move(*s);
  return c;
}

template <Field F>
Syzygy<F> syzygy(const FiniteModule<F>& m) {
  const auto& ring = *m.ring();
  const std::size_t lam = ring.length();
  auto cv = cover(m);
  auto free = free_module(m.ring(), cv.rank);
  auto ker = subspace_from_rref(kernel_basis(cv.pi), cv.rank * lam);
  if (cv.rank * lam - ker.dim() != m.dim()) throw InvariantError("syzygy: cover rank mismatch");
  // Embedded kernel: coordinates are the pivot entries of the reduced basis.
  std::vector<Matrix<F>> acts;
  for (std::size_t g = 0; g < ring.num_vars(); ++g) {
    Matrix<F> a(m.field(), ker.dim(), ker.dim());
    for (std::size_t j = 0; j < ker.dim(); ++j) {
      auto w = free_apply(ring, cv.rank, ring.generator_index(g), ker.basis().row_vec(j));
      for (std::size_t i = 0; i < ker.dim(); ++i) a(i, j) = w[ker.pivots()[i]];
    }
    acts.push_back(std::move(a));
  }
  auto m1 = FiniteModule<F>::unchecked(m.ring(), ker.dim(), std::move(acts));
  auto gens = minimal_generators(m1) * ker.basis();
  RMatrix<F> pres(m.ring(), cv.rank, gens.rows());
  for (std::size_t c = 0; c < gens.rows(); ++c)
    for (std::size_t r = 0; r < cv.rank; ++r)
      for (std::size_t b = 0; b < lam; ++b) pres(r, c)[b] = gens(c, r * lam + b);
  if (!pres.is_minimal()) throw InvariantError("syzygy: presentation entry outside m");
  return {std::move(m1), ModuleMap<F>{std::move(free), m, std::move(cv.pi)}, std::move(pres)};
}

template <Field F>
RMatrix<F> minimal_presentation(const FiniteModule<F>& m) {
  return syzygy(m).presentation;
}

template <Field F>
FiniteModule<F> tensor_over_R(const FiniteModule<F>& m, const FiniteModule<F>& n) {
  require_same_ring(m, n);
  auto p = minimal_presentation(m);
  auto big = n;
  for (std::size_t r = 1; r < p.rows(); ++r) big = direct_sum(big, n);
  if (p.rows() == 0) return FiniteModule<F>::unchecked(m.ring(), 0, std::vector<Matrix<F>>(
                                                                         m.ring()->num_vars(), Matrix<F>(m.field(), 0, 0)));
  auto img = image_basis(evaluate_on(p, n));
  return quotient_unchecked(big, img);
}

template <Field F>
FiniteModule<F> tensor_over_R_naive(const FiniteModule<F>& m, const FiniteModule<F>& n) {
  return naive_tensor(m, n).module;
}

template <Field F>
Matrix<F> HomModule<F>::map_of(const Vec<F>& coords) const {
  const F& f = module.field();
  Matrix<F> out = maps.empty() ? Matrix<F>() : Matrix<F>(f, maps[0].rows(), maps[0].cols());
  for (std::size_t j = 0; j < maps.size(); ++j)
    if (!f.is_zero(coords[j])) out = out + maps[j].scaled(coords[j]);
  return out;
}

template <Field F>
HomModule<F> hom_over_R(const FiniteModule<F>& m, const FiniteModule<F>& n) {
  require_same_ring(m, n);
  const F& f = m.field();
  const std::size_t lam = m.ring()->length(), dn = n.dim();
  auto syz = syzygy(m);
  const std::size_t nu = syz.presentation.rows();
  auto cv = cover(m);
  // Hom(M, N) = {(n_r) in N^ν : Σ_r P(r,c) n_r = 0 for every column c}.
  auto big = FiniteModule<F>::unchecked(m.ring(), 0, std::vector<Matrix<F>>(m.ring()->num_vars(), Matrix<F>(f, 0, 0)));
  if (nu > 0) {
    big = n;
    for (std::size_t r = 1; r < nu; ++r) big = direct_sum(big, n);
  }
  Subspace<F> ker = Subspace<F>::full(f, nu * dn);
  if (syz.presentation.cols() > 0)
    ker = subspace_from_rref(kernel_basis(evaluate_on(syz.presentation, n, true)), nu * dn);
  HomModule<F> h;
  h.module = submodule(big, ker);
  const auto& ba = n.basis_actions();
  for (std::size_t j = 0; j < ker.dim(); ++j) {
    Matrix<F> g(f, dn, nu * lam);
    for (std::size_t r = 0; r < nu; ++r) {
      Vec<F> nr(ker.basis().row(j).begin() + r * dn, ker.basis().row(j).begin() + (r + 1) * dn);
      for (std::size_t b = 0; b < lam; ++b) g.set_column(r * lam + b, ba[b].apply(nr));
    }
    h.maps.push_back(g * cv.section);
  }
  return h;
}

template <Field F>
std::size_t hom_dim_naive(const FiniteModule<F>& m, const FiniteModule<F>& n) {
  require_same_ring(m, n);
  const F& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim(), total = dm * dn;
  Matrix<F> eq(f, 0, total);
  Vec<F> buf(total);
  for (std::size_t g = 0; g < m.actions().size(); ++g) {
    const auto& am = m.action(g);
    const auto& an = n.action(g);
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t j = 0; j < dm; ++j) {
        std::fill(buf.begin(), buf.end(), f.zero());
        for (std::size_t k = 0; k < dm; ++k) buf[i * dm + k] = f.add(buf[i * dm + k], am(k, j));
        for (std::size_t k = 0; k < dn; ++k) buf[k * dm + j] = f.sub(buf[k * dm + j], an(i, k));
        eq.append_row(buf);
      }
  }
  return total - rank(eq);
}

template <Field F>
Subspace<F> ideal_generated(const RingPtr<F>& r, const Matrix<F>& gens) {
  return submodule_generated(regular_module(r), gens);
}

template <Field F>
Subspace<F> wedge_image(const RMatrix<F>& phi) {
  const auto& ring = *phi.ring();
  const F& f = ring.field();
  const std::size_t n = phi.rows(), g = phi.cols();
  if (n > 8) throw PreconditionError("wedge_image refuses more than 8 rows");
  Matrix<F> minors(f, 0, ring.length());
  if (n == 0) {
    minors.append_row(ring.one());
    return ideal_generated(phi.ring(), minors);
  }
  std::vector<std::size_t> perm(n);
  std::vector<char> choose(g, 0);
  std::fill(choose.begin(), choose.begin() + std::min(n, g), 1);
  if (g < n) return Subspace<F>(f, ring.length());
  do {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < g; ++j)
      if (choose[j]) cols.push_back(j);
    Vec<F> det = ring.zero();
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::size_t inversions = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (perm[a] > perm[b]) ++inversions;
      Vec<F> term = ring.one();
      for (std::size_t i = 0; i < n && !is_zero_vec(f, term); ++i) term = ring.multiply(term, phi(i, cols[perm[i]]));
      for (std::size_t t = 0; t < det.size(); ++t)
        det[t] = inversions % 2 ? f.sub(det[t], term[t]) : f.add(det[t], term[t]);
    } while (std::next_permutation(perm.begin(), perm.end()));
    minors.append_row(det);
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return ideal_generated(phi.ring(), minors);
}

template <Field F>
ExteriorSquare<F> exterior_square_R(const FiniteModule<F>& m) {
  const F& f = m.field();
  const std::size_t d = m.dim(), total = d * d;
  auto nt = naive_tensor(m, m);
  const auto& w = nt.relators;
  const auto& t = nt.module;
  auto to_t = [&](std::size_t i, std::size_t j) { return w.quotient_coordinates(kron_unit(f, d, i, j, total)); };
  Matrix<F> sq(f, 0, t.dim());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      auto v = to_t(i, j);
      if (j != i) {
        auto u = to_t(j, i);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = f.add(v[k], u[k]);
      }
      sq.append_row(v);
    }
  auto q = submodule_generated(t, sq);
  auto wedge = quotient_unchecked(t, q);
  // Swap σ on T, then ι = (I − σ) restricted to the Λ² basis.
  auto wnp = w.non_pivots();
  Matrix<F> anti(f, t.dim(), t.dim());
  for (std::size_t c = 0; c < wnp.size(); ++c) {
    std::size_t i = wnp[c] / d, j = wnp[c] % d;
    auto s = to_t(j, i);
    for (std::size_t r = 0; r < t.dim(); ++r) anti(r, c) = f.neg(s[r]);
    anti(c, c) = f.add(anti(c, c), f.one());
  }
  for (std::size_t r = 0; r < q.dim(); ++r)
    if (!is_zero_vec(f, anti.apply(q.basis().row_vec(r))))
      throw InvariantError("iota is not well defined on the exterior square");
  auto qnp = q.non_pivots();
  Matrix<F> iota(f, t.dim(), qnp.size());
  for (std::size_t c = 0; c < qnp.size(); ++c) iota.set_column(c, anti.column(qnp[c]));
  return {wedge, t, ModuleMap<F>{wedge, t, std::move(iota)}};
}

template <Field F>
bool is_faithful(const FiniteModule<F>& m) {
  const auto& ba = m.basis_actions();
  Matrix<F> rows(m.field(), 0, m.dim() * m.dim());
  for (const auto& b : ba) rows.append_row(b.data());
  return rank(rows) == m.ring()->length();
}

template <Field F>
bool isomorphic(const FiniteModule<F>& a, const FiniteModule<F>& b, std::uint64_t seed, int tries) {
  require_same_ring(a, b);
  if (a.dim() != b.dim()) return false;
  if (a.dim() == 0) return true;
  for (std::size_t j = 1; j <= a.ring()->loewy_length(); ++j)
    if (msub(a, j).dim() != msub(b, j).dim()) return false;
  if (socle(a).dim() != socle(b).dim()) return false;
  auto h = hom_over_R(a, b);
  if (h.maps.empty()) return false;
  Rng rng(seed);
  const F& f = a.field();
  for (int t = 0; t < tries; ++t) {
    Vec<F> c(h.maps.size());
    for (auto& x : c) x = random_elem(f, rng);
    if (rank(h.map_of(c)) == a.dim()) return true;
  }
  return false;
}

template <Field F>
RMatrix<F> random_presentation(const RingPtr<F>& r, std::uint64_t seed, const RandomModuleParams& p) {
  Rng rng(seed);
  const F& f = r->field();
  std::size_t n = rng.range(p.min_gens, p.max_gens);
  std::size_t m = rng.range(p.min_relations, p.max_relations);
  std::vector<std::size_t> pool;
  for (std::size_t b = 0; b < r->length(); ++b) {
    auto d = r->degree_of(b);
    if (d >= std::max<std::size_t>(1, p.min_degree) && d <= p.max_degree) pool.push_back(b);
  }
  RMatrix<F> pm(r, n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (auto b : pool) pm(i, j)[b] = random_elem(f, rng);
  return pm;
}

template <Field F>
FiniteModule<F> random_module(const RingPtr<F>& r, std::uint64_t seed, const RandomModuleParams& p) {
  auto m = from_presentation(random_presentation(r, seed, p));
  if (p.truncate_m2) m = quotient_unchecked(m, msub(m, 2));
  return m;
}

#define ARTIN_INSTANTIATE_MODULE(F)                                                                  \
  template class RMatrix<F>;                                                                         \
  template class FiniteModule<F>;                                                                    \
  template struct ModuleMap<F>;                                                                      \
  template struct HomModule<F>;                                                                      \
  template void require_same_ring<F>(const FiniteModule<F>&, const FiniteModule<F>&);                \
  template FiniteModule<F> free_module<F>(const RingPtr<F>&, std::size_t);                           \
  template FiniteModule<F> residue_field<F>(const RingPtr<F>&);                                      \
  template FiniteModule<F> from_presentation<F>(const RMatrix<F>&);                                  \
  template FiniteModule<F> matlis_dual<F>(const FiniteModule<F>&);                                   \
  template FiniteModule<F> direct_sum<F>(const FiniteModule<F>&, const FiniteModule<F>&);            \
  template std::size_t min_gens<F>(const FiniteModule<F>&);                                          \
  template Rational gamma<F>(const FiniteModule<F>&);                                                \
  template Subspace<F> msub<F>(const FiniteModule<F>&, std::size_t);                                 \
  template Subspace<F> socle<F>(const FiniteModule<F>&);                                             \
  template bool k_summand<F>(const FiniteModule<F>&);                                                \
  template Subspace<F> submodule_generated<F>(const FiniteModule<F>&, const Matrix<F>&);             \
  template bool is_submodule<F>(const FiniteModule<F>&, const Subspace<F>&);                         \
  template FiniteModule<F> submodule<F>(const FiniteModule<F>&, const Subspace<F>&);                 \
  template FiniteModule<F> quotient_by<F>(const FiniteModule<F>&, const Subspace<F>&);               \
  template Matrix<F> minimal_generators<F>(const FiniteModule<F>&);                                  \
  template Matrix<F> ring_action<F>(const FiniteModule<F>&, const Vec<F>&);                          \
  template Matrix<F> evaluate_on<F>(const RMatrix<F>&, const FiniteModule<F>&, bool);                \
  template Cover<F> cover<F>(const FiniteModule<F>&);                                                \
  template Syzygy<F> syzygy<F>(const FiniteModule<F>&);                                              \
  template RMatrix<F> minimal_presentation<F>(const FiniteModule<F>&);                               \
  template FiniteModule<F> tensor_over_R<F>(const FiniteModule<F>&, const FiniteModule<F>&);         \
  template FiniteModule<F> tensor_over_R_naive<F>(const FiniteModule<F>&, const FiniteModule<F>&);   \
  template HomModule<F> hom_over_R<F>(const FiniteModule<F>&, const FiniteModule<F>&);               \
  template std::size_t hom_dim_naive<F>(const FiniteModule<F>&, const FiniteModule<F>&);             \
  template Subspace<F> ideal_generated<F>(const RingPtr<F>&, const Matrix<F>&);                      \
  template Subspace<F> wedge_image<F>(const RMatrix<F>&);                                            \
  template ExteriorSquare<F> exterior_square_R<F>(const FiniteModule<F>&);                           \
  template bool is_faithful<F>(const FiniteModule<F>&);                                              \
  template bool isomorphic<F>(const FiniteModule<F>&, const FiniteModule<F>&, std::uint64_t, int);   \
  template RMatrix<F> random_presentation<F>(const RingPtr<F>&, std::uint64_t, const RandomModuleParams&); \
  template FiniteModule<F> random_module<F>(const RingPtr<F>&, std::uint64_t, const RandomModuleParams&);

ARTIN_INSTANTIATE_MODULE(PrimeField)
ARTIN_INSTANTIATE_MODULE(RationalField)

}  // namespace artin
