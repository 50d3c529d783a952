#include "artin/homology.hpp"

#include <deque>
#include <map>
#include <unordered_map>

namespace artin {

namespace {

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

// Basis element b acting on R^n, component-major coordinates.
template <Field F>
Vec<F> free_apply(const GradedRing<F>& ring, std::size_t n, std::size_t b, std::span<const typename F::Elem> v) {
  const F& f = ring.field();
  const std::size_t lam = ring.length();
  Vec<F> out(n * lam, f.zero());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < lam; ++j) {
      const auto& x = v[r * lam + j];
      if (f.is_zero(x)) continue;
      for (const auto& [w, c] : ring.product(b, j)) out[r * lam + w] = f.add(out[r * lam + w], f.mul(x, c));
    }
  return out;
}

// ρ(b) v for every ring basis element b.
template <Field F>
std::vector<Vec<F>> orbit(const FiniteModule<F>& m, const Vec<F>& v) {
  const auto& r = *m.ring();
  std::vector<Vec<F>> out;
  out.reserve(r.length());
  out.push_back(v);
  for (std::size_t i = 1; i < r.length(); ++i) {
    Exponent e = r.basis()[i];
    std::size_t g = 0;
    while (e[g] == 0) ++g;
    --e[g];
    out.push_back(m.action(g).apply(out[*r.basis_index(e)]));
  }
  return out;
}

template <Field F>
FiniteModule<F> zero_module(const RingPtr<F>& r) {
  return FiniteModule<F>::unchecked(r, 0, std::vector<Matrix<F>>(r->num_vars(), Matrix<F>(r->field(), 0, 0)));
}

template <Field F>
FiniteModule<F> embedded_module(const RingPtr<F>& ring, std::size_t n, const Subspace<F>& k) {
  std::vector<Matrix<F>> acts;
  for (std::size_t g = 0; g < ring->num_vars(); ++g) {
    Matrix<F> a(ring->field(), k.dim(), k.dim());
    for (std::size_t j = 0; j < k.dim(); ++j) {
      auto w = free_apply(*ring, n, ring->generator_index(g), k.basis().row(j));
      for (std::size_t i = 0; i < k.dim(); ++i) a(i, j) = w[k.pivots()[i]];
    }
    acts.push_back(std::move(a));
  }
  return FiniteModule<F>::unchecked(ring, k.dim(), std::move(acts));
}

template <Field F>
struct Caches {
  std::mutex mutex;
  std::unordered_map<std::uint64_t, std::shared_ptr<Resolution<F>>> resolutions;
  std::map<RingPtr<F>, std::vector<std::size_t>> residue_betti;
  std::map<RingPtr<F>, FiniteModule<F>> residue_modules;
};

template <Field F>
Caches<F>& caches() {
  static Caches<F> c;
  return c;
}

template <Field F>
FiniteModule<F> cached_residue_field(const RingPtr<F>& r) {
  auto& c = caches<F>();
  std::lock_guard lock(c.mutex);
  auto it = c.residue_modules.find(r);
  if (it == c.residue_modules.end()) it = c.residue_modules.emplace(r, residue_field(r)).first;
  return it->second;
}

template <Field F>
std::size_t rank_or_zero(const Matrix<F>& m) {
  return m.rows() == 0 || m.cols() == 0 ? 0 : rank(m);
}

}  // namespace

// ---- Resolution ----

template <Field F>
Resolution<F>::Resolution(FiniteModule<F> m) : module_(std::move(m)), ring_(module_.ring()) {
  embeddings_.emplace_back();  // K_0 = M lives in its own coordinates
  syzygies_.emplace_back(module_);
  step();
}

template <Field F>
void Resolution<F>::step() {
  const auto& ring = *ring_;
  const F& f = ring.field();
  const std::size_t lam = ring.length();
  const std::size_t i = pending_;

  if (i == 0) {
    auto np = msub(module_, 1).non_pivots();
    const std::size_t b0 = np.size();
    betti_.push_back(b0);
    if (b0 == 0) {
      terminated_ = true;
      return;
    }
    Matrix<F> pi(f, module_.dim(), b0 * lam);
    for (std::size_t r = 0; r < b0; ++r) {
      Vec<F> g(module_.dim(), f.zero());
      g[np[r]] = f.one();
      auto orb = orbit(module_, g);
      for (std::size_t b = 0; b < lam; ++b) pi.set_column(r * lam + b, orb[b]);
    }
    auto k1 = subspace_from_rref(kernel_basis(pi), b0 * lam);
    if (b0 * lam - k1.dim() != module_.dim()) throw InvariantError("resolution: cover of M is not surjective");
    embeddings_.push_back(std::move(k1));
    syzygies_.emplace_back();
    pending_ = 1;
    return;
  }

  const Subspace<F>& k = embeddings_[i];
  const std::size_t prev = betti_[i - 1];
  if (k.dim() == 0) {
    betti_.push_back(0);
    deltas_.emplace_back(ring_, prev, 0);
    terminated_ = true;
    return;
  }
  // m K_i in K-coordinates (pivot entries of vectors in K_i).
  Matrix<F> mk(f, 0, k.dim());
  Vec<F> buf(k.dim());
  for (std::size_t j = 0; j < k.dim(); ++j)
    for (std::size_t g = 0; g < ring.num_vars(); ++g) {
      auto w = free_apply(ring, prev, ring.generator_index(g), k.basis().row(j));
      for (std::size_t t = 0; t < k.dim(); ++t) buf[t] = w[k.pivots()[t]];
      mk.append_row(buf);
    }
  auto np = Subspace<F>::span(mk).non_pivots();
  const std::size_t bi = np.size();
  betti_.push_back(bi);

  RMatrix<F> delta(ring_, prev, bi);
  for (std::size_t c = 0; c < bi; ++c) {
    auto row = k.basis().row(np[c]);
    for (std::size_t r = 0; r < prev; ++r)
      for (std::size_t b = 0; b < lam; ++b) delta(r, c)[b] = row[r * lam + b];
  }
  if (!delta.is_minimal()) throw InvariantError("resolution: differential entry outside m");
  deltas_.push_back(std::move(delta));

  Matrix<F> pi(f, prev * lam, bi * lam);
  for (std::size_t c = 0; c < bi; ++c)
    for (std::size_t b = 0; b < lam; ++b) pi.set_column(c * lam + b, free_apply(ring, prev, b, k.basis().row(np[c])));
  auto next = subspace_from_rref(kernel_basis(pi), bi * lam);
  if (bi * lam - next.dim() != k.dim()) throw InvariantError("resolution: complex is not exact");
  embeddings_.push_back(std::move(next));
  syzygies_.emplace_back();

  if (i >= 2) {
    long long e = static_cast<long long>(ring.num_vars());
    long long lm2 = static_cast<long long>(lam) - 1 - e;
    long long h = static_cast<long long>(ring.loewy_length());
    long long lhs = static_cast<long long>(betti_[i]);
    long long rhs = e * static_cast<long long>(betti_[i - 1]) - (lm2 + 2 - h) * static_cast<long long>(betti_[i - 2]);
    if (lhs < rhs) throw InvariantError("resolution: Betti numbers violate the Gasharov-Peeva bound");
  }
  pending_ = i + 1;
}

template <Field F>
void Resolution<F>::extend_to(std::size_t n) {
  std::lock_guard lock(mutex_);
  while (!terminated_ && betti_.size() <= n) step();
}

template <Field F>
std::size_t Resolution<F>::betti(std::size_t i) const {
  if (i < betti_.size()) return betti_[i];
  if (terminated_) return 0;
  throw PreconditionError("Betti number requested beyond the computed range");
}

template <Field F>
std::vector<std::size_t> Resolution<F>::betti_list(std::size_t n) {
  extend_to(n);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(betti(i));
  return out;
}

template <Field F>
const RMatrix<F>& Resolution<F>::differential(std::size_t i) {
  if (i == 0) throw PreconditionError("differentials are indexed from 1");
  extend_to(i);
  std::lock_guard lock(mutex_);
  if (i - 1 < deltas_.size()) return deltas_[i - 1];
  while (deltas_.size() < i) deltas_.emplace_back(ring_, 0, 0);
  return deltas_[i - 1];
}

template <Field F>
const FiniteModule<F>& Resolution<F>::syzygy_module(std::size_t i) {
  extend_to(i);
  std::lock_guard lock(mutex_);
  while (syzygies_.size() <= i) syzygies_.emplace_back();
  auto& slot = syzygies_[i];
  if (!slot) {
    if (i < embeddings_.size())
      slot = embedded_module(ring_, betti_[i - 1], embeddings_[i]);
    else
      slot = zero_module(ring_);
  }
  return *slot;
}

template <Field F>
std::shared_ptr<Resolution<F>> resolve(const FiniteModule<F>& m, std::size_t n) {
  auto& c = caches<F>();
  std::shared_ptr<Resolution<F>> res;
  {
    std::lock_guard lock(c.mutex);
    auto& slot = c.resolutions[m.id()];
    if (!slot) slot = std::make_shared<Resolution<F>>(m);
    res = slot;
  }
  res->extend_to(n);
  return res;
}

namespace {

template <Field F>
void clear_caches() {
  auto& c = caches<F>();
  std::lock_guard lock(c.mutex);
  c.resolutions.clear();
  c.residue_betti.clear();
  c.residue_modules.clear();
}

}  // namespace

void clear_resolution_cache() {
  clear_caches<PrimeField>();
  clear_caches<RationalField>();
}

// ---- Betti numbers ----

template <Field F>
std::vector<std::size_t> residue_betti(const RingPtr<F>& r, std::size_t n) {
  auto& c = caches<F>();
  {
    std::lock_guard lock(c.mutex);
    auto it = c.residue_betti.find(r);
    if (it != c.residue_betti.end() && it->second.size() > n)
      return {it->second.begin(), it->second.begin() + static_cast<long>(n) + 1};
  }
  std::vector<std::size_t> out{1};
  if (n > 0) {
    auto reg = regular_module(r);
    auto m = submodule(reg, msub(reg, 1));
    auto rest = betti_split(m, n - 1);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  std::lock_guard lock(c.mutex);
  auto& slot = c.residue_betti[r];
  if (slot.size() < out.size()) slot = out;
  return out;
}

template <Field F>
std::vector<std::size_t> betti_split(const FiniteModule<F>& m, std::size_t n) {
  std::vector<std::size_t> out(n + 1, 0);
  if (m.dim() == 0) return out;
  const F& f = m.field();
  auto mm = msub(m, 1);
  auto soc = socle(m);
  // Socle elements independent modulo mM split off as copies of k.
  auto t = mm;
  for (std::size_t j = 0; j < soc.dim(); ++j) {
    auto v = soc.basis().row_vec(j);
    if (!t.contains(v)) t = t.sum(Subspace<F>::span(Matrix<F>::from_rows(f, m.dim(), {v})));
  }
  const std::size_t d = t.dim() - mm.dim();
  if (d > 0) {
    auto np = t.non_pivots();
    Matrix<F> gens(f, np.size(), m.dim());
    for (std::size_t i = 0; i < np.size(); ++i) gens(i, np[i]) = f.one();
    auto rest_space = submodule_generated(m, gens);
    if (rest_space.dim() + d != m.dim()) throw InvariantError("betti_split: residue-field splitting failed");
    auto bk = residue_betti(m.ring(), n);
    auto rest = betti_split(submodule(m, rest_space), n);
    for (std::size_t i = 0; i <= n; ++i) out[i] = d * bk[i] + rest[i];
    return out;
  }
  out[0] = m.dim() - mm.dim();
  if (n == 0) return out;
  auto syz = syzygy(m).module;
  auto rest = betti_split(syz, n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i + 1] = rest[i];
  return out;
}

template <Field F>
std::vector<std::size_t> poincare_trunc(const FiniteModule<F>& m, std::size_t n) {
  {
    auto& c = caches<F>();
    std::shared_ptr<Resolution<F>> res;
    {
      std::lock_guard lock(c.mutex);
      auto it = c.resolutions.find(m.id());
      if (it != c.resolutions.end()) res = it->second;
    }
    if (res && (res->terminated() || res->computed() >= n)) return res->betti_list(n);
  }
  return betti_split(m, n);
}

// ---- Tor and Ext ----

namespace {

template <Field F>
std::size_t tor_rank(Resolution<F>& res, const FiniteModule<F>& n, std::size_t i, bool transpose) {
  if (i == 0) return 0;
  const auto& d = res.differential(i);
  if (d.rows() == 0 || d.cols() == 0 || n.dim() == 0) return 0;
  return rank_or_zero(evaluate_on(d, n, transpose));
}

}  // namespace

template <Field F>
std::size_t tor_dim(const FiniteModule<F>& m, const FiniteModule<F>& n, std::size_t i) {
  require_same_ring(m, n);
  auto res = resolve(m, i + 1);
  std::size_t bi = res->betti(i);
  if (bi == 0) return 0;
  return bi * n.dim() - tor_rank(*res, n, i, false) - tor_rank(*res, n, i + 1, false);
}

template <Field F>
TorProfile<F> tor_profile(const FiniteModule<F>& m, const FiniteModule<F>& n, std::size_t to, std::size_t from) {
  require_same_ring(m, n);
  TorProfile<F> p;
  p.from = from;
  p.to = to;
  if (to < from) return p;
  auto res = resolve(m, to + 1);
  std::vector<std::size_t> ranks;
  for (std::size_t i = from; i <= to + 1; ++i) ranks.push_back(tor_rank(*res, n, i, false));
  for (std::size_t i = from; i <= to; ++i) {
    std::size_t bi = res->betti(i);
    p.dims.push_back(bi == 0 ? 0 : bi * n.dim() - ranks[i - from] - ranks[i - from + 1]);
  }
  p.left_free = res->terminated() && res->computed() <= to;
  return p;
}

template <Field F>
std::size_t ext_dim(const FiniteModule<F>& m, const FiniteModule<F>& n, std::size_t i) {
  return tor_dim(m, matlis_dual(n), i);
}

template <Field F>
std::size_t ext_dim_direct(const FiniteModule<F>& m, const FiniteModule<F>& n, std::size_t i) {
  require_same_ring(m, n);
  auto res = resolve(m, i + 1);
  std::size_t bi = res->betti(i);
  if (bi == 0) return 0;
  return bi * n.dim() - tor_rank(*res, n, i, true) - tor_rank(*res, n, i + 1, true);
}

template <Field F>
std::vector<std::size_t> ext_profile(const FiniteModule<F>& m, const FiniteModule<F>& n, std::size_t to,
                                     std::size_t from) {
  return tor_profile(m, matlis_dual(n), to, from).dims;
}

template <Field F>
ModuleMap<F> max_ideal_inclusion(const FiniteModule<F>& n) {
  auto s = msub(n, 1);
  return {submodule(n, s), n, s.basis().transpose()};
}

template <Field F>
std::size_t tor_induced_k(const ModuleMap<F>& map, std::size_t i) {
  const auto& a = map.source;
  const auto& b = map.target;
  require_same_ring(a, b);
  const F& f = a.field();
  auto k = cached_residue_field(a.ring());
  auto res = resolve(k, i + 1);
  const std::size_t bi = res->betti(i);
  if (bi == 0 || a.dim() == 0 || b.dim() == 0) return 0;
  // Cycles of A ⊗ F_i.
  Matrix<F> z(f, 0, bi * a.dim());
  if (i == 0) {
    z = Matrix<F>::identity(f, bi * a.dim());
  } else {
    const auto& d = res->differential(i);
    z = d.cols() == 0 ? Matrix<F>::identity(f, bi * a.dim()) : kernel_basis(evaluate_on(d, a));
  }
  // Apply f blockwise.
  Matrix<F> fz(f, z.rows(), bi * b.dim());
  for (std::size_t r = 0; r < z.rows(); ++r)
    for (std::size_t blk = 0; blk < bi; ++blk) {
      Vec<F> part(z.row(r).begin() + blk * a.dim(), z.row(r).begin() + (blk + 1) * a.dim());
      auto img = map.matrix.apply(part);
      std::copy(img.begin(), img.end(), fz.row(r).begin() + blk * b.dim());
    }
  Subspace<F> boundaries(f, bi * b.dim());
  const auto& dn = res->differential(i + 1);
  if (dn.cols() > 0) boundaries = image_basis(evaluate_on(dn, b));
  return boundaries.sum(Subspace<F>::span(fz)).dim() - boundaries.dim();
}

// ---- complete resolutions ----

template <Field F>
bool has_free_summand(const FiniteModule<F>& m) {
  if (m.dim() == 0) return false;
  auto h = hom_over_R(m, regular_module(m.ring()));
  // Some map M -> R hits a unit exactly when R splits off.
  for (const auto& phi : h.maps)
    for (std::size_t j = 0; j < phi.cols(); ++j)
      if (!m.field().is_zero(phi(0, j))) return true;
  return false;
}

template <Field F>
CompleteResolutionView<F> complete_betti(const FiniteModule<F>& m, std::size_t s) {
  if (!ring_invariants(*m.ring()).gorenstein)
    throw PreconditionError("complete resolutions need a Gorenstein ring");
  CompleteResolutionView<F> v;
  v.from = -static_cast<long>(s);
  v.to = static_cast<long>(s);
  v.betti.assign(2 * s + 1, 0);
  FiniteModule<F> x = m;
  if (has_free_summand(m)) {
    x = resolve(m, 1)->syzygy_module(1);
    v.shift = 1;
  }
  if (x.dim() == 0) {
    v.free = true;
    v.glued = true;
    return v;
  }
  auto reg = regular_module(m.ring());
  auto dual = hom_over_R(x, reg).module;
  const long lo = v.from - static_cast<long>(v.shift), hi = v.to - static_cast<long>(v.shift);
  auto pos = poincare_trunc(x, hi > 0 ? static_cast<std::size_t>(hi) : 0);
  std::vector<std::size_t> neg;
  if (lo < 0) neg = poincare_trunc(dual, static_cast<std::size_t>(-lo - 1));
  for (long i = v.from; i <= v.to; ++i) {
    long j = i - static_cast<long>(v.shift);
    v.betti[static_cast<std::size_t>(i - v.from)] =
        j >= 0 ? pos[static_cast<std::size_t>(j)] : neg[static_cast<std::size_t>(-j - 1)];
  }
  v.glued = isomorphic(x, hom_over_R(dual, reg).module);
  return v;
}

// ---- Koszul numerics ----

std::vector<mpz_class> series_inverse(const std::vector<mpz_class>& s, std::size_t n) {
  if (s.empty() || (s[0] != 1 && s[0] != -1)) throw PreconditionError("series_inverse needs a unit constant term");
  std::vector<mpz_class> c(n + 1, 0);
  c[0] = s[0];  // 1/±1 = ±1
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class acc = 0;
    for (std::size_t j = 1; j <= k && j < s.size(); ++j) acc += s[j] * c[k - j];
    c[k] = -acc * s[0];
  }
  return c;
}

template <Field F>
KoszulReport koszul_test(const RingPtr<F>& r, std::size_t n) {
  if (n < 1) throw PreconditionError("koszul_test needs n >= 1");
  KoszulReport rep;
  auto h = hilbert(*r);
  std::vector<mpz_class> s;
  for (std::size_t j = 0; j < h.size(); ++j) s.push_back(j % 2 ? -mpz_class(h[j]) : mpz_class(h[j]));
  rep.expected = series_inverse(s, n);
  rep.betti = residue_betti(r, n);
  for (std::size_t i = 0; i <= n; ++i)
    if (rep.expected[i] != mpz_class(rep.betti[i])) {
      rep.consistent = false;
      rep.first_mismatch = i;
      break;
    }
  return rep;
}

#define ARTIN_INSTANTIATE_HOMOLOGY(F)                                                                   \
  template class Resolution<F>;                                                                         \
  template std::shared_ptr<Resolution<F>> resolve<F>(const FiniteModule<F>&, std::size_t);             \
  template std::vector<std::size_t> poincare_trunc<F>(const FiniteModule<F>&, std::size_t);            \
  template std::vector<std::size_t> betti_split<F>(const FiniteModule<F>&, std::size_t);               \
  template std::vector<std::size_t> residue_betti<F>(const RingPtr<F>&, std::size_t);                  \
  template std::size_t tor_dim<F>(const FiniteModule<F>&, const FiniteModule<F>&, std::size_t);        \
  template TorProfile<F> tor_profile<F>(const FiniteModule<F>&, const FiniteModule<F>&, std::size_t,   \
                                        std::size_t);                                                   \
  template std::size_t ext_dim<F>(const FiniteModule<F>&, const FiniteModule<F>&, std::size_t);        \
  template std::size_t ext_dim_direct<F>(const FiniteModule<F>&, const FiniteModule<F>&, std::size_t); \
  template std::vector<std::size_t> ext_profile<F>(const FiniteModule<F>&, const FiniteModule<F>&,     \
                                                   std::size_t, std::size_t);                           \
  template ModuleMap<F> max_ideal_inclusion<F>(const FiniteModule<F>&);                                 \
  template std::size_t tor_induced_k<F>(const ModuleMap<F>&, std::size_t);                              \
  template bool has_free_summand<F>(const FiniteModule<F>&);                                            \
  template CompleteResolutionView<F> complete_betti<F>(const FiniteModule<F>&, std::size_t);           \
  template KoszulReport koszul_test<F>(const RingPtr<F>&, std::size_t);

ARTIN_INSTANTIATE_HOMOLOGY(PrimeField)
ARTIN_INSTANTIATE_HOMOLOGY(RationalField)

}  // namespace artin
