#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "artin/module.hpp"

namespace artin {

/// Minimal free resolution, extended on demand. Syzygies are kept embedded in the free
/// modules: K_i ⊆ R^{b_{i-1}} for i >= 1, K_0 = M.
template <Field F>
class Resolution {
 public:
  explicit Resolution(FiniteModule<F> m);

  const FiniteModule<F>& module() const { return module_; }
  /// Computes b_0..b_n (and δ_1..δ_n). Stops early once a syzygy vanishes.
  void extend_to(std::size_t n);
  /// Index of the last computed Betti number.
  std::size_t computed() const { return betti_.size() - 1; }
  /// Some b_i = 0 was reached: M has finite projective dimension, hence is free.
  bool terminated() const { return terminated_; }
  /// b_i, 0 beyond termination. Requires i <= computed() unless terminated.
  std::size_t betti(std::size_t i) const;
  std::vector<std::size_t> betti_list(std::size_t n);
  /// δ_i : R^{b_i} -> R^{b_{i-1}}, i >= 1.
  const RMatrix<F>& differential(std::size_t i);
  /// M_i as an abstract module (built on first request).
  const FiniteModule<F>& syzygy_module(std::size_t i);

 private:
  void step();

  FiniteModule<F> module_;
  RingPtr<F> ring_;
  std::vector<std::size_t> betti_;
  std::deque<RMatrix<F>> deltas_;         // deltas_[i-1] = δ_i
  std::deque<Subspace<F>> embeddings_;    // embeddings_[i] = K_i ⊆ R^{b_{i-1}}, i >= 1
  std::deque<std::optional<FiniteModule<F>>> syzygies_;
  bool terminated_ = false;
  std::size_t pending_ = 0;  // index of the next syzygy to process
  std::mutex mutex_;
};

/// Cached resolution of M computed through index n (shared per module identity).
template <Field F>
std::shared_ptr<Resolution<F>> resolve(const FiniteModule<F>& m, std::size_t n);
void clear_resolution_cache();

/// [b_0..b_n].
template <Field F>
std::vector<std::size_t> poincare_trunc(const FiniteModule<F>& m, std::size_t n);
/// Betti numbers by splitting off residue-field summands: b(k^d ⊕ M') = d·b(k) + b(M'),
/// with b(k) = [1] followed by b(m). Avoids resolving the k-summands explicitly.
template <Field F>
std::vector<std::size_t> betti_split(const FiniteModule<F>& m, std::size_t n);
template <Field F>
std::vector<std::size_t> residue_betti(const RingPtr<F>& r, std::size_t n);

template <Field F>
std::size_t tor_dim(const FiniteModule<F>& m, const FiniteModule<F>& n, std::size_t i);

template <Field F>
struct TorProfile {
  std::size_t from = 1;
  std::size_t to = 0;
  std::vector<std::size_t> dims;  // dims[i - from]
  bool left_free = false;         // left resolution terminated within the window
  bool all_zero() const {
    for (auto d : dims)
      if (d) return false;
    return true;
  }
  std::optional<std::size_t> first_nonzero() const {
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (dims[i]) return from + i;
    return std::nullopt;
  }
};

/// Tor_i(M, N) for from <= i <= to.
template <Field F>
TorProfile<F> tor_profile(const FiniteModule<F>& m, const FiniteModule<F>& n, std::size_t to,
                          std::size_t from = 1);

/// Ext^i(M, N) via Tor_i(M, N^∨).
template <Field F>
std::size_t ext_dim(const FiniteModule<F>& m, const FiniteModule<F>& n, std::size_t i);
/// Ext^i(M, N) from the complex Hom(F_•, N).
template <Field F>
std::size_t ext_dim_direct(const FiniteModule<F>& m, const FiniteModule<F>& n, std::size_t i);
template <Field F>
std::vector<std::size_t> ext_profile(const FiniteModule<F>& m, const FiniteModule<F>& n, std::size_t to,
                                     std::size_t from = 1);

/// Rank of Tor_i(k, f) for an R-linear f : A -> B.
template <Field F>
std::size_t tor_induced_k(const ModuleMap<F>& f, std::size_t i);
/// Inclusion mN -> N.
template <Field F>
ModuleMap<F> max_ideal_inclusion(const FiniteModule<F>& n);

template <Field F>
struct CompleteResolutionView {
  long from = 0;
  long to = 0;
  std::vector<std::size_t> betti;  // betti[i - from]
  std::size_t shift = 0;           // 1 when M was replaced by its first syzygy
  bool free = false;               // M free: the complete resolution is zero
  bool glued = false;              // M (or its syzygy) ≅ its double R-dual
  std::size_t at(long i) const { return betti[static_cast<std::size_t>(i - from)]; }
};

/// Betti numbers of the complete resolution on [-s, s]. Requires a Gorenstein ring.
template <Field F>
CompleteResolutionView<F> complete_betti(const FiniteModule<F>& m, std::size_t s);

/// M has a free summand: some map M -> R hits a unit.
template <Field F>
bool has_free_summand(const FiniteModule<F>& m);

struct KoszulReport {
  bool consistent = true;
  std::optional<std::size_t> first_mismatch;
  std::vector<mpz_class> expected;  // coefficients of Hilb_R(-t)^{-1}
  std::vector<std::size_t> betti;   // b_i(k)
};

/// Compares P_k(t) with Hilb_R(-t)^{-1} through degree n.
template <Field F>
KoszulReport koszul_test(const RingPtr<F>& r, std::size_t n);

/// Coefficients of a power-series inverse through degree n (leading coefficient ±1).
std::vector<mpz_class> series_inverse(const std::vector<mpz_class>& s, std::size_t n);

}  // namespace artin
