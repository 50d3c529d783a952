#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "artin/errors.hpp"
#include "artin/matrix.hpp"
#include "artin/ring.hpp"

namespace artin {

/// Matrix of ring elements; each entry is a coordinate vector in the ring basis.
template <Field F>
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(RingPtr<F> ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_->zero()) {}

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Vec<F>& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Vec<F>& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Every entry lies in m (zero constant term).
  bool is_minimal() const;
  bool is_zero() const;
  RMatrix operator*(const RMatrix& o) const;
  /// The k-linear map R^cols -> R^rows, component-major coordinates (r * λ(R) + basis index).
  Matrix<F> realize() const;

 private:
  RingPtr<F> ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Vec<F>> entries_;
};

/// Finite-length R-module: a k-vector space with one action matrix per ring generator.
/// Column convention: x_g * v = actions[g] * v.
template <Field F>
class FiniteModule {
 public:
  FiniteModule() = default;
  /// Validates commutativity and the ring relations; throws InvariantError otherwise.
  FiniteModule(RingPtr<F> ring, std::vector<Matrix<F>> actions, std::optional<std::size_t> free_rank = {});
  static FiniteModule unchecked(RingPtr<F> ring, std::size_t dim, std::vector<Matrix<F>> actions,
                                std::optional<std::size_t> free_rank = {});

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix<F>>& actions() const { return actions_; }
  const Matrix<F>& action(std::size_t g) const { return actions_[g]; }
  std::optional<std::size_t> free_rank() const { return free_rank_; }
  /// Identity shared by copies; keys the resolution cache.
  std::uint64_t id() const { return state_->id; }
  /// ρ(b) for every ring basis element b, computed once per module.
  const std::vector<Matrix<F>>& basis_actions() const;

 private:
  struct State {
    std::uint64_t id;
    std::once_flag once;
    std::vector<Matrix<F>> basis_actions;
  };
  RingPtr<F> ring_;
  std::size_t dim_ = 0;
  std::vector<Matrix<F>> actions_;
  std::optional<std::size_t> free_rank_;
  std::shared_ptr<State> state_;
};

template <Field F>
struct ModuleMap {
  FiniteModule<F> source;
  FiniteModule<F> target;
  Matrix<F> matrix;  // target.dim x source.dim
  bool is_linear() const;
};

template <Field F>
void require_same_ring(const FiniteModule<F>& a, const FiniteModule<F>& b);

template <Field F>
FiniteModule<F> free_module(const RingPtr<F>& r, std::size_t n);
template <Field F>
FiniteModule<F> regular_module(const RingPtr<F>& r) { return free_module(r, 1); }
template <Field F>
FiniteModule<F> residue_field(const RingPtr<F>& r);
template <Field F>
FiniteModule<F> from_presentation(const RMatrix<F>& p);
template <Field F>
FiniteModule<F> matlis_dual(const FiniteModule<F>& m);
template <Field F>
FiniteModule<F> canonical_module(const RingPtr<F>& r) { return matlis_dual(regular_module(r)); }
template <Field F>
FiniteModule<F> direct_sum(const FiniteModule<F>& a, const FiniteModule<F>& b);

template <Field F>
std::size_t length(const FiniteModule<F>& m) { return m.dim(); }
template <Field F>
std::size_t min_gens(const FiniteModule<F>& m);
/// γ(M) = λ(M)/ν(M) − 1; throws UndefinedInputError for M = 0.
template <Field F>
Rational gamma(const FiniteModule<F>& m);

/// m^j M.
template <Field F>
Subspace<F> msub(const FiniteModule<F>& m, std::size_t j);
template <Field F>
Subspace<F> socle(const FiniteModule<F>& m);
template <Field F>
bool k_summand(const FiniteModule<F>& m);
/// Smallest submodule containing the rows of `gens`.
template <Field F>
Subspace<F> submodule_generated(const FiniteModule<F>& m, const Matrix<F>& gens);
template <Field F>
bool is_submodule(const FiniteModule<F>& m, const Subspace<F>& s);
/// Restricted actions in the coordinates of s (s must be action-closed).
template <Field F>
FiniteModule<F> submodule(const FiniteModule<F>& m, const Subspace<F>& s);
template <Field F>
FiniteModule<F> quotient_by(const FiniteModule<F>& m, const Subspace<F>& s);

/// Unit vectors lifting the echelon basis of M/mM (one row per generator).
template <Field F>
Matrix<F> minimal_generators(const FiniteModule<F>& m);

/// Matrix of the action of a ring element on M.
template <Field F>
Matrix<F> ring_action(const FiniteModule<F>& m, const Vec<F>& r);
/// Block matrix with block (i, j) = ρ_N(P(i, j)).
template <Field F>
Matrix<F> evaluate_on(const RMatrix<F>& p, const FiniteModule<F>& n, bool transpose_blocks = false);

/// Surjection R^ν -> M sending free generator r to the r-th minimal generator, plus a
/// k-linear section (π · section = identity).
template <Field F>
struct Cover {
  std::size_t rank = 0;
  Matrix<F> pi;
  Matrix<F> section;
};
template <Field F>
Cover<F> cover(const FiniteModule<F>& m);

template <Field F>
struct Syzygy {
  FiniteModule<F> module;   // M_1 in the coordinates of its embedding in R^ν
  ModuleMap<F> cover;       // R^ν -> M
  RMatrix<F> presentation;  // ν x b_1, columns are minimal generators of M_1
};
template <Field F>
Syzygy<F> syzygy(const FiniteModule<F>& m);

/// Minimal presentation ν(M) x b_1(M) with coker ≅ M.
template <Field F>
RMatrix<F> minimal_presentation(const FiniteModule<F>& m);

template <Field F>
FiniteModule<F> tensor_over_R(const FiniteModule<F>& m, const FiniteModule<F>& n);
/// (M ⊗_k N)/W with W spanned by x_g u ⊗ v − u ⊗ x_g v; slow reference construction.
template <Field F>
FiniteModule<F> tensor_over_R_naive(const FiniteModule<F>& m, const FiniteModule<F>& n);

template <Field F>
struct HomModule {
  FiniteModule<F> module;
  /// k-linear map M -> N for each basis element of the Hom module.
  std::vector<Matrix<F>> maps;
  Matrix<F> map_of(const Vec<F>& coords) const;
};
template <Field F>
HomModule<F> hom_over_R(const FiniteModule<F>& m, const FiniteModule<F>& n);
/// Solves F A^M_g = A^N_g F directly; reference for hom_over_R.
template <Field F>
std::size_t hom_dim_naive(const FiniteModule<F>& m, const FiniteModule<F>& n);

/// R-span of the n x n minors of phi (n = rows); refuses n > 8.
template <Field F>
Subspace<F> wedge_image(const RMatrix<F>& phi);
template <Field F>
Subspace<F> ideal_generated(const RingPtr<F>& r, const Matrix<F>& gens);

template <Field F>
struct ExteriorSquare {
  FiniteModule<F> wedge;   // Λ²_R(M)
  FiniteModule<F> tensor;  // M ⊗_R M (relator-span model)
  ModuleMap<F> iota;       // x∧y -> x⊗y − y⊗x
};
template <Field F>
ExteriorSquare<F> exterior_square_R(const FiniteModule<F>& m);

template <Field F>
bool is_faithful(const FiniteModule<F>& m);
/// Searches Hom(A, B) with seeded random elements for an isomorphism. A true result is
/// certified; false means none was found in `tries` attempts after invariants matched.
template <Field F>
bool isomorphic(const FiniteModule<F>& a, const FiniteModule<F>& b, std::uint64_t seed = 1,
                int tries = 12);

struct RandomModuleParams {
  std::size_t min_gens = 1;
  std::size_t max_gens = 3;
  std::size_t min_relations = 1;
  std::size_t max_relations = 4;
  std::size_t min_degree = 1;
  std::size_t max_degree = 1;
  bool truncate_m2 = false;  // quotient by m²M afterwards
};
template <Field F>
FiniteModule<F> random_module(const RingPtr<F>& r, std::uint64_t seed, const RandomModuleParams& p = {});
template <Field F>
RMatrix<F> random_presentation(const RingPtr<F>& r, std::uint64_t seed, const RandomModuleParams& p);

}  // namespace artin
