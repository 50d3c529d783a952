#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/field.hpp"
#include "artin/matrix.hpp"
#include "artin/poly.hpp"

namespace artin {

/// k[x_1..x_e]/(relations), relations homogeneous of degree >= 2.
struct RingPresentation {
  std::vector<std::string> vars;
  std::vector<Polynomial> relations;
};

struct RingInvariants {
  std::size_t e = 0;       // embedding dimension, dim R_1
  std::size_t length = 0;  // λ(R)
  std::size_t loewy = 0;   // h, largest d with R_d != 0
  std::size_t type = 0;    // a = dim Soc(R)
  std::size_t r = 0;       // ν(m²) = dim R_2
  bool gorenstein = false;
};

/// Standard graded Artinian k-algebra with an explicit monomial basis and
/// multiplication table. Basis element 0 is 1; elements 1..e are x_1..x_e.
template <Field F>
class GradedRing {
 public:
  using Elem = typename F::Elem;

  const F& field() const { return field_; }
  const RingPresentation& presentation() const { return presentation_; }
  std::size_t num_vars() const { return presentation_.vars.size(); }
  std::size_t length() const { return basis_.size(); }
  std::size_t loewy_length() const { return loewy_; }

  const std::vector<Exponent>& basis() const { return basis_; }
  std::size_t degree_of(std::size_t i) const { return total_degree(basis_[i]); }
  /// Basis indices of degree d are [degree_begin(d), degree_begin(d+1)).
  std::size_t degree_begin(std::size_t d) const {
    return d < degree_offsets_.size() ? degree_offsets_[d] : basis_.size();
  }
  std::size_t degree_dim(std::size_t d) const { return degree_begin(d + 1) - degree_begin(d); }
  std::optional<std::size_t> basis_index(const Exponent& e) const;
  std::size_t generator_index(std::size_t g) const { return 1 + g; }

  Vec<F> zero() const { return Vec<F>(length(), field_.zero()); }
  Vec<F> unit(std::size_t i) const {
    Vec<F> v = zero();
    v[i] = field_.one();
    return v;
  }
  Vec<F> one() const { return unit(0); }

  /// Coordinates of a monomial; zero above the Loewy length.
  Vec<F> monomial_normal_form(const Exponent& e) const;
  Vec<F> normal_form(const Polynomial& p) const;

  /// Sparse product of basis elements i and j.
  const std::vector<std::pair<std::size_t, Elem>>& product(std::size_t i, std::size_t j) const {
    return products_[i * length() + j];
  }
  Vec<F> multiply(const Vec<F>& a, const Vec<F>& b) const;
  /// Matrix of multiplication by basis element i on R (column j = b_i * b_j).
  const Matrix<F>& multiplication_matrix(std::size_t i) const { return mult_matrices_[i]; }
  Matrix<F> multiplication_matrix(const Vec<F>& r) const;

  /// A ring element back as a polynomial in the standard monomials. Over Q the
  /// coefficients are scaled by `scale` (a common denominator) first.
  Polynomial to_polynomial(const Vec<F>& r, const mpz_class& scale = 1) const;

 private:
  template <Field G>
  friend GradedRing<G> build_ring(const G&, const RingPresentation&, std::size_t, std::size_t);

  F field_{};
  RingPresentation presentation_;
  std::vector<Exponent> basis_;
  std::vector<std::size_t> degree_offsets_;
  std::size_t loewy_ = 0;
  std::map<Exponent, Vec<F>> normal_forms_;
  std::map<Exponent, std::size_t> index_;
  std::vector<std::vector<std::pair<std::size_t, Elem>>> products_;
  std::vector<Matrix<F>> mult_matrices_;
};

template <Field F>
using RingPtr = std::shared_ptr<const GradedRing<F>>;

/// Builds R degree by degree: R_d = (monomials of degree d) / I_d with I_d computed by
/// row reduction, columns in graded-lex descending order so the pivots are leading
/// monomials. Throws PresentationError for malformed relations and NotArtinianError when
/// R_{degree_cap} != 0 or λ(R) exceeds length_cap.
template <Field F>
GradedRing<F> build_ring(const F& field, const RingPresentation& p, std::size_t degree_cap = 30,
                         std::size_t length_cap = 4096);

template <Field F>
RingPtr<F> make_ring(const F& field, const RingPresentation& p, std::size_t degree_cap = 30,
                     std::size_t length_cap = 4096) {
  return std::make_shared<const GradedRing<F>>(build_ring(field, p, degree_cap, length_cap));
}

template <Field F>
std::vector<std::size_t> hilbert(const GradedRing<F>& r);

template <Field F>
Subspace<F> socle_ring(const GradedRing<F>& r);

template <Field F>
RingInvariants ring_invariants(const GradedRing<F>& r);

/// Presentation helper: parses relation strings against the given variable names.
RingPresentation parse_presentation(const std::vector<std::string>& vars,
                                    const std::vector<std::string>& relations);

}  // namespace artin
