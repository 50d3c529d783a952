#include "artin/ring.hpp"

#include <algorithm>
#include <set>

namespace artin {

template <Field F>
std::optional<std::size_t> GradedRing<F>::basis_index(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <Field F>
Vec<F> GradedRing<F>::monomial_normal_form(const Exponent& e) const {
  if (e.size() != num_vars()) throw DimensionError("monomial has wrong number of variables");
  if (total_degree(e) > loewy_) return zero();
  return normal_forms_.at(e);
}

template <Field F>
Vec<F> GradedRing<F>::normal_form(const Polynomial& p) const {
  if (p.num_vars() != num_vars()) throw DimensionError("polynomial has wrong number of variables");
  Vec<F> out = zero();
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) > loewy_) continue;
    axpy(field_, field_.from_int(c), normal_forms_.at(e), out);
  }
  return out;
}

template <Field F>
Vec<F> GradedRing<F>::multiply(const Vec<F>& a, const Vec<F>& b) const {
  const std::size_t n = length();
  Vec<F> out = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (field_.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (field_.is_zero(b[j])) continue;
      auto ab = field_.mul(a[i], b[j]);
      for (const auto& [w, c] : products_[i * n + j]) out[w] = field_.add(out[w], field_.mul(ab, c));
    }
  }
  return out;
}

template <Field F>
Matrix<F> GradedRing<F>::multiplication_matrix(const Vec<F>& r) const {
  Matrix<F> m(field_, length(), length());
  for (std::size_t i = 0; i < length(); ++i) {
    if (field_.is_zero(r[i])) continue;
    m = m + mult_matrices_[i].scaled(r[i]);
  }
  return m;
}

template <Field F>
Polynomial GradedRing<F>::to_polynomial(const Vec<F>& r, const mpz_class& scale) const {
  Polynomial p(num_vars());
  for (std::size_t i = 0; i < length(); ++i) {
    if (field_.is_zero(r[i])) continue;
    if constexpr (std::is_same_v<F, RationalField>) {
      mpq_class c = r[i] * scale;
      if (c.get_den() != 1) throw DimensionError("to_polynomial: scale does not clear denominators");
      p.add_term(basis_[i], c.get_num());
    } else {
      p.add_term(basis_[i], mpz_class(static_cast<long>(field_.to_signed(r[i]))) * scale);
    }
  }
  return p;
}

template <Field F>
GradedRing<F> build_ring(const F& field, const RingPresentation& p, std::size_t degree_cap,
                         std::size_t length_cap) {
  const std::size_t n = p.vars.size();
  if (n == 0) throw PresentationError("ring needs at least one generator");
  {
    std::set<std::string> seen(p.vars.begin(), p.vars.end());
    if (seen.size() != n) throw PresentationError("duplicate variable names");
  }
  if (degree_cap < 2) throw PresentationError("degree cap must be at least 2");

  // Relations reduced into the field, grouped by degree.
  std::map<std::size_t, std::vector<std::map<Exponent, typename F::Elem>>> rels_by_degree;
  for (const auto& rel : p.relations) {
    if (rel.num_vars() != n) throw PresentationError("relation has wrong number of variables");
    std::map<Exponent, typename F::Elem> reduced;
    for (const auto& [e, c] : rel.terms()) {
      auto x = field.from_int(c);
      if (!field.is_zero(x)) reduced.emplace(e, x);
    }
    if (reduced.empty()) continue;
    std::size_t d = total_degree(reduced.begin()->first);
    for (const auto& [e, c] : reduced) {
      if (total_degree(e) != d) throw PresentationError("relation is not homogeneous");
    }
    if (d < 2) throw PresentationError("relations must have degree at least 2");
    rels_by_degree[d].push_back(std::move(reduced));
  }

  GradedRing<F> ring;
  ring.field_ = field;
  ring.presentation_ = p;

  // Per-degree data: monomial list, index map, reduced rows of I_d, pivot flags.
  std::vector<Exponent> prev_monos;
  Matrix<F> prev_rows(field, 0, 0);

  std::vector<std::vector<Exponent>> std_monos;   // standard monomials per degree
  std::vector<std::vector<Exponent>> all_monos;   // all monomials per degree
  std::vector<Echelon<F>> ideal_rows;             // reduced I_d per degree
  std::size_t h = 0;
  std::size_t total = 0;

  for (std::size_t d = 0;; ++d) {
    if (d >= degree_cap)
      throw NotArtinianError("R_" + std::to_string(d) + " is nonzero at the degree cap " +
                             std::to_string(degree_cap));
    auto monos = monomials_of_degree(n, d);
    std::map<Exponent, std::size_t> col;
    for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;

    Matrix<F> rows(field, 0, monos.size());
    if (d >= 2) {
      Vec<F> buf(monos.size());
      // x_g * I_{d-1}
      for (std::size_t r = 0; r < prev_rows.rows(); ++r) {
        for (std::size_t g = 0; g < n; ++g) {
          std::fill(buf.begin(), buf.end(), field.zero());
          for (std::size_t c = 0; c < prev_monos.size(); ++c) {
            const auto& x = prev_rows(r, c);
            if (field.is_zero(x)) continue;
            Exponent e = prev_monos[c];
            ++e[g];
            buf[col.at(e)] = x;
          }
          rows.append_row(buf);
        }
      }
      if (auto it = rels_by_degree.find(d); it != rels_by_degree.end()) {
        for (const auto& rel : it->second) {
          std::fill(buf.begin(), buf.end(), field.zero());
          for (const auto& [e, c] : rel) buf[col.at(e)] = c;
          rows.append_row(buf);
        }
      }
    }
    auto ech = rref(std::move(rows));
    std::vector<char> is_pivot(monos.size(), 0);
    for (auto pc : ech.pivots) is_pivot[pc] = 1;
    std::vector<Exponent> standard;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (!is_pivot[c]) standard.push_back(monos[c]);

    if (standard.empty()) {
      h = d - 1;
      break;
    }
    total += standard.size();
    if (total > length_cap)
      throw NotArtinianError("length exceeds " + std::to_string(length_cap) + " by degree " +
                             std::to_string(d));
    std_monos.push_back(standard);
    all_monos.push_back(monos);
    prev_rows = ech.reduced;
    prev_monos = monos;
    ideal_rows.push_back(std::move(ech));
  }

  ring.loewy_ = h;
  for (std::size_t d = 0; d <= h; ++d) {
    ring.degree_offsets_.push_back(ring.basis_.size());
    for (const auto& e : std_monos[d]) {
      ring.index_[e] = ring.basis_.size();
      ring.basis_.push_back(e);
    }
  }
  ring.degree_offsets_.push_back(ring.basis_.size());
  const std::size_t len = ring.basis_.size();

  for (std::size_t d = 0; d <= h; ++d) {
    const auto& monos = all_monos[d];
    const auto& ech = ideal_rows[d];
    std::vector<long> pivot_row(monos.size(), -1);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) pivot_row[ech.pivots[i]] = static_cast<long>(i);
    for (std::size_t c = 0; c < monos.size(); ++c) {
      Vec<F> nf(len, field.zero());
      if (pivot_row[c] < 0) {
        nf[ring.index_.at(monos[c])] = field.one();
      } else {
        auto r = static_cast<std::size_t>(pivot_row[c]);
        for (std::size_t f = 0; f < monos.size(); ++f) {
          if (pivot_row[f] >= 0) continue;
          const auto& x = ech.reduced(r, f);
          if (!field.is_zero(x)) nf[ring.index_.at(monos[f])] = field.neg(x);
        }
      }
      ring.normal_forms_.emplace(monos[c], std::move(nf));
    }
  }

  ring.products_.assign(len * len, {});
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < len; ++j) {
      Exponent e = ring.basis_[i];
      for (std::size_t k = 0; k < n; ++k) e[k] += ring.basis_[j][k];
      if (total_degree(e) > h) continue;
      const auto& nf = ring.normal_forms_.at(e);
      for (std::size_t w = 0; w < len; ++w)
        if (!field.is_zero(nf[w])) ring.products_[i * len + j].emplace_back(w, nf[w]);
    }
  ring.mult_matrices_.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    Matrix<F> m(field, len, len);
    for (std::size_t j = 0; j < len; ++j)
      for (const auto& [w, c] : ring.products_[i * len + j]) m(w, j) = c;
    ring.mult_matrices_.push_back(std::move(m));
  }
  return ring;
}

template <Field F>
std::vector<std::size_t> hilbert(const GradedRing<F>& r) {
  std::vector<std::size_t> h;
  for (std::size_t d = 0; d <= r.loewy_length(); ++d) h.push_back(r.degree_dim(d));
  return h;
}

template <Field F>
Subspace<F> socle_ring(const GradedRing<F>& r) {
  const std::size_t n = r.length();
  Matrix<F> stacked(r.field(), 0, n);
  for (std::size_t g = 0; g < r.num_vars(); ++g) {
    const auto& m = r.multiplication_matrix(r.generator_index(g));
    for (std::size_t i = 0; i < n; ++i) stacked.append_row(m.row(i));
  }
  return Subspace<F>::span(kernel_basis(stacked));
}

template <Field F>
RingInvariants ring_invariants(const GradedRing<F>& r) {
  RingInvariants inv;
  inv.e = r.num_vars();
  inv.length = r.length();
  inv.loewy = r.loewy_length();
  inv.type = socle_ring(r).dim();
  inv.r = r.loewy_length() >= 2 ? r.degree_dim(2) : 0;
  inv.gorenstein = inv.type == 1;
  return inv;
}

RingPresentation parse_presentation(const std::vector<std::string>& vars,
                                    const std::vector<std::string>& relations) {
  RingPresentation p;
  p.vars = vars;
  for (const auto& s : relations) p.relations.push_back(parse_polynomial(s, vars));
  return p;
}

#define ARTIN_INSTANTIATE_RING(F)                                                          \
  template class GradedRing<F>;                                                            \
  template GradedRing<F> build_ring<F>(const F&, const RingPresentation&, std::size_t,     \
                                       std::size_t);                                       \
  template std::vector<std::size_t> hilbert<F>(const GradedRing<F>&);                      \
  template Subspace<F> socle_ring<F>(const GradedRing<F>&);                                \
  template RingInvariants ring_invariants<F>(const GradedRing<F>&);

ARTIN_INSTANTIATE_RING(PrimeField)
ARTIN_INSTANTIATE_RING(RationalField)

}  // namespace artin
