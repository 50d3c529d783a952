#include <doctest.h>

#include "helpers.hpp"

using namespace artin;
using namespace testing_helpers;

namespace {

using Mod = FiniteModule<PrimeField>;

Mod cyclic(const RingPtr<PrimeField>& r, const std::string& entry) {
  return from_presentation(rmatrix(r, {{entry}}));
}

std::size_t mult_dim(const Mod& m, std::size_t j) { return msub(m, j).dim(); }

}  // namespace

TEST_CASE("free and regular modules") {
  auto r = ring({"x"}, {"x^3"});
  CHECK(free_module(r, 0).dim() == 0);
  auto reg = regular_module(r);
  CHECK(reg.dim() == 3);
  // Nilpotent Jordan block: x·1 = x, x·x = x², x·x² = 0.
  CHECK(reg.action(0) == Matrix<PrimeField>::from_ints(r->field(), {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
  auto agp = agp_ring();
  auto f2 = free_module(agp, 2);
  CHECK(f2.dim() == 16);
  CHECK(min_gens(f2) == 2);
  CHECK(f2.free_rank() == 2u);
}

TEST_CASE("residue field") {
  auto r = agp_ring();
  auto k = residue_field(r);
  CHECK(gamma(k) == 0);
  CHECK(min_gens(k) == 1);
  CHECK(socle(k).dim() == 1);
}

TEST_CASE("from_presentation") {
  auto r = ring({"x"}, {"x^3"});
  CHECK(from_presentation(rmatrix(r, {{"1"}})).dim() == 0);
  CHECK(cyclic(r, "x").dim() == 1);
  auto agp = agp_ring();
  auto m = agp_M(agp);
  CHECK(min_gens(m) == 2);
  CHECK(m.dim() == 8);
  // The checked constructor accepts the induced actions.
  CHECK_NOTHROW(Mod(agp, m.actions()));
}

TEST_CASE("checked constructor rejects bad actions") {
  auto r = ring({"x", "y"}, {"x^2", "y^2"});
  auto a = Matrix<PrimeField>::from_ints(r->field(), {{0, 0}, {1, 0}});
  auto b = Matrix<PrimeField>::from_ints(r->field(), {{0, 1}, {0, 0}});
  CHECK_THROWS_AS(Mod(r, {a, b}), InvariantError);
  auto id = Matrix<PrimeField>::identity(r->field(), 2);
  CHECK_THROWS_AS(Mod(r, {id, Matrix<PrimeField>(r->field(), 2, 2)}), InvariantError);
}

TEST_CASE("matlis dual and canonical module") {
  auto agp = agp_ring();
  auto k = residue_field(agp);
  CHECK(isomorphic(matlis_dual(k), k));
  auto w = canonical_module(agp);
  CHECK(w.dim() == 8);
  CHECK(min_gens(w) == 3);
  CHECK(socle(w).dim() == 1);

  auto ci = ring({"x", "y"}, {"x^2", "y^2"});
  CHECK(isomorphic(canonical_module(ci), regular_module(ci)));

  auto m2 = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  auto w2 = canonical_module(m2);
  CHECK(w2.dim() == 3);
  CHECK(min_gens(w2) == 2);
  CHECK(gamma(w2) == Rational(1, 2));

  // ν(M^∨) = dim Soc(M); M^∨∨ has the statistics of M.
  auto m = agp_M(agp);
  auto md = matlis_dual(m);
  CHECK(min_gens(md) == socle(m).dim());
  auto mdd = matlis_dual(md);
  CHECK(isomorphic(mdd, m));
}

TEST_CASE("gamma") {
  auto agp = agp_ring();
  CHECK(gamma(regular_module(agp)) == 7);
  CHECK(gamma(agp_M(agp)) == 3);
  CHECK_THROWS_AS(gamma(free_module(agp, 0)), UndefinedInputError);
  for (const auto& m : {agp_M(agp), canonical_module(agp), residue_field(agp), free_module(agp, 2)})
    CHECK(Rational(static_cast<long>(m.dim())) == Rational(static_cast<long>(min_gens(m))) * (gamma(m) + 1));
}

TEST_CASE("msub and quotient") {
  auto r = ring({"x", "y"}, {"x^3", "y^3"});
  CHECK(mult_dim(residue_field(r), 1) == 0);
  CHECK(mult_dim(regular_module(r), 1) == r->length() - 1);
  auto reg = regular_module(r);
  auto q = quotient_by(reg, msub(reg, 2));
  CHECK(mult_dim(q, 2) == 0);
  CHECK(q.dim() == 3);
  auto line = Subspace<PrimeField>::span(Matrix<PrimeField>::from_rows(r->field(), reg.dim(), {r->unit(1)}));
  CHECK_THROWS_AS(quotient_by(reg, line), InvariantError);
}

TEST_CASE("socle and k-summands") {
  auto agp = agp_ring();
  CHECK(k_summand(direct_sum(residue_field(agp), regular_module(agp))));
  CHECK_FALSE(k_summand(canonical_module(agp)));
  CHECK_FALSE(k_summand(regular_module(agp)));
  // m²M = 0 and no k-summand gives Soc(M) = mM.
  auto m = agp_M(agp);
  REQUIRE(mult_dim(m, 2) == 0);
  REQUIRE_FALSE(k_summand(m));
  CHECK(socle(m) == msub(m, 1));
}

TEST_CASE("tensor over R") {
  auto ci = ring({"x", "y"}, {"x^2", "y^2"});
  auto rx = cyclic(ci, "x");
  CHECK(tensor_over_R(rx, rx).dim() == 2);
  CHECK(tensor_over_R_naive(rx, rx).dim() == 2);
  auto agp = agp_ring();
  auto m = agp_M(agp);
  auto w = canonical_module(agp);
  CHECK(isomorphic(tensor_over_R(regular_module(agp), w), w));
  CHECK(tensor_over_R(residue_field(agp), w).dim() == min_gens(w));
  auto mw = tensor_over_R(m, w);
  CHECK(mw.dim() == tensor_over_R_naive(m, w).dim());
  CHECK(mw.dim() == tensor_over_R(w, m).dim());
  CHECK(min_gens(mw) == min_gens(m) * min_gens(w));
  CHECK(isomorphic(mw, tensor_over_R_naive(m, w)));
}

TEST_CASE("hom over R") {
  auto agp = agp_ring();
  auto w = canonical_module(agp);
  auto m = agp_M(agp);
  auto h = hom_over_R(w, w);
  CHECK(h.module.dim() == 8);
  CHECK(hom_dim_naive(w, w) == 8);
  CHECK(isomorphic(hom_over_R(regular_module(agp), m).module, m));
  auto k = residue_field(agp);
  CHECK(hom_over_R(k, k).module.dim() == 1);
  CHECK(hom_over_R(m, w).module.dim() == hom_dim_naive(m, w));
  for (const auto& f : hom_over_R(m, w).maps) CHECK((ModuleMap<PrimeField>{m, w, f}.is_linear()));
}

TEST_CASE("syzygy") {
  auto agp = agp_ring();
  CHECK(syzygy(free_module(agp, 2)).module.dim() == 0);
  auto m2 = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  auto sk = syzygy(residue_field(m2));
  CHECK(sk.module.dim() == 2);
  CHECK(mult_dim(sk.module, 1) == 0);
  auto s = syzygy(agp_M(agp));
  CHECK(s.presentation.rows() == 2);
  CHECK(s.presentation.cols() == 2);
  CHECK(s.presentation.is_minimal());
  CHECK(s.cover.is_linear());
  CHECK(min_gens(s.module) == 2);
  // The presentation really presents M.
  CHECK(isomorphic(from_presentation(minimal_presentation(agp_M(agp))), agp_M(agp)));
  // ψ presents the first syzygy up to isomorphism.
  auto psi = from_presentation(rmatrix(agp, {{"x2", "-x1"}, {"-x4", "x3"}}));
  CHECK(isomorphic(psi, s.module));
}

TEST_CASE("ring action") {
  auto agp = agp_ring();
  auto m = agp_M(agp);
  CHECK(ring_action(m, agp->one()) == Matrix<PrimeField>::identity(agp->field(), m.dim()));
  auto reg = regular_module(agp);
  for (std::size_t g = 0; g < 4; ++g)
    CHECK(ring_action(reg, agp->unit(1 + g)) == agp->multiplication_matrix(1 + g));
  for (std::size_t b = 0; b < agp->length(); ++b)
    CHECK(ring_action(reg, agp->unit(b)) == agp->multiplication_matrix(b));
}

TEST_CASE("wedge image") {
  auto r = ring({"x", "y"}, {"x^2", "y^2"});
  auto phi = rmatrix(r, {{"x", "y"}});
  auto ideal = wedge_image(phi);
  CHECK(ideal.dim() == 3);  // (x, y) = m
  auto id2 = rmatrix(r, {{"1", "0"}, {"0", "1"}});
  CHECK(wedge_image(id2).dim() == r->length());
  // Every element of the minor ideal annihilates coker φ when coker φ is faithful.
  auto agp = agp_ring();
  auto p = rmatrix(agp, {{"x3", "x1"}, {"x4", "x2"}});
  auto m = from_presentation(p);
  auto img = wedge_image(p);
  if (is_faithful(m))
    for (std::size_t i = 0; i < img.dim(); ++i) CHECK(ring_action(m, img.basis().row_vec(i)).is_zero());
  RMatrix<PrimeField> big(r, 9, 9);
  CHECK_THROWS_AS(wedge_image(big), PreconditionError);
}

TEST_CASE("exterior square") {
  auto r = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  auto k = residue_field(r);
  CHECK(exterior_square_R(k).wedge.dim() == 0);
  CHECK(exterior_square_R(regular_module(r)).wedge.dim() == 0);
  auto k2 = direct_sum(k, k);
  auto e = exterior_square_R(k2);
  CHECK(e.wedge.dim() == 1);
  CHECK(rank(e.iota.matrix) == 1);
  CHECK(e.iota.is_linear());
}

TEST_CASE("direct sum and random modules") {
  auto agp = agp_ring();
  auto m = agp_M(agp);
  auto zero = free_module(agp, 0);
  CHECK(isomorphic(direct_sum(m, zero), m));
  auto w = canonical_module(agp);
  CHECK(min_gens(direct_sum(m, w)) == min_gens(m) + min_gens(w));
  RandomModuleParams p;
  p.truncate_m2 = true;
  auto a = random_module(agp, 1, p);
  auto b = random_module(agp, 1, p);
  REQUIRE(a.dim() == b.dim());
  CHECK(a.actions() == b.actions());
  CHECK(mult_dim(a, 2) == 0);
}

TEST_CASE("faithfulness") {
  auto agp = agp_ring();
  CHECK(is_faithful(regular_module(agp)));
  CHECK(is_faithful(canonical_module(agp)));
  CHECK_FALSE(is_faithful(residue_field(agp)));
}

TEST_CASE("rational field modules") {
  auto r = make_ring(RationalField{}, parse_presentation({"x", "y"}, {"x^2", "y^2"}));
  auto w = canonical_module(r);
  CHECK(min_gens(w) == 1);
  CHECK(isomorphic(w, regular_module(r)));
  CHECK(tensor_over_R(w, w).dim() == tensor_over_R_naive(w, w).dim());
}
