#include <doctest.h>

#include "artin/homology.hpp"
#include "helpers.hpp"

using namespace artin;
using namespace testing_helpers;

namespace {

using Mod = FiniteModule<PrimeField>;

Mod cyclic(const RingPtr<PrimeField>& r, const std::string& entry) {
  return from_presentation(rmatrix(r, {{entry}}));
}

std::vector<std::size_t> powers(std::size_t base, std::size_t n) {
  std::vector<std::size_t> v{1};
  for (std::size_t i = 1; i <= n; ++i) v.push_back(v.back() * base);
  return v;
}

}  // namespace

TEST_CASE("resolve examples") {
  auto agp = agp_ring();
  auto free = resolve(free_module(agp, 2), 4);
  CHECK(free->terminated());
  CHECK(free->betti_list(4) == std::vector<std::size_t>{2, 0, 0, 0, 0});

  auto m2 = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  auto k = residue_field(m2);
  CHECK(resolve(k, 6)->betti_list(6) == powers(2, 6));

  auto m = agp_M(agp);
  CHECK(resolve(m, 12)->betti_list(12) == std::vector<std::size_t>(13, 2));
}

TEST_CASE("differentials compose to zero and lie in m") {
  auto agp = agp_ring();
  auto ci = ring({"x", "y"}, {"x^2", "y^2"});
  for (const auto& m : {agp_M(agp), canonical_module(agp), residue_field(ci), cyclic(ci, "x")}) {
    auto res = resolve(m, 5);
    for (std::size_t i = 1; i <= 5; ++i) CHECK(res->differential(i).is_minimal());
    for (std::size_t i = 2; i <= 5; ++i) CHECK((res->differential(i - 1) * res->differential(i)).is_zero());
    // Cokernel of δ_1 recovers M.
    CHECK(isomorphic(from_presentation(res->differential(1)), m));
    // b_i = ν(M_i).
    for (std::size_t i = 0; i <= 4; ++i) CHECK(min_gens(res->syzygy_module(i)) == res->betti(i));
  }
}

TEST_CASE("poincare_trunc") {
  auto m2 = ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  CHECK(poincare_trunc(residue_field(m2), 6) == powers(2, 6));
  auto agp = agp_ring();
  CHECK(poincare_trunc(agp_M(agp), 8) == std::vector<std::size_t>(9, 2));
  CHECK(poincare_trunc(regular_module(agp), 5) == std::vector<std::size_t>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("split Betti route agrees with resolutions") {
  auto rings = {agp_ring(), ring({"x", "y"}, {"x^2", "y^2"}), ring({"x", "y"}, {"x^3", "x*y", "y^2"}),
                ring({"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y", "y*z"})};
  std::uint64_t seed = 1;
  for (const auto& r : rings) {
    for (int t = 0; t < 4; ++t) {
      RandomModuleParams p;
      p.truncate_m2 = t % 2 == 0;
      auto m = random_module(r, seed++, p);
      auto direct = resolve(m, 4)->betti_list(4);
      CHECK(betti_split(m, 4) == direct);
    }
    auto k = residue_field(r);
    CHECK(residue_betti(r, 4) == resolve(k, 4)->betti_list(4));
  }
}

TEST_CASE("tor examples") {
  auto agp = agp_ring();
  auto w = canonical_module(agp);
  auto m = agp_M(agp);
  auto reg = regular_module(agp);
  for (std::size_t i = 1; i <= 4; ++i) CHECK(tor_dim(reg, w, i) == 0);
  auto k = residue_field(agp);
  CHECK(tor_dim(k, k, 1) == 4);
  CHECK(tor_dim(m, w, 0) == tensor_over_R(m, w).dim());
  auto prof = tor_profile(m, w, 12);
  CHECK(prof.all_zero());
  CHECK(prof.dims.size() == 12);

  auto ci = ring({"x", "y"}, {"x^2", "y^2"});
  auto rx = cyclic(ci, "x");
  for (std::size_t i = 1; i <= 8; ++i) CHECK(tor_dim(rx, rx, i) == 2);
}

TEST_CASE("tor symmetry and ext duality on random modules") {
  auto rings = {ring({"x", "y"}, {"x^2", "y^2"}), ring({"x", "y"}, {"x^2", "x*y", "y^3"}), agp_ring()};
  std::uint64_t seed = 100;
  for (const auto& r : rings)
    for (int t = 0; t < 3; ++t) {
      RandomModuleParams p;
      p.max_gens = 2;
      auto a = random_module(r, seed++, p);
      auto b = random_module(r, seed++, p);
      for (std::size_t i = 0; i <= 3; ++i) {
        CHECK(tor_dim(a, b, i) == tor_dim(b, a, i));
        CHECK(ext_dim(a, b, i) == ext_dim_direct(a, b, i));
      }
      CHECK(ext_dim(a, b, 0) == hom_over_R(a, b).module.dim());
    }
}

TEST_CASE("ext examples") {
  auto agp = agp_ring();
  auto m = agp_M(agp);
  auto reg = regular_module(agp);
  for (std::size_t i = 1; i <= 12; ++i) CHECK(ext_dim(m, reg, i) == 0);
  auto k = residue_field(agp);
  auto bk = poincare_trunc(k, 3);
  for (std::size_t i = 0; i <= 3; ++i) {
    CHECK(ext_dim(k, k, i) == bk[i]);
    CHECK(ext_dim_direct(k, k, i) == bk[i]);
  }
}

TEST_CASE("tor_induced_k") {
  auto ci = ring({"x", "y"}, {"x^2", "y^2"});
  auto rx = cyclic(ci, "x");
  ModuleMap<PrimeField> id{rx, rx, Matrix<PrimeField>::identity(ci->field(), rx.dim())};
  auto k = residue_field(ci);
  for (std::size_t i = 0; i <= 3; ++i) CHECK(tor_induced_k(id, i) == tor_dim(k, rx, i));
  ModuleMap<PrimeField> zero{rx, rx, Matrix<PrimeField>(ci->field(), rx.dim(), rx.dim())};
  CHECK(tor_induced_k(zero, 1) == 0);
  // AGP: the inclusion mω₁ -> ω₁ is zero on Tor(k, -) in low degrees.
  auto agp = agp_ring();
  auto w1 = resolve(canonical_module(agp), 1)->syzygy_module(1);
  auto mu = max_ideal_inclusion(w1);
  CHECK(mu.is_linear());
  CHECK(tor_induced_k(mu, 0) == 0);
}

TEST_CASE("complete resolutions") {
  auto ci = ring({"x", "y"}, {"x^2", "y^2"});
  auto rx = cyclic(ci, "x");
  auto v = complete_betti(rx, 5);
  CHECK(v.betti == std::vector<std::size_t>(11, 1));
  CHECK(v.glued);
  auto fv = complete_betti(regular_module(ci), 3);
  CHECK(fv.free);
  CHECK(fv.betti == std::vector<std::size_t>(7, 0));
  auto res = resolve(rx, 6);
  for (std::size_t j = 0; j <= 4; ++j) CHECK(isomorphic(res->syzygy_module(j), res->syzygy_module(j + 2)));
  CHECK_THROWS_AS(complete_betti(residue_field(agp_ring()), 2), PreconditionError);
  // A free summand shifts by one syzygy.
  auto mixed = direct_sum(rx, regular_module(ci));
  CHECK(has_free_summand(mixed));
  CHECK_FALSE(has_free_summand(rx));
  CHECK(complete_betti(mixed, 3).betti == std::vector<std::size_t>(7, 1));
}

TEST_CASE("koszul test") {
  for (auto r : {ring({"x", "y"}, {"x^2", "x*y", "y^2"}), ring({"x", "y", "z"}, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}),
                 ring({"x", "y"}, {"x^2", "y^2"})}) {
    auto rep = koszul_test(r, 10);
    CHECK(rep.consistent);
  }
  auto cubic = ring({"x"}, {"x^3"});
  auto rep = koszul_test(cubic, 10);
  CHECK_FALSE(rep.consistent);
  REQUIRE(rep.first_mismatch);
  CHECK(*rep.first_mismatch == 2);
  CHECK(series_inverse({1, -1, 1}, 4) == std::vector<mpz_class>{1, 1, 0, -1, -1});
}
