#include <doctest.h>

#include "artin/matrix.hpp"
#include "artin/random.hpp"

using namespace artin;

namespace {

PrimeField gf{101};

Matrix<PrimeField> random_matrix(Rng& rng, std::size_t r, std::size_t c, unsigned sparsity = 0) {
  Matrix<PrimeField> m(gf, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (sparsity == 0 || rng.below(sparsity) == 0) m(i, j) = random_elem(gf, rng);
  return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
  CHECK(gf.mul(gf.inv(7), 7) == 1);
  CHECK(gf.from_int(-1) == 100);
  CHECK(gf.to_signed(100) == -1);
  CHECK_THROWS_AS(PrimeField(100), PresentationError);
  CHECK_THROWS_AS(gf.inv(0), DimensionError);
  RationalField q;
  CHECK(q.mul(q.inv(mpq_class(3, 4)), mpq_class(3, 4)) == 1);
}

TEST_CASE("rref examples") {
  auto id = Matrix<PrimeField>::identity(gf, 3);
  auto e = rref(id);
  CHECK(e.reduced == id);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1, 2});

  auto z = rref(Matrix<PrimeField>(gf, 2, 4));
  CHECK(z.pivots.empty());
  CHECK(z.reduced.rows() == 0);

  auto m = Matrix<PrimeField>::from_ints(gf, {{2, 4}, {1, 2}});
  auto r = rref(m);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.reduced(0, 0) == 1);
  CHECK(r.reduced(0, 1) == 2);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix<PrimeField>::identity(gf, 4)).rows() == 0);
  CHECK(kernel_basis(Matrix<PrimeField>(gf, 3, 3)).rows() == 3);
  auto m = Matrix<PrimeField>::from_ints(gf, {{1, 1, 0}});
  auto k = kernel_basis(m);
  REQUIRE(k.rows() == 2);
  CHECK((m * k.transpose()).is_zero());
}

TEST_CASE("image basis examples") {
  CHECK(image_basis(Matrix<PrimeField>::identity(gf, 3)).dim() == 3);
  CHECK(image_basis(Matrix<PrimeField>(gf, 3, 2)).dim() == 0);
  auto u = Matrix<PrimeField>::from_ints(gf, {{1}, {2}, {3}});
  auto v = Matrix<PrimeField>::from_ints(gf, {{4, 5, 6}});
  CHECK(image_basis(u * v).dim() == 1);
}

TEST_CASE("subspace algebra") {
  auto full = Subspace<PrimeField>::full(gf, 2);
  auto zero = Subspace<PrimeField>(gf, 2);
  auto l1 = Subspace<PrimeField>::span(Matrix<PrimeField>::from_ints(gf, {{1, 2}}));
  auto l2 = Subspace<PrimeField>::span(Matrix<PrimeField>::from_ints(gf, {{3, 1}}));
  CHECK(full.intersection(l1) == l1);
  CHECK(zero.sum(l1) == l1);
  CHECK(l1.sum(l2).dim() == 2);
  CHECK(l1.intersection(l2).dim() == 0);
  CHECK(l1.contains(Vec<PrimeField>{2, 4}));
  CHECK_FALSE(l1.contains(Vec<PrimeField>{1, 0}));
  CHECK_THROWS_AS(l1.sum(Subspace<PrimeField>(gf, 3)), DimensionError);
  // Quotient coordinates vanish on the subspace.
  auto q = l1.quotient_coordinates(Vec<PrimeField>{3, 6});
  CHECK(is_zero_vec(gf, q));
}

TEST_CASE("rank-nullity and idempotence on random matrices") {
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = rng.range(1, 12), c = rng.range(1, 12);
    auto m = random_matrix(rng, r, c, t % 3 == 0 ? 3 : 0);
    auto e = rref(m);
    CHECK(rank(m) + kernel_basis(m).rows() == c);
    CHECK(rref(e.reduced).reduced == e.reduced);
    CHECK((m * kernel_basis(m).transpose()).is_zero());
  }
}

TEST_CASE("dimension formula and modular law on random subspaces") {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = rng.range(2, 9);
    auto a = Subspace<PrimeField>::span(random_matrix(rng, rng.range(0, n), n));
    auto b = Subspace<PrimeField>::span(random_matrix(rng, rng.range(0, n), n));
    auto c = Subspace<PrimeField>::span(random_matrix(rng, rng.range(0, n), n));
    CHECK(a.dim() + b.dim() == a.sum(b).dim() + a.intersection(b).dim());
    // a ⊆ a + c, so a + (b ∩ (a + c)) = (a + b) ∩ (a + c).
    auto ac = a.sum(c);
    CHECK(a.sum(b.intersection(ac)) == a.sum(b).intersection(ac));
  }
}

TEST_CASE("large prime lazy reduction agrees with rationals") {
  PrimeField big(2147483647u);
  RationalField q;
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    std::size_t r = 8, c = 8;
    Matrix<PrimeField> mp(big, r, c);
    Matrix<RationalField> mq(q, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        long v = static_cast<long>(rng.below(7)) - 3;
        if (t % 2 && j == c - 1) v = 0;
        mp(i, j) = big.from_int(v);
        mq(i, j) = v;
      }
    CHECK(rank(mp) == rank(mq));
  }
}

TEST_CASE("solve") {
  auto a = Matrix<PrimeField>::from_ints(gf, {{1, 2}, {3, 4}});
  auto b = Matrix<PrimeField>::from_ints(gf, {{5}, {6}});
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  auto sing = Matrix<PrimeField>::from_ints(gf, {{1, 2}, {2, 4}});
  CHECK_FALSE(solve(sing, b));
}
