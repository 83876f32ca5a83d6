#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "trusskit/instances.hpp"
#include "trusskit/ore.hpp"

using namespace trusskit;

namespace {

oracle::IntMatrix to_oracle(IntMatrix const& m) {
  oracle::IntMatrix out(m.dim(), std::vector<mpz_class>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

TEST_CASE("odd integers", "[instances]") {
  OddIntOps ops;
  CHECK(ops.bracket(OddInt(3L), OddInt(5L), OddInt(9L)) == OddInt(7L));
  CHECK(ops.mul(OddInt(-3L), OddInt(5L)) == OddInt(-15L));
  CHECK_THROWS_AS(OddInt(4L), axiom_error);
  CHECK(is_odd(mpz_class(-7)));
  CHECK_FALSE(is_odd(mpz_class(0)));

  Rng rng(default_seed);
  for (int i = 0; i < 200; ++i) {
    auto v = ops.sample(rng);
    CHECK(abs(v.value()) <= 1'000'000);
  }
}

TEST_CASE("the paragons 2^n m + 1", "[instances]") {
  CHECK(in_oddint_paragon(1, 3));
  CHECK(in_oddint_paragon(2, 5));
  CHECK_FALSE(in_oddint_paragon(2, 9));
  CHECK(in_oddint_paragon(2, -3));  // 4·(-1) + 1
  for (unsigned n = 1; n <= 6; ++n) CHECK_FALSE(in_oddint_paragon(n, 1));
  CHECK_THROWS_AS(in_oddint_paragon(0, 3), precondition_error);

  // a ~ b iff a = b mod 2^(n+1), decided by the predicate alone
  for (unsigned n = 1; n <= 4; ++n)
    for (long a = -41; a <= 41; a += 2)
      for (long b = -41; b <= 41; b += 2) {
        long const mod = 2L << n;
        CHECK(oddint_related(n, a, b) == (((a - b) % mod + mod) % mod == 0));
      }
}

TEST_CASE("quotient models of the odd integers", "[instances]") {
  auto one = oddint_quotient_model(1);
  CHECK(one.truss.labels() == Labels{"1", "3"});
  auto two = oddint_quotient_model(2);
  CHECK(two.truss.labels() == Labels{"1", "3", "5", "7"});
  auto mg = multiplicative_group(two.truss);
  REQUIRE(mg);
  CHECK(find_group_isomorphism(*mg, groups::klein()));
  CHECK(oddint_quotient_model(3).truss.size() == 8);
  CHECK(oddint_quotient_model(3).checked > 0);
  CHECK_THROWS_AS(oddint_quotient_model(0), precondition_error);
  CHECK_THROWS_AS(oddint_quotient_model(8), size_guard_error);
}

TEST_CASE("integer polynomials", "[instances]") {
  IntPoly const p{1, -1, 3};  // 3x^2 - x + 1
  CHECK(p.to_string() == "3x^2-x+1");
  CHECK(p.degree() == 2);
  CHECK(p.value_at_one() == 3);
  CHECK((p * IntPoly{1, 1}).to_string() == "3x^3+2x^2+1");
  CHECK(divides(IntPoly{1, 1}, p * IntPoly{1, 1}));
  CHECK_FALSE(divides(IntPoly{0, 2}, IntPoly{0, 1}));
  CHECK(*divide(IntPoly{2, 4}, IntPoly{1, 2}) == IntPoly{2});
  CHECK(gcd(IntPoly{-1, 0, 1}, IntPoly{1, 2, 1}) == IntPoly{1, 1});
  CHECK(content(IntPoly{6, 9}) == 3);
  CHECK(evaluate(p, 2) == 11);
  CHECK(IntPoly{}.to_string() == "0");
}

TEST_CASE("odd polynomials", "[instances]") {
  OddPolyOps ops;
  CHECK_THROWS_AS(OddPoly({1, 1}), axiom_error);
  Rng rng(default_seed);
  for (int i = 0; i < 300; ++i) {
    auto const a = ops.sample(rng), b = ops.sample(rng);
    CHECK(a.poly().degree() <= 8);
    for (auto const& c : a.poly().coeffs()) CHECK(abs(c) <= 99);
    // sum(ab) = sum(a) sum(b)
    CHECK(ops.mul(a, b).poly().value_at_one() == a.poly().value_at_one() * b.poly().value_at_one());
  }
  auto f = ops.fraction_normal_form(OddPoly{1, 1, 1}, OddPoly{2, 3, 3, 1});
  // (x^3+3x^2+3x+2)/(x^2+x+1) = x+2
  CHECK(f.den == IntPoly{1});
  CHECK(f.num == IntPoly{2, 1});
  auto g = ops.fraction_normal_form(OddPoly{1, 0, 1, -1}, OddPoly{1});
  CHECK(g.den == IntPoly{-1, 0, -1, 1});
  CHECK(g.num == IntPoly{-1});
}

TEST_CASE("evaluation at i", "[instances]") {
  CHECK(gauss_evaluate(OddPoly{0, 1}) == OddGauss(0, 1));
  CHECK(gauss_evaluate(OddPoly{1, 1, 1}) == OddGauss(0, 1));
  CHECK_THROWS_AS(OddPoly({0, 1, 0, 1}), axiom_error);

  OddPolyOps ops;
  Rng rng(default_seed + 7);
  for (int i = 0; i < 200; ++i) {
    auto const p = ops.sample(rng), q = ops.sample(rng);
    auto [re, im] = oracle::eval_at_i(p.poly().coeffs());
    CHECK(gauss_evaluate(p) == OddGauss(re, im));
    OddGaussOps g;
    CHECK(gauss_evaluate(ops.mul(p, q)) == g.mul(gauss_evaluate(p), gauss_evaluate(q)));
  }
}

TEST_CASE("the kernel of evaluation at i", "[instances]") {
  auto par = paragon_of_odd_polys(OddPoly{0, 1}, OddPoly{1, 1, 1});
  OddPolyOps ops;
  Rng rng(default_seed + 3);
  for (int i = 0; i < 100; ++i) {
    auto const p = ops.sample(rng);
    auto const q = i % 2 ? ops.sample(rng) : OddPoly(p.poly() + IntPoly{0, 2} * par.modulus() * ops.sample(rng).poly());
    CHECK(par.related(p, q) == (gauss_evaluate(p) == gauss_evaluate(q)));
    CHECK_FALSE(par.class_is_ideal(p));
  }
}

TEST_CASE("odd Gaussian integers", "[instances]") {
  OddGaussOps ops;
  CHECK_THROWS_AS(OddGauss(1, 1), axiom_error);
  CHECK(OddGauss(2, -1).to_string() == "2-1i");
  CHECK(ops.mul(OddGauss(1, 2), OddGauss(1, -2)) == OddGauss(5, 0));
  auto nf = ops.fraction_normal_form(OddGauss(1, 2), OddGauss(5, 0));
  CHECK(nf == GaussianRational{1, -2});
  Rng rng(default_seed);
  for (int i = 0; i < 100; ++i) {
    auto v = ops.sample(rng);
    CHECK(is_odd(v.re() + v.im()));
  }
}

TEST_CASE("odd matrices", "[instances]") {
  OddMatrix const a(2, {1, 2, 2, 3});
  SECTION("products keep the pattern") {
    CHECK(OddMatrixOps(2).mul(a, OddMatrix(2, {3, 0, 0, 1})) == OddMatrix(2, {3, 2, 6, 3}));
    CHECK_THROWS_AS(OddMatrix(2, {1, 1, 0, 1}), axiom_error);
    CHECK_THROWS_AS(OddMatrix(2, {2, 0, 0, 1}), axiom_error);
  }
  SECTION("determinant and cofactor") {
    CHECK(matrix_det(a) == -1);
    CHECK(matrix_cofactor(a) == OddMatrix(2, {3, -2, -2, 1}));
    CHECK(matrix_det(OddMatrix::identity(3)) == 1);
    CHECK(matrix_cofactor(OddMatrix::identity(3)) == OddMatrix::identity(3));
  }
  SECTION("sampled determinants agree with Laplace expansion and are odd") {
    Rng rng(default_seed);
    for (std::size_t n = 1; n <= 4; ++n) {
      OddMatrixOps ops(n);
      for (int i = 0; i < 50; ++i) {
        auto const m = ops.sample(rng);
        auto const d = matrix_det(m);
        CHECK(d == oracle::laplace_det(to_oracle(m.matrix())));
        CHECK(is_odd(d));
      }
    }
  }
  SECTION("Ore witness identity det(b) a = (a adj(b)) b") {
    Rng rng(default_seed + 1);
    for (std::size_t n = 1; n <= 4; ++n) {
      OddMatrixOps ops(n);
      for (int i = 0; i < 50; ++i) {
        auto const x = ops.sample(rng), y = ops.sample(rng);
        auto const w = ops.ore_witness(x, y);
        CHECK(ops.mul(w.r, x) == ops.mul(w.s, y));
        mpz_class const det = oracle::laplace_det(to_oracle(y.matrix()));
        CHECK(w.r == OddMatrix::identity(n, det));
        auto lhs = to_oracle(x.matrix());
        for (auto& row : lhs)
          for (auto& v : row) v *= det;
        CHECK(oracle::multiply(to_oracle(w.s.matrix()), to_oracle(y.matrix())) == lhs);
      }
    }
  }
  SECTION("fraction normal forms") {
    OddMatrixOps ops(2);
    auto id = OddMatrix::identity(2);
    CHECK(ops.fraction_normal_form(id, a).matrix() == to_rational(a.matrix()));
    auto three = OddMatrixOps(1).fraction_normal_form(OddMatrix(1, {3}), OddMatrix(1, {9}));
    CHECK(three(0, 0) == 3);

    Rng rng(default_seed + 2);
    auto q = localise(ops);
    for (int i = 0; i < 50; ++i) {
      auto const den = ops.sample(rng), num = ops.sample(rng);
      // den^-1 num through the adjugate oracle
      auto inv = oracle::rational_inverse(to_oracle(den.matrix()));
      auto nf = ops.fraction_normal_form(den, num);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
          mpq_class v = 0;
          for (std::size_t k = 0; k < 2; ++k) v += inv[r][k] * mpq_class(num.matrix()(k, c));
          CHECK(nf(r, c) == v);
        }
      auto const other = q.rescale(q.make(den, num), ops.sample(rng));
      CHECK(q.equal_by_witness(q.make(den, num), other));
      CHECK(q.equal(q.make(den, num), other));
    }
  }
  SECTION("cancellation") {
    Rng rng(default_seed + 3);
    OddMatrixOps ops(3);
    for (int i = 0; i < 50; ++i) {
      auto const x = ops.sample(rng), y = ops.sample(rng), z = ops.sample(rng);
      CHECK((ops.mul(x, y) == ops.mul(x, z)) == (y == z));
    }
  }
}
