#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "d2hopf/fields.hpp"
#include "d2hopf/matrix.hpp"
#include "d2hopf/quotient.hpp"

using namespace d2hopf;

using F_rational = RationalField;

namespace {

template <class F>
Matrix<F> from_longs(F f, std::size_t r, std::size_t c,
                     std::initializer_list<long> vals) {
  Matrix<F> m(f, r, c);
  auto it = vals.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.from_long(*it++);
  return m;
}

template <class F>
Matrix<F> random_matrix(F f, std::size_t r, std::size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-4, 4);
  Matrix<F> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.from_long(d(rng));
  return m;
}

}  // namespace

TEST_CASE("rref collapses dependent rows") {
  RationalField f;
  auto m = from_longs(f, 2, 2, {2, 4, 1, 2});
  auto r = rref(m);
  CHECK(r.mat.rows == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(f.eq(r.mat.at(0, 0), f.one()));
  CHECK(f.eq(r.mat.at(0, 1), f.from_long(2)));
}

TEST_CASE("rref canonical form is insertion-order independent") {
  RationalField f;
  std::mt19937 rng(777);
  for (int iter = 0; iter < 30; ++iter) {
    auto m = random_matrix(f, 4, 5, rng);
    Matrix<F_rational> shuffled = m;
    std::vector<std::size_t> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < 4; ++i) shuffled.set_row(i, m.row(perm[i]));
    CHECK(rref(m).mat == rref(shuffled).mat);
  }
}

TEST_CASE("nullspace over GF(5) matches brute-force enumeration") {
  PrimeField f(5);
  auto m = from_longs(f, 1, 2, {1, 1});
  auto ns = nullspace(m);
  REQUIRE(ns.rows == 1);
  // Canonical basis vector: free column scaled so pivot column reads 1.
  CHECK(ns.at(0, 0) == 1);
  CHECK(ns.at(0, 1) == 4);
  // Cross-check: enumerate all 25 vectors and collect the kernel.
  std::size_t kernel_count = 0;
  for (uint64_t a = 0; a < 5; ++a)
    for (uint64_t b = 0; b < 5; ++b) {
      Vec<PrimeField> v{a, b};
      if (vec_is_zero(f, mat_apply(m, v))) ++kernel_count;
    }
  CHECK(kernel_count == 5);  // one-dimensional kernel over GF(5)
  CHECK(vec_is_zero(f, mat_apply(m, ns.row(0))));
}

TEST_CASE("solve detects inconsistency and verifies by substitution") {
  RationalField f;
  auto m = from_longs(f, 2, 2, {1, 2, 2, 4});
  CHECK_FALSE(solve(m, Vec<F_rational>{f.from_long(1), f.from_long(3)}));
  auto sol = solve(m, Vec<F_rational>{f.from_long(1), f.from_long(2)});
  REQUIRE(sol.has_value());
  CHECK(vec_eq(f, mat_apply(m, *sol),
               Vec<F_rational>{f.from_long(1), f.from_long(2)}));
}

TEST_CASE("matrix inverse round trip and singular rejection") {
  RationalField f;
  auto m = from_longs(f, 2, 2, {1, 2, 3, 5});
  auto inv = mat_inverse(m);
  CHECK(mat_mul(m, inv) == Matrix<F_rational>::identity(f, 2));
  CHECK(mat_mul(inv, m) == Matrix<F_rational>::identity(f, 2));
  auto sing = from_longs(f, 2, 2, {1, 2, 2, 4});
  CHECK_THROWS_AS(mat_inverse(sing), std::domain_error);
}

TEST_CASE("kronecker product shape and values") {
  RationalField f;
  auto a = from_longs(f, 2, 2, {1, 2, 3, 4});
  auto b = from_longs(f, 1, 2, {0, 1});
  auto k = kron(a, b);
  REQUIRE(k.rows == 2);
  REQUIRE(k.cols == 4);
  auto expected = from_longs(f, 2, 4, {0, 1, 0, 2, 0, 3, 0, 4});
  CHECK(k == expected);
}

TEMPLATE_TEST_CASE("rank-nullity and transpose rank on random matrices", "",
                   RationalField, PrimeField) {
  auto f = [] {
    if constexpr (std::is_same_v<TestType, PrimeField>)
      return PrimeField(5);
    else
      return RationalField{};
  }();
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 40; ++iter) {
    auto m = random_matrix(f, 3 + iter % 3, 4, rng);
    std::size_t r = rank(m);
    auto ns = nullspace(m);
    CHECK(r + ns.rows == m.cols);
    CHECK(rank(transpose(m)) == r);
    for (std::size_t i = 0; i < ns.rows; ++i)
      CHECK(vec_is_zero(f, mat_apply(m, ns.row(i))));
  }
}

TEST_CASE("echelon insertion is canonical across orders") {
  PrimeField f(5);
  std::mt19937 rng(99);
  for (int iter = 0; iter < 25; ++iter) {
    auto m = random_matrix(f, 5, 4, rng);
    Echelon<PrimeField> e1(f, 4), e2(f, 4);
    for (std::size_t i = 0; i < 5; ++i) e1.insert(m.row(i));
    for (std::size_t i = 5; i-- > 0;) e2.insert(m.row(i));
    CHECK(e1.to_matrix() == e2.to_matrix());
  }
}

TEST_CASE("subspace coordinates and membership") {
  RationalField f;
  auto rows = from_longs(f, 2, 3, {1, 0, 1, 0, 1, 2});
  auto s = Subspace<F_rational>::from_rows(rows);
  CHECK(s.dim() == 2);
  Vec<F_rational> v{f.from_long(2), f.from_long(3), f.from_long(8)};
  auto c = s.coords(v);
  REQUIRE(c.has_value());
  CHECK(vec_eq(f, s.from_coords(*c), v));
  Vec<F_rational> w{f.from_long(1), f.from_long(0), f.from_long(0)};
  CHECK_FALSE(s.contains(w));
}

TEST_CASE("quotient space projects, lifts, and induces maps") {
  RationalField f;
  // K^3 modulo span{(1,1,0)}: dim 2, pivot col 0, free cols {1,2}.
  auto rel = from_longs(f, 1, 3, {1, 1, 0});
  auto q = QuotientSpace<F_rational>::from_relations(f, 3, rel);
  CHECK(q.dim() == 2);
  CHECK(q.free_cols == std::vector<std::size_t>{1, 2});
  Vec<F_rational> v{f.from_long(3), f.from_long(1), f.from_long(2)};
  auto p = q.project(v);
  CHECK(vec_eq(f, p, Vec<F_rational>{f.from_long(-2), f.from_long(2)}));
  // project(lift(x)) == x for all basis vectors.
  for (std::size_t k = 0; k < q.dim(); ++k) {
    Vec<F_rational> e = vec_zero(f, q.dim());
    e[k] = f.one();
    CHECK(vec_eq(f, q.project(q.lift(e)), e));
  }
  // lift(project(v)) - v must lie in the relation span.
  Vec<F_rational> diff = vec_sub(f, q.lift(q.project(v)), v);
  CHECK(Subspace<F_rational>::from_rows(rel).contains(diff));
  // proj_mat / lift_mat compose to the identity on the quotient.
  CHECK(mat_mul(q.proj_mat(), q.lift_mat()) ==
        Matrix<F_rational>::identity(f, 2));
  // The swap (x,y,z) -> (y,x,z) preserves the relation and induces identity
  // on nothing interesting; the scaling map 2*id induces 2*id.
  auto twice = mat_scale(f.from_long(2), Matrix<F_rational>::identity(f, 3));
  CHECK(q.induced_map(twice) ==
        mat_scale(f.from_long(2), Matrix<F_rational>::identity(f, 2)));
  // A map that does not preserve the relation span must be rejected.
  auto bad = from_longs(f, 3, 3, {1, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK_THROWS_AS(q.induced_map(bad), std::domain_error);
}

TEST_CASE("quotient with no relations is the identity") {
  PrimeField f(7);
  auto q = QuotientSpace<PrimeField>::from_relations(
      f, 3, Matrix<PrimeField>(f, 0, 3));
  CHECK(q.dim() == 3);
  Vec<PrimeField> v{1, 2, 3};
  CHECK(vec_eq(f, q.project(v), v));
  CHECK(vec_eq(f, q.lift(v), v));
}
