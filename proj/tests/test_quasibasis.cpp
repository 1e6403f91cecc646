#include <catch2/catch_amalgamated.hpp>

#include "d2hopf/examples.hpp"
#include "d2hopf/fields.hpp"
#include "d2hopf/quasibasis.hpp"

using namespace d2hopf;

using Q = RationalField;

namespace {

Extension<Q> span_extension(const Algebra<Q>& A,
                            const std::vector<std::size_t>& idx) {
  Matrix<Q> rows(A.field, idx.size(), A.n);
  for (std::size_t i = 0; i < idx.size(); ++i)
    rows.at(i, idx[i]) = A.field.one();
  return Extension<Q>::make(A, rows);
}

void check_both_hands(const Extension<Q>& E) {
  auto pows = APowers<Q>::make(E);
  for (Side s : {Side::left, Side::right}) {
    auto res = find_quasibasis(pows, s);
    REQUIRE(res.basis.has_value());
    CHECK(res.defect == 0);
    CHECK(res.basis->size() >= 1);
    CHECK(verify_quasibasis(pows, *res.basis));
  }
}

}  // namespace

TEST_CASE("trivial extension has the one-pair quasibasis") {
  Q f;
  auto E = Extension<Q>::make(matrix_algebra(f, 2), Matrix<Q>::identity(f, 4));
  auto pows = APowers<Q>::make(E);
  // Hand-built: t = 1 (x) 1 and beta = id satisfy x (x) y = t . (x y).
  QuasiBasis<Q> qb;
  qb.side = Side::left;
  qb.t.push_back(pows.embed({E.A.unit, E.A.unit}));
  qb.ops.push_back(Matrix<Q>::identity(f, 4));
  CHECK(verify_quasibasis(pows, qb));
  qb.side = Side::right;
  CHECK(verify_quasibasis(pows, qb));
  check_both_hands(E);
}

TEST_CASE("base field extensions are depth two") {
  Q f;
  auto A = matrix_algebra(f, 2);
  Matrix<Q> unit_row(f, 1, 4);
  unit_row.at(0, 0) = f.one();
  unit_row.at(0, 3) = f.one();
  check_both_hands(Extension<Q>::make(A, unit_row));
}

TEST_CASE("matrix algebra over upper triangular is depth two") {
  Q f;
  check_both_hands(
      Extension<Q>::make(matrix_algebra(f, 2), upper_triangular_rows(f, 2)));
}

TEST_CASE("matrix algebra over diagonal is depth two") {
  Q f;
  check_both_hands(
      Extension<Q>::make(matrix_algebra(f, 2), diagonal_rows(f, 2)));
}

TEST_CASE("quaternions over the complex line are depth two") {
  Q f;
  check_both_hands(span_extension(quaternion_algebra(f), {0, 1}));
}

TEST_CASE("four dimensional Hopf algebra over its nilpotent line is depth two") {
  Q f;
  check_both_hands(span_extension(sweedler_algebra(f), {0, 2}));
}

TEST_CASE("group algebra over a normal subgroup is depth two") {
  Q f;
  check_both_hands(span_extension(s3_algebra(f), {0, 1, 2}));
  PrimeField g(5);
  Matrix<PrimeField> rows(g, 3, 6);
  for (std::size_t i = 0; i < 3; ++i) rows.at(i, i) = g.one();
  auto E = Extension<PrimeField>::make(s3_algebra(g), rows);
  auto pows = APowers<PrimeField>::make(E);
  for (Side s : {Side::left, Side::right}) {
    auto res = find_quasibasis(pows, s);
    REQUIRE(res.basis.has_value());
    CHECK(verify_quasibasis(pows, *res.basis));
  }
}

TEST_CASE("group algebra over a non-normal subgroup is not depth two") {
  Q f;
  // span{e, (12)} is a non-normal subgroup algebra inside the S3 algebra.
  auto E = span_extension(s3_algebra(f), {0, 3});
  auto pows = APowers<Q>::make(E);
  for (Side s : {Side::left, Side::right}) {
    auto res = find_quasibasis(pows, s);
    CHECK_FALSE(res.basis.has_value());
    CHECK(res.defect >= 1);
  }
}

TEST_CASE("a corrupted quasibasis fails verification") {
  Q f;
  auto E = span_extension(quaternion_algebra(f), {0, 1});
  auto pows = APowers<Q>::make(E);
  auto res = find_quasibasis(pows, Side::left);
  REQUIRE(res.basis.has_value());
  auto broken = *res.basis;
  broken.ops[0] = mat_scale(f.from_long(2), broken.ops[0]);
  CHECK_FALSE(verify_quasibasis(pows, broken));
}

TEST_CASE("quasibasis elements are central and operators are bimodule maps") {
  Q f;
  auto E = span_extension(sweedler_algebra(f), {0, 2});
  auto pows = APowers<Q>::make(E);
  auto P = pows.bimodule(2);
  for (Side s : {Side::left, Side::right}) {
    auto res = find_quasibasis(pows, s);
    REQUIRE(res.basis.has_value());
    for (std::size_t i = 0; i < res.basis->size(); ++i) {
      const auto& t = res.basis->t[i];
      const auto& op = res.basis->ops[i];
      for (std::size_t b = 0; b < E.dimB(); ++b) {
        Vec<Q> bv = E.b_vec(b);
        CHECK(vec_eq(f, P.act_left(bv, t), P.act_right(t, bv)));
        CHECK(mat_mul(op, E.b_left[b]) == mat_mul(E.b_left[b], op));
        CHECK(mat_mul(op, E.b_right[b]) == mat_mul(E.b_right[b], op));
      }
    }
  }
}

TEST_CASE("the search is deterministic") {
  Q f;
  auto E = span_extension(quaternion_algebra(f), {0, 1});
  auto pows = APowers<Q>::make(E);
  auto r1 = find_quasibasis(pows, Side::left);
  auto r2 = find_quasibasis(pows, Side::left);
  REQUIRE(r1.basis.has_value());
  REQUIRE(r2.basis.has_value());
  REQUIRE(r1.basis->size() == r2.basis->size());
  for (std::size_t i = 0; i < r1.basis->size(); ++i) {
    CHECK(vec_eq(f, r1.basis->t[i], r2.basis->t[i]));
    CHECK(r1.basis->ops[i] == r2.basis->ops[i]);
  }
}
