#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "d2hopf/examples.hpp"
#include "d2hopf/fields.hpp"
#include "d2hopf/tensor.hpp"

using namespace d2hopf;

using Q = RationalField;

namespace {

Extension<Q> quaternion_over_complex(Q f) {
  Matrix<Q> rows(f, 2, 4);
  rows.at(0, 0) = f.one();
  rows.at(1, 1) = f.one();
  return Extension<Q>::make(quaternion_algebra(f), rows);
}

Extension<Q> gx_over_kx(Q f) {
  Matrix<Q> rows(f, 2, 4);
  rows.at(0, 0) = f.one();
  rows.at(1, 2) = f.one();
  return Extension<Q>::make(sweedler_algebra(f), rows);
}

}  // namespace

TEST_CASE("tensor square over the full algebra collapses to the algebra") {
  Q f;
  auto E = Extension<Q>::make(matrix_algebra(f, 2), Matrix<Q>::identity(f, 4));
  auto pows = APowers<Q>::make(E);
  CHECK(pows.dim(2) == 4);
  // x (x) y = xy (x) 1 in A (x)_A A: multiplication then embed is project.
  auto x = E.A.basis_vec(1), y = E.A.basis_vec(2);
  CHECK(vec_eq(f, pows.embed({x, y}),
               pows.embed({E.A.multiply(x, y), E.A.unit})));
}

TEST_CASE("tensor square over the scalars is the full Kronecker square") {
  Q f;
  auto A = matrix_algebra(f, 2);
  Matrix<Q> unit_row(f, 1, 4);
  unit_row.at(0, 0) = f.one();
  unit_row.at(0, 3) = f.one();
  auto E = Extension<Q>::make(A, unit_row);
  auto pows = APowers<Q>::make(E);
  CHECK(pows.dim(2) == 16);
}

TEST_CASE("tensor square dimensions for the catalog extensions") {
  Q f;
  // M2 over upper triangular: dim 4.
  auto Em = Extension<Q>::make(matrix_algebra(f, 2), upper_triangular_rows(f, 2));
  auto pm = APowers<Q>::make(Em);
  CHECK(pm.dim(2) == 4);
  // Quaternions over span{1,i}: A is free of rank 2 over B, so dim 8.
  auto Eq = quaternion_over_complex(f);
  auto pq = APowers<Q>::make(Eq);
  CHECK(pq.dim(2) == 8);
  // g,x algebra over span{1,x}: free of rank 2 again, dim 8.
  auto Ew = gx_over_kx(f);
  auto pw = APowers<Q>::make(Ew);
  CHECK(pw.dim(2) == 8);
  // Group algebra of S3 over the cyclic normal subalgebra: rank 2, dim 12.
  auto Es = Extension<Q>::make(s3_algebra(f), leading_basis_rows(f, 6, 3));
  auto ps = APowers<Q>::make(Es);
  CHECK(ps.dim(2) == 12);
}

TEST_CASE("embedding is B-balanced at the junction") {
  Q f;
  auto E = quaternion_over_complex(f);
  auto pows = APowers<Q>::make(E);
  for (std::size_t b = 0; b < E.dimB(); ++b)
    for (std::size_t x = 0; x < 4; ++x)
      for (std::size_t y = 0; y < 4; ++y) {
        Vec<Q> xb = E.A.multiply(E.A.basis_vec(x), E.b_vec(b));
        Vec<Q> by = E.A.multiply(E.b_vec(b), E.A.basis_vec(y));
        CHECK(vec_eq(f, pows.embed({xb, E.A.basis_vec(y)}),
                     pows.embed({E.A.basis_vec(x), by})));
      }
}

TEST_CASE("higher powers stabilize for the H-separable matrix extension") {
  Q f;
  auto E = Extension<Q>::make(matrix_algebra(f, 2), upper_triangular_rows(f, 2));
  auto pows = APowers<Q>::make(E);
  pows.extend_to(4);
  CHECK(pows.dim(2) == 4);
  CHECK(pows.dim(3) == 4);
  CHECK(pows.dim(4) == 4);
}

TEST_CASE("higher power dimensions double for free rank-2 extensions") {
  Q f;
  auto E = quaternion_over_complex(f);
  auto pows = APowers<Q>::make(E);
  pows.extend_to(4);
  CHECK(pows.dim(2) == 8);
  CHECK(pows.dim(3) == 16);
  CHECK(pows.dim(4) == 32);
}

TEST_CASE("junction multiplications commute and are associative") {
  Q f;
  auto E = gx_over_kx(f);
  auto pows = APowers<Q>::make(E);
  pows.extend_to(4);
  // Contracting (x y) z and x (y z) agree: power 3 -> power 1 both ways.
  auto both1 = mat_mul(pows.mult_at(2, 0), pows.mult_at(3, 0));
  auto both2 = mat_mul(pows.mult_at(2, 0), pows.mult_at(3, 1));
  CHECK(both1 == both2);
  // Disjoint junctions on power 4 commute.
  auto ab = mat_mul(pows.mult_at(3, 0), pows.mult_at(4, 2));
  auto ba = mat_mul(pows.mult_at(3, 1), pows.mult_at(4, 0));
  CHECK(ab == ba);
  // Spot value: embed(x,y,z) contracted equals embed of products.
  auto x = E.A.basis_vec(1), y = E.A.basis_vec(2), z = E.A.basis_vec(3);
  CHECK(vec_eq(f, mat_apply(pows.mult_at(3, 0), pows.embed({x, y, z})),
               pows.embed({E.A.multiply(x, y), z})));
  CHECK(vec_eq(f, mat_apply(pows.mult_at(3, 1), pows.embed({x, y, z})),
               pows.embed({x, E.A.multiply(y, z)})));
}

TEST_CASE("outer actions form a bimodule on each power") {
  Q f;
  auto E = quaternion_over_complex(f);
  auto pows = APowers<Q>::make(E);
  pows.extend_to(3);
  REQUIRE_NOTHROW(pows.bimodule(2).validate(E.A));
  REQUIRE_NOTHROW(pows.bimodule(3).validate(E.A));
  // Left action multiplies into the first slot, right action into the last.
  auto x = E.A.basis_vec(2), y = E.A.basis_vec(3), a = E.A.basis_vec(1);
  auto P = pows.bimodule(2);
  CHECK(vec_eq(f, P.act_left(a, pows.embed({x, y})),
               pows.embed({E.A.multiply(a, x), y})));
  CHECK(vec_eq(f, P.act_right(pows.embed({x, y}), a),
               pows.embed({x, E.A.multiply(y, a)})));
}

TEST_CASE("central square over the full algebra is the center") {
  Q f;
  auto E = Extension<Q>::make(matrix_algebra(f, 2), Matrix<Q>::identity(f, 4));
  auto pows = APowers<Q>::make(E);
  auto R = centralizer(E);
  auto T = CentralSquare<Q>::make(pows, R);
  CHECK(T.dim() == 1);
  CHECK(vec_eq(f, T.multiply(T.unit, T.unit), T.unit));
  // counit sends 1 (x) 1 to 1.
  CHECK(vec_eq(f, T.counit_in_A(T.unit), E.A.unit));
}

TEST_CASE("central square of the quaternion extension") {
  Q f;
  auto E = quaternion_over_complex(f);
  auto pows = APowers<Q>::make(E);
  auto R = centralizer(E);
  auto T = CentralSquare<Q>::make(pows, R);
  CHECK(R.dim() == 2);
  CHECK(T.dim() == 4);
  // Unit laws and associativity on all basis triples.
  for (std::size_t i = 0; i < T.dim(); ++i) {
    Vec<Q> t = vec_zero(f, T.dim());
    t[i] = f.one();
    CHECK(vec_eq(f, T.multiply(T.unit, t), t));
    CHECK(vec_eq(f, T.multiply(t, T.unit), t));
  }
  for (std::size_t i = 0; i < T.dim(); ++i)
    for (std::size_t j = 0; j < T.dim(); ++j)
      for (std::size_t k = 0; k < T.dim(); ++k) {
        Vec<Q> a = vec_zero(f, T.dim()), b = a, c = a;
        a[i] = f.one();
        b[j] = f.one();
        c[k] = f.one();
        CHECK(vec_eq(f, T.multiply(T.multiply(a, b), c),
                     T.multiply(a, T.multiply(b, c))));
      }
  // Source and target commute, and reproduce the bimodule actions.
  for (std::size_t r = 0; r < R.dim(); ++r)
    for (std::size_t s = 0; s < R.dim(); ++s) {
      Vec<Q> er = vec_zero(f, R.dim()), es = vec_zero(f, R.dim());
      er[r] = f.one();
      es[s] = f.one();
      Vec<Q> src = mat_apply(T.src_map, er);
      Vec<Q> tgt = mat_apply(T.tgt_map, es);
      CHECK(vec_eq(f, T.multiply(src, tgt), T.multiply(tgt, src)));
    }
  for (std::size_t r = 0; r < R.dim(); ++r) {
    Vec<Q> er = vec_zero(f, R.dim());
    er[r] = f.one();
    Vec<Q> src = mat_apply(T.src_map, er);
    Vec<Q> tgt = mat_apply(T.tgt_map, er);
    for (std::size_t i = 0; i < T.dim(); ++i) {
      Vec<Q> t = vec_zero(f, T.dim());
      t[i] = f.one();
      CHECK(vec_eq(f, T.multiply(t, src), mat_apply(T.r_right[r], t)));
      CHECK(vec_eq(f, T.multiply(t, tgt), mat_apply(T.r_left[r], t)));
    }
  }
}

TEST_CASE("central square dimensions to be frozen in goldens") {
  Q f;
  auto Ew = gx_over_kx(f);
  auto pw = APowers<Q>::make(Ew);
  auto Tw = CentralSquare<Q>::make(pw, centralizer(Ew));
  CHECK(Tw.dim() == 6);
  auto Es = Extension<Q>::make(s3_algebra(f), leading_basis_rows(f, 6, 3));
  auto ps = APowers<Q>::make(Es);
  auto Ts = CentralSquare<Q>::make(ps, centralizer(Es));
  CHECK(centralizer(Es).dim() == 4);
  CHECK(Ts.dim() == 8);
  auto Em = Extension<Q>::make(matrix_algebra(f, 2), upper_triangular_rows(f, 2));
  auto pm = APowers<Q>::make(Em);
  auto Tm = CentralSquare<Q>::make(pm, centralizer(Em));
  CHECK(Tm.dim() == 1);
}

TEST_CASE("central square matches over a prime field") {
  PrimeField f(7);
  auto H = quaternion_algebra(f);
  Matrix<PrimeField> rows(f, 2, 4);
  rows.at(0, 0) = f.one();
  rows.at(1, 1) = f.one();
  auto E = Extension<PrimeField>::make(H, rows);
  auto pows = APowers<PrimeField>::make(E);
  auto R = centralizer(E);
  auto T = CentralSquare<PrimeField>::make(pows, R);
  CHECK(R.dim() == 2);
  CHECK(pows.dim(2) == 8);
  CHECK(T.dim() == 4);
}

TEST_CASE("size guard rejects oversized tensor squares") {
  Q f;
  setenv("D2HOPF_MAX_DIM", "8", 1);
  auto E = quaternion_over_complex(f);
  CHECK_THROWS_AS(APowers<Q>::make(E), SizeGuardError);
  unsetenv("D2HOPF_MAX_DIM");
  CHECK_NOTHROW(APowers<Q>::make(E));
}

TEST_CASE("relation ranks computed two ways agree") {
  // Oracle: the tensor-square dimension equals ambient minus the rank of the
  // relation matrix, recomputed through the transpose.
  Q f;
  auto E = quaternion_over_complex(f);
  auto pows = APowers<Q>::make(E);
  const auto& q = pows.quotient(2);
  CHECK(q.dim() == 16 - rank(transpose(q.rel)));
}
