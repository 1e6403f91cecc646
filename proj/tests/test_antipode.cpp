#include <catch2/catch_amalgamated.hpp>

#include "d2hopf/antipode.hpp"
#include "d2hopf/examples.hpp"
#include "d2hopf/fields.hpp"

using namespace d2hopf;

using Q = RationalField;
using G = PrimeField;

namespace {

template <class F>
Extension<F> span_extension(const Algebra<F>& A,
                            const std::vector<std::size_t>& idx) {
  Matrix<F> rows(A.field, idx.size(), A.n);
  for (std::size_t i = 0; i < idx.size(); ++i)
    rows.at(i, idx[i]) = A.field.one();
  return Extension<F>::make(A, rows);
}

template <class F>
void require_all(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    INFO(c.id << " (" << c.statement << "): " << c.witness);
    CHECK(c.pass);
  }
}

template <class F>
void require_antipode_suites(const D2Context<F>& ctx) {
  require_all<F>(irreducibility_checks(ctx));
  auto S = build_s_structure(ctx);
  auto P = build_pairings(ctx);
  auto ad = build_antipode(ctx, P);
  REQUIRE(ad.exists);
  require_all<F>(antipode_checks(ctx, S, P, ad));
  require_all<F>(skew_hopf_checks(ctx, S, ad));
  require_all<F>(lu_checks(ctx, S, ad, build_separability(ctx)));
}

}  // namespace

TEST_CASE("the quaternion extension of the complex numbers is irreducible") {
  Q f;
  auto cb = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  REQUIRE(cb.ok());
  CHECK(centralizer_in_base(*cb.ctx));
  require_all<Q>(irreducibility_checks(*cb.ctx));
}

TEST_CASE("the four dimensional Hopf algebra extension is not irreducible") {
  Q f;
  auto cb = build_context(span_extension(sweedler_algebra(f), {0, 2}));
  REQUIRE(cb.ok());
  const auto& ctx = *cb.ctx;
  CHECK_FALSE(centralizer_in_base(ctx));
  auto checks = irreducibility_checks(ctx);
  CHECK_FALSE(all_pass(checks));
  CHECK(checks[0].id == "centralizer-in-base");
  CHECK_FALSE(checks[0].pass);
  // commutativity still holds for this centralizer
  CHECK(checks[1].pass);
  auto ad = build_antipode(ctx, build_pairings(ctx));
  CHECK_FALSE(ad.exists);
  CHECK(ad.reason == "the centralizer does not lie in the base");
}

TEST_CASE("the group extension by a normal subgroup is not irreducible") {
  G f(5);
  auto cb = build_context(span_extension(s3_algebra(f), {0, 1, 2}));
  REQUIRE(cb.ok());
  CHECK_FALSE(centralizer_in_base(*cb.ctx));
  CHECK_FALSE(build_antipode(*cb.ctx, build_pairings(*cb.ctx)).exists);
}

TEST_CASE("the antipode of the quaternion extension fixes conjugation") {
  Q f;
  auto cb = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  REQUIRE(cb.ok());
  const auto& ctx = *cb.ctx;
  auto ad = build_antipode(ctx, build_pairings(ctx));
  REQUIRE(ad.exists);

  // conjugation by i fixes 1 and i and negates j and k
  Matrix<Q> conj(f, 4, 4);
  conj.at(0, 0) = f.one();
  conj.at(1, 1) = f.one();
  conj.at(2, 2) = f.neg(f.one());
  conj.at(3, 3) = f.neg(f.one());
  Vec<Q> c = ctx.s_coords_or_throw(conj, "conjugation");
  CHECK(vec_eq(f, mat_apply(ad.tau, c), c));

  // left multiplication by i maps to right multiplication by i
  REQUIRE(ctx.dimR() == 2);
  CHECK(vec_eq(f, mat_apply(ad.tau, ctx.lambda_map.col(1)),
               ctx.rho_map.col(1)));
  CHECK(vec_eq(f, mat_apply(ad.tau, ctx.rho_map.col(1)),
               ctx.lambda_map.col(1)));

  // the antipode squares to the identity here
  CHECK(mat_mul(ad.tau, ad.tau) == Matrix<Q>::identity(f, ctx.dimS()));
}

TEST_CASE("antipode suites for the quaternion extension") {
  Q f;
  auto cb = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  REQUIRE(cb.ok());
  require_antipode_suites(*cb.ctx);
}

TEST_CASE("antipode suites for upper triangular matrices") {
  Q f;
  auto cb = build_context(
      Extension<Q>::make(matrix_algebra(f, 2), upper_triangular_rows(f, 2)));
  REQUIRE(cb.ok());
  require_antipode_suites(*cb.ctx);
}

TEST_CASE("antipode suites for the diagonal matrix extension") {
  Q f;
  auto cb = build_context(
      Extension<Q>::make(matrix_algebra(f, 2), diagonal_rows(f, 2)));
  REQUIRE(cb.ok());
  require_antipode_suites(*cb.ctx);
}

TEST_CASE("antipode suites when the base is the whole algebra") {
  Q f;
  auto A = matrix_algebra(f, 2);
  auto cb = build_context(span_extension(A, {0, 1, 2, 3}));
  REQUIRE(cb.ok());
  const auto& ctx = *cb.ctx;
  require_antipode_suites(ctx);
  auto ad = build_antipode(ctx, build_pairings(ctx));
  REQUIRE(ad.exists);
  CHECK(ad.tau == Matrix<Q>::identity(f, 1));
}

TEST_CASE("antipode suites in odd characteristic") {
  G f(7);
  auto cb = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  REQUIRE(cb.ok());
  require_antipode_suites(*cb.ctx);

  G g(5);
  auto cb2 = build_context(
      Extension<G>::make(matrix_algebra(g, 2), diagonal_rows(g, 2)));
  REQUIRE(cb2.ok());
  require_antipode_suites(*cb2.ctx);
}

TEST_CASE("the separability element of the complex centralizer is frozen") {
  Q f;
  auto cb = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  REQUIRE(cb.ok());
  const auto& ctx = *cb.ctx;
  auto lu = build_separability(ctx);
  REQUIRE(lu.separable);
  // basis of the centralizer is 1, i; the element is (1(x)1 - i(x)i)/2
  REQUIRE(ctx.dimR() == 2);
  Vec<Q> expected = vec_zero(f, 4);
  expected[0] = f.div(f.one(), f.from_long(2));
  expected[3] = f.neg(expected[0]);
  CHECK(vec_eq(f, lu.e, expected));
}

TEST_CASE("separability elements of one dimensional and split centralizers") {
  Q f;
  {
    auto cb = build_context(Extension<Q>::make(matrix_algebra(f, 2),
                                               upper_triangular_rows(f, 2)));
    REQUIRE(cb.ok());
    auto lu = build_separability(*cb.ctx);
    REQUIRE(lu.separable);
    Vec<Q> expected = vec_zero(f, 1);
    expected[0] = f.one();
    CHECK(vec_eq(f, lu.e, expected));
  }
  {
    auto cb = build_context(
        Extension<Q>::make(matrix_algebra(f, 2), diagonal_rows(f, 2)));
    REQUIRE(cb.ok());
    auto lu = build_separability(*cb.ctx);
    REQUIRE(lu.separable);
    // orthogonal idempotents pair with themselves
    Vec<Q> expected = vec_zero(f, 4);
    expected[0] = f.one();
    expected[3] = f.one();
    CHECK(vec_eq(f, lu.e, expected));
  }
}

TEST_CASE("the mirror construction on T needs a central centralizer") {
  Q f;
  {
    auto cb = build_context(Extension<Q>::make(matrix_algebra(f, 2),
                                               upper_triangular_rows(f, 2)));
    REQUIRE(cb.ok());
    auto checks = mirror_antipode_checks(*cb.ctx, build_pairings(*cb.ctx));
    REQUIRE(checks.size() == 1);
    CHECK(checks[0].pass);
    CHECK(checks[0].witness.find("anti-automorphism confirmed") !=
          std::string::npos);
  }
  {
    auto cb = build_context(span_extension(quaternion_algebra(f), {0, 1}));
    REQUIRE(cb.ok());
    auto checks = mirror_antipode_checks(*cb.ctx, build_pairings(*cb.ctx));
    REQUIRE(checks.size() == 1);
    CHECK(checks[0].pass);
    CHECK(checks[0].witness.find("not defined here") != std::string::npos);
  }
}

TEST_CASE("a corrupted antipode is rejected") {
  Q f;
  auto cb = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  REQUIRE(cb.ok());
  const auto& ctx = *cb.ctx;
  auto S = build_s_structure(ctx);
  auto P = build_pairings(ctx);
  auto ad = build_antipode(ctx, P);
  REQUIRE(ad.exists);
  for (std::size_t i = 0; i < ctx.dimS(); ++i)
    ad.tau.at(i, 0) = f.mul(f.from_long(2), ad.tau.at(i, 0));
  ad.tau_op.clear();
  for (std::size_t k = 0; k < ctx.dimS(); ++k)
    ad.tau_op.push_back(ctx.s_op(ad.tau.col(k)));
  CHECK_FALSE(all_pass(antipode_checks(ctx, S, P, ad)));
}

TEST_CASE("the antipode construction is deterministic") {
  Q f;
  auto cb1 = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  auto cb2 = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  REQUIRE(cb1.ok());
  REQUIRE(cb2.ok());
  auto a1 = build_antipode(*cb1.ctx, build_pairings(*cb1.ctx));
  auto a2 = build_antipode(*cb2.ctx, build_pairings(*cb2.ctx));
  REQUIRE(a1.exists);
  REQUIRE(a2.exists);
  CHECK(a1.tau == a2.tau);
  CHECK(vec_eq(f, build_separability(*cb1.ctx).e,
               build_separability(*cb2.ctx).e));
}
