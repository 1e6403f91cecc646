#include <catch2/catch_amalgamated.hpp>

#include "d2hopf/examples.hpp"
#include "d2hopf/fields.hpp"
#include "d2hopf/pimethod.hpp"

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
  REQUIRE_FALSE(checks.empty());
  for (const auto& c : checks) {
    INFO(c.id << " (" << c.statement << "): " << c.witness);
    CHECK(c.pass);
  }
}

template <class F>
void require_pi_suites(const D2Context<F>& ctx, Bimodule<F> P,
                       std::string name) {
  auto pm = build_pi_method(ctx, std::move(P), std::move(name));
  require_all<F>(pi_transform_checks(ctx, pm));
  require_all<F>(cohomology_checks(ctx, pm));
}

template <class F>
void require_both_coefficient_suites(const D2Context<F>& ctx) {
  require_pi_suites(ctx, regular_bimodule(ctx.E.A), "A");
  APowers<F> pw = APowers<F>::make(ctx.E);
  require_pi_suites(ctx, pw.bimodule(2), "AxA");
}

template <class F>
const CheckResult& find_check(const std::vector<CheckResult>& checks,
                              const std::string& id) {
  for (const auto& c : checks)
    if (c.id == id) return c;
  FAIL("missing check " << id);
  return checks.front();
}

}  // namespace

TEST_CASE(
    "transfer and cohomology suites pass for the quaternion extension with "
    "both coefficient modules") {
  Q f;
  auto cb = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  REQUIRE(cb.ok());
  require_both_coefficient_suites<Q>(*cb.ctx);
}

TEST_CASE("the section matrix coincides with the antipode matrix") {
  Q f;
  auto cb = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  REQUIRE(cb.ok());
  const auto& ctx = *cb.ctx;
  auto pm = build_pi_method(ctx);
  auto ad = build_antipode(ctx, build_pairings(ctx));
  REQUIRE(ad.exists);
  REQUIRE(pm.rel[0].flat.basis == ctx.S.flat.basis);
  CHECK(pm.sigma() == ad.tau);
  auto checks = pi_transform_checks(ctx, pm);
  CHECK(find_check<Q>(checks, "section-extends-antipode").pass);
}

TEST_CASE(
    "with coefficients in the algebra the hom pairings reduce to the "
    "centralizer valued tables") {
  Q f;
  auto cb = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  REQUIRE(cb.ok());
  const auto& ctx = *cb.ctx;
  auto pm = build_pi_method(ctx);
  REQUIRE(pm.coef.PB.equals(ctx.R));
  auto mine = pi_pairings(pm);
  auto ref = build_pairings(ctx);
  REQUIRE(mine.angle.size() == ref.angle.size());
  for (std::size_t k = 0; k < mine.angle.size(); ++k) {
    CHECK(mine.angle[k] == ref.angle[k]);
    CHECK(mine.bracket[k] == ref.bracket[k]);
  }
}

TEST_CASE(
    "pairing a one sided multiplication operator with the unit returns the "
    "central element") {
  Q f;
  auto cb = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  REQUIRE(cb.ok());
  const auto& ctx = *cb.ctx;
  APowers<Q> pw = APowers<Q>::make(ctx.E);
  auto pm = build_pi_method(ctx, pw.bimodule(2), "AxA");
  for (std::size_t p = 0; p < pm.pbdim(); ++p) {
    Vec<Q> e = vec_zero(f, pm.pbdim());
    e[p] = f.one();
    Vec<Q> pv = pm.coef.PB.from_coords(e);
    Matrix<Q> lam(f, pm.pdim(), pm.dim_a());
    for (std::size_t x = 0; x < pm.dim_a(); ++x) {
      Vec<Q> v = pm.coef.P.act_right(pv, ctx.E.A.basis_vec(x));
      for (std::size_t i = 0; i < pm.pdim(); ++i) lam.at(i, x) = v[i];
    }
    Vec<Q> paired = mat_apply(pm.pi_right_inv(lam), ctx.Tsq.unit);
    CHECK(vec_eq(f, paired, pv));
  }
}

TEST_CASE("the counit is a coring cocycle") {
  Q f;
  for (int which = 0; which < 2; ++which) {
    auto algebra =
        which == 0 ? quaternion_algebra(f) : sweedler_algebra(f);
    std::vector<std::size_t> base =
        which == 0 ? std::vector<std::size_t>{0, 1}
                   : std::vector<std::size_t>{0, 2};
    auto cb = build_context(span_extension(algebra, base));
    REQUIRE(cb.ok());
    const auto& ctx = *cb.ctx;
    auto pm = build_pi_method(ctx);
    REQUIRE(pm.coef.PB.equals(ctx.R));
    REQUIRE(pm.cor[0].coords(ctx.Tsq.counit).has_value());
    CHECK(mat_is_zero(pm.coring_differential(0, ctx.Tsq.counit)));
  }
}

TEST_CASE(
    "central elements of the algebra are degree zero relative cocycles") {
  Q f;
  auto cb = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  REQUIRE(cb.ok());
  const auto& ctx = *cb.ctx;
  auto pm = build_pi_method(ctx);
  Matrix<Q> one(f, pm.pdim(), 1);
  for (std::size_t i = 0; i < pm.pdim(); ++i) one.at(i, 0) = ctx.E.A.unit[i];
  CHECK(mat_is_zero(pm.relative_differential(0, one)));
}

TEST_CASE(
    "transfer and cohomology suites pass for the full matrix algebra over "
    "its upper triangular subalgebra") {
  Q f;
  auto cb = build_context(
      Extension<Q>::make(matrix_algebra(f, 2), upper_triangular_rows(f, 2)));
  REQUIRE(cb.ok());
  require_both_coefficient_suites<Q>(*cb.ctx);
}

TEST_CASE(
    "transfer and cohomology suites pass for the full matrix algebra over "
    "its diagonal subalgebra") {
  Q f;
  auto cb = build_context(
      Extension<Q>::make(matrix_algebra(f, 2), diagonal_rows(f, 2)));
  REQUIRE(cb.ok());
  require_pi_suites(*cb.ctx, regular_bimodule(cb.ctx->E.A), "A");
}

TEST_CASE(
    "transfer and cohomology suites collapse correctly when the base is "
    "the whole algebra") {
  Q f;
  auto cb = build_context(
      span_extension(matrix_algebra(f, 2), {0, 1, 2, 3}));
  REQUIRE(cb.ok());
  CHECK(cb.ctx->dimT() == 1);
  require_both_coefficient_suites<Q>(*cb.ctx);
}

TEST_CASE(
    "transfer and cohomology suites pass for the symmetric group algebra "
    "over its normal subgroup algebra in characteristic five") {
  G f(5);
  auto cb = build_context(
      span_extension(s3_algebra(f), {0, 1, 2}));
  REQUIRE(cb.ok());
  const auto& ctx = *cb.ctx;
  REQUIRE_FALSE(centralizer_in_base(ctx));
  require_pi_suites(ctx, regular_bimodule(ctx.E.A), "A");
}

TEST_CASE(
    "transfer and cohomology suites pass for the four dimensional Hopf "
    "algebra over the rationals, with the section suite skipped") {
  Q f;
  auto cb = build_context(span_extension(sweedler_algebra(f), {0, 2}));
  REQUIRE(cb.ok());
  const auto& ctx = *cb.ctx;
  require_both_coefficient_suites<Q>(*cb.ctx);
  auto pm = build_pi_method(ctx);
  auto checks = pi_transform_checks(ctx, pm);
  const auto& row = find_check<Q>(checks, "section-suite");
  CHECK(row.pass);
  CHECK(row.witness.find("not required here") != std::string::npos);
  CHECK_THROWS_AS(pm.sigma(), NotIrreducible);
}

TEST_CASE(
    "transfer and cohomology suites pass for the four dimensional Hopf "
    "algebra over prime fields") {
  for (std::uint64_t p : {5ull, 7ull, 11ull}) {
    G f(p);
    auto cb = build_context(span_extension(sweedler_algebra(f), {0, 2}));
    REQUIRE(cb.ok());
    require_both_coefficient_suites<G>(*cb.ctx);
  }
}

TEST_CASE("out of range cochain degrees raise the documented error") {
  Q f;
  auto cb = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  REQUIRE(cb.ok());
  auto pm = build_pi_method(*cb.ctx);
  Matrix<Q> dummy(f, pm.pdim(), 1);
  CHECK_THROWS_AS(pm.relative_differential(4, dummy), UnsupportedDegree);
  CHECK_THROWS_AS(pm.coring_differential(3, dummy), UnsupportedDegree);
  CHECK_THROWS_AS(pm.phi(0, dummy), UnsupportedDegree);
  CHECK_THROWS_AS(pm.phi(4, dummy), UnsupportedDegree);
  CHECK_THROWS_AS(pm.homotopy(2, dummy), UnsupportedDegree);
  CHECK_THROWS_AS(pm.iota(4), UnsupportedDegree);
}

TEST_CASE("a corrupted central embedding is caught by the check suite") {
  Q f;
  auto cb = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  REQUIRE(cb.ok());
  const auto& ctx = *cb.ctx;
  auto pm = build_pi_method(ctx);
  for (std::size_t i = 0; i < pm.iota2.rows; ++i)
    pm.iota2.at(i, 0) = f.zero();
  auto checks = cohomology_checks(ctx, pm);
  CHECK_FALSE(all_pass(checks));
  CHECK_FALSE(find_check<Q>(checks, "central-embedding-two").pass);
}

TEST_CASE("rebuilding the transfer structure is deterministic") {
  Q f;
  auto cb = build_context(span_extension(quaternion_algebra(f), {0, 1}));
  REQUIRE(cb.ok());
  const auto& ctx = *cb.ctx;
  auto a = build_pi_method(ctx);
  auto b = build_pi_method(ctx);
  CHECK(a.sigma() == b.sigma());
  CHECK(a.coact == b.coact);
  CHECK(a.iota2 == b.iota2);
  CHECK(a.cor[1].flat.basis == b.cor[1].flat.basis);
  CHECK(a.rel[2].flat.basis == b.rel[2].flat.basis);
}
