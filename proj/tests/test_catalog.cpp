#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <string>
#include <vector>

#include "d2hopf/antipode.hpp"
#include "d2hopf/catalog.hpp"
#include "d2hopf/context.hpp"
#include "d2hopf/runner.hpp"

using namespace d2hopf;

using Q = RationalField;
using P5 = PrimeField;

namespace {

// Plain Gaussian elimination that scans columns right to left and picks the
// bottom-most usable pivot row, then clears the pivot column everywhere.
// Deliberately a different elimination order than the canonical reduced form
// the library uses, so ranks computed here are an independent cross-check.
template <class F>
std::size_t oracle_eliminate(const F& f, std::vector<Vec<F>>& rows,
                             std::vector<std::size_t>* pivot_cols = nullptr) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::vector<bool> used(rows.size(), false);
  std::size_t rank = 0;
  for (std::size_t cc = cols; cc-- > 0;) {
    std::size_t pick = rows.size();
    for (std::size_t r = rows.size(); r-- > 0;)
      if (!used[r] && !f.is_zero(rows[r][cc])) {
        pick = r;
        break;
      }
    if (pick == rows.size()) continue;
    used[pick] = true;
    ++rank;
    if (pivot_cols) pivot_cols->push_back(cc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pick || f.is_zero(rows[r][cc])) continue;
      auto factor = f.neg(f.div(rows[r][cc], rows[pick][cc]));
      vec_addmul(f, rows[r], factor, rows[pick]);
    }
    // Move the pivot row to the front of the used block so reduction of
    // fresh vectors can walk pivots in a fixed order later.
    std::swap(rows[pick], rows[rank - 1]);
    std::swap(used[pick], used[rank - 1]);
    used[rank - 1] = true;
  }
  rows.resize(rank);
  return rank;
}

template <class F>
std::size_t oracle_rank(const F& f, std::vector<Vec<F>> rows) {
  return oracle_eliminate(f, rows);
}

// Reduces v against an eliminated row set (each pivot column is nonzero in
// exactly one row, so a single pass suffices).
template <class F>
void oracle_reduce(const F& f, Vec<F>& v, const std::vector<Vec<F>>& rows,
                   const std::vector<std::size_t>& pivot_cols) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t c = pivot_cols[r];
    if (f.is_zero(v[c])) continue;
    auto factor = f.neg(f.div(v[c], rows[r][c]));
    vec_addmul(f, v, factor, rows[r]);
  }
}

template <class F>
Vec<F> mat_row_vec(const Matrix<F>& m, std::size_t r) {
  Vec<F> v = vec_zero(m.field, m.cols);
  for (std::size_t c = 0; c < m.cols; ++c) v[c] = m.at(r, c);
  return v;
}

struct OracleDims {
  std::size_t r = 0, s = 0, tsq = 0, t = 0;
};

// Recomputes the centralizer, endomorphism, tensor-square and invariant
// dimensions straight from the defining linear systems, using only the
// oracle elimination above. The pure tensor e_a (x) e_c sits at index a*n+c.
template <class F>
OracleDims oracle_dims(const Extension<F>& E) {
  const F& f = E.field();
  const std::size_t n = E.dimA();
  const std::size_t nb = E.dimB();
  OracleDims out;

  {  // centralizer: (b_left - b_right) r = 0 for every base basis element
    std::vector<Vec<F>> rows;
    for (std::size_t b = 0; b < nb; ++b) {
      Matrix<F> d = mat_sub(E.b_left[b], E.b_right[b]);
      for (std::size_t i = 0; i < n; ++i) rows.push_back(mat_row_vec(d, i));
    }
    out.r = n - oracle_rank(f, rows);
  }

  {  // endomorphisms commuting with both base actions, unknowns M[i*n+j]
    std::vector<Vec<F>> rows;
    for (std::size_t b = 0; b < nb; ++b)
      for (const Matrix<F>* act : {&E.b_left[b], &E.b_right[b]})
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) {
            Vec<F> eq = vec_zero(f, n * n);
            for (std::size_t k = 0; k < n; ++k) {
              eq[r * n + k] = f.add(eq[r * n + k], act->at(k, c));
              eq[k * n + c] = f.sub(eq[k * n + c], act->at(r, k));
            }
            rows.push_back(std::move(eq));
          }
    out.s = n * n - oracle_rank(f, rows);
  }

  // balancing relations (x.b) (x) y - x (x) (b.y) spanning the kernel of
  // A (x) A -> A (x)_B A
  std::vector<Vec<F>> rel;
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c) {
        Vec<F> row = vec_zero(f, n * n);
        for (std::size_t i = 0; i < n; ++i)
          row[i * n + c] = f.add(row[i * n + c], E.b_right[b].at(i, a));
        for (std::size_t k = 0; k < n; ++k)
          row[a * n + k] = f.sub(row[a * n + k], E.b_left[b].at(k, c));
        rel.push_back(std::move(row));
      }
  std::vector<std::size_t> rel_pivots;
  const std::size_t rel_rank = oracle_eliminate(f, rel, &rel_pivots);
  out.tsq = n * n - rel_rank;

  {  // centralized tensors: b.w - w.b must fall inside the relation span
    std::vector<Vec<F>> cols;
    for (std::size_t j = 0; j < n * n; ++j) {
      const std::size_t a = j / n, c = j % n;
      Vec<F> stacked = vec_zero(f, nb * n * n);
      for (std::size_t b = 0; b < nb; ++b) {
        Vec<F> w = vec_zero(f, n * n);
        for (std::size_t i = 0; i < n; ++i)
          w[i * n + c] = f.add(w[i * n + c], E.b_left[b].at(i, a));
        for (std::size_t k = 0; k < n; ++k)
          w[a * n + k] = f.sub(w[a * n + k], E.b_right[b].at(k, c));
        oracle_reduce(f, w, rel, rel_pivots);
        for (std::size_t i = 0; i < n * n; ++i) stacked[b * n * n + i] = w[i];
      }
      cols.push_back(std::move(stacked));
    }
    const std::size_t ker = n * n - oracle_rank(f, cols);
    out.t = ker - rel_rank;
  }
  return out;
}

template <class F>
void check_entry_against_solver(const CatalogEntry& e, F f) {
  INFO(e.id << " over " << f.name());
  auto E = build_entry(e, f);
  auto cb = build_context(E);
  CHECK((cb.left_defect == 0) == e.d2_left);
  CHECK((cb.right_defect == 0) == e.d2_right);
  REQUIRE(cb.ok());
  CHECK(centralizer_in_base(*cb.ctx) == e.irreducible);

  auto od = oracle_dims(E);
  CHECK(od.r == cb.ctx->dimR());
  CHECK(od.s == cb.ctx->dimS());
  CHECK(od.tsq == cb.ctx->pows.dim(2));
  CHECK(od.t == cb.ctx->dimT());
}

template <class F>
void check_round_trip(const std::string& id, F f) {
  INFO(id << " over " << f.name());
  auto E = build_entry(id, f);
  auto back = load_extension(extension_to_json(E), f);
  REQUIRE(back.E.dimA() == E.dimA());
  REQUIRE(back.E.dimB() == E.dimB());
  CHECK(mat_is_zero(mat_sub(back.E.B.basis, E.B.basis)));
  CHECK(vec_eq(f, back.E.A.unit, E.A.unit));
  CHECK(back.E.A.labels == E.A.labels);
  for (std::size_t i = 0; i < E.dimA(); ++i)
    for (std::size_t j = 0; j < E.dimA(); ++j)
      CHECK(vec_eq(f, back.E.A.basis_product(i, j), E.A.basis_product(i, j)));
  CHECK(back.coefficients == std::nullopt);
}

Json regular_bimodule_block(const Extension<Q>& E) {
  Json left = Json::array(), right = Json::array();
  const std::size_t n = E.dimA();
  for (std::size_t a = 0; a < n; ++a) {
    Vec<Q> ea = vec_zero(E.field(), n);
    ea[a] = E.field().one();
    Matrix<Q> L = E.A.left_mult(ea), R = E.A.right_mult(ea);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (!E.field().is_zero(L.at(r, c)))
          left.push_back({a, r, c, E.field().to_string(L.at(r, c))});
        if (!E.field().is_zero(R.at(r, c)))
          right.push_back({a, r, c, E.field().to_string(R.at(r, c))});
      }
  }
  return Json{{"dim", n}, {"left", left}, {"right", right}};
}

}  // namespace

TEST_CASE("catalog flags and dimensions match independent elimination") {
  for (const auto& e : catalog()) {
    if (e.default_field.kind == FieldSpec::Kind::rational)
      check_entry_against_solver(e, Q{});
    else
      check_entry_against_solver(e, PrimeField(e.default_field.p));
  }
}

TEST_CASE("cross-field entries keep their dimensions over prime fields") {
  for (std::uint64_t p : {5ull, 7ull, 11ull})
    check_entry_against_solver(find_entry("sweedler-h4"), PrimeField(p));
  check_entry_against_solver(find_entry("matn-upper(2)"), PrimeField(7));
  check_entry_against_solver(find_entry("quaternion-complex"), PrimeField(7));
  check_entry_against_solver(find_entry("group-normal(7)"), PrimeField(7));
}

TEST_CASE("catalog listing order is stable") {
  std::vector<std::string> ids;
  for (const auto& e : catalog()) ids.push_back(e.id);
  CHECK(ids == std::vector<std::string>{
                   "trivial-B-equals-A", "matn-upper(2)", "matn-upper(3)",
                   "matn-diag(2)", "quaternion-complex", "sweedler-h4",
                   "group-normal(5)"});
}

TEST_CASE("serialization round trips through the structure constant format") {
  check_round_trip("quaternion-complex", Q{});
  check_round_trip("sweedler-h4", Q{});
  check_round_trip("matn-upper(3)", Q{});
  check_round_trip("group-normal(5)", PrimeField(5));
}

TEST_CASE("integer coefficients are accepted alongside strings") {
  Q f;
  Json j = extension_to_json(build_entry("matn-upper(2)", f));
  j["mul"][0][3] = 1;  // swap an exact string for a plain JSON integer
  j["unit"] = Json::array({1, 0, 0, 1});
  auto back = load_extension(j, f);
  auto orig = build_entry("matn-upper(2)", f);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(vec_eq(f, back.E.A.basis_product(i, k),
                   orig.A.basis_product(i, k)));
}

TEST_CASE("bimodule blocks parse and validate") {
  Q f;
  auto E = build_entry("sweedler-h4", f);
  Json j = extension_to_json(E);
  j["bimodule"] = regular_bimodule_block(E);

  auto in = load_extension(j, f);
  REQUIRE(in.coefficients.has_value());
  CHECK(in.coefficients->dim == E.dimA());

  SECTION("corrupted action tables are rejected") {
    j["bimodule"]["left"][0][3] = "7";
    CHECK_THROWS_AS(load_extension(j, f), StructureError);
  }
  SECTION("out of range module indices are rejected") {
    j["bimodule"]["left"][0][1] = 99;
    CHECK_THROWS_AS(load_extension(j, f), ParseError);
  }
  SECTION("missing action table is rejected") {
    j["bimodule"].erase("right");
    CHECK_THROWS_AS(load_extension(j, f), ParseError);
  }
}

TEST_CASE("find_entry resolves families and rejects unknowns") {
  CHECK(find_entry("group-normal").id == "group-normal(5)");
  CHECK(find_entry("group-normal(7)").default_field == FieldSpec::gfp(7));
  CHECK(find_entry("group-normal(13)").default_field == FieldSpec::gfp(13));
  CHECK_THROWS_AS(find_entry("nope"), UnknownEntry);
  CHECK_THROWS_AS(find_entry("matn-upper(4)"), UnknownEntry);
  CHECK_THROWS_AS(find_entry("group-normal(abc)"), UnknownEntry);
  CHECK_THROWS_AS(find_entry("group-normal(9)"), FieldIncompatible);
  CHECK_THROWS_AS(find_entry("group-normal(2)"), FieldIncompatible);
  CHECK_THROWS_AS(find_entry("group-normal(3)"), FieldIncompatible);
}

TEST_CASE("field rules accept and reject the right ground fields") {
  auto quat = find_entry("quaternion-complex");
  CHECK_NOTHROW(require_compatible(quat, FieldSpec::rational()));
  CHECK_NOTHROW(require_compatible(quat, FieldSpec::gfp(7)));
  CHECK_NOTHROW(require_compatible(quat, FieldSpec::gfp(11)));
  CHECK_THROWS_AS(require_compatible(quat, FieldSpec::gfp(5)),
                  FieldIncompatible);
  CHECK_THROWS_AS(require_compatible(quat, FieldSpec::gfp(13)),
                  FieldIncompatible);

  auto grp = find_entry("group-normal(5)");
  CHECK_THROWS_AS(require_compatible(grp, FieldSpec::rational()),
                  FieldIncompatible);
  CHECK_THROWS_AS(require_compatible(grp, FieldSpec::gfp(7)),
                  FieldIncompatible);
  CHECK_NOTHROW(require_compatible(grp, FieldSpec::gfp(5)));

  CHECK_NOTHROW(require_compatible(find_entry("sweedler-h4"),
                                   FieldSpec::gfp(11)));
  CHECK_THROWS_AS(build_entry(quat, PrimeField(5)), FieldIncompatible);
}

TEST_CASE("field flags parse exactly") {
  CHECK(parse_field_flag("q") == FieldSpec::rational());
  CHECK(parse_field_flag("rational") == FieldSpec::rational());
  CHECK(parse_field_flag("gfp:7") == FieldSpec::gfp(7));
  CHECK_THROWS_AS(parse_field_flag("gfp:4"), ParseError);
  CHECK_THROWS_AS(parse_field_flag("gfp:"), ParseError);
  CHECK_THROWS_AS(parse_field_flag("gf(7)"), ParseError);
  CHECK_THROWS_AS(parse_field_flag(""), ParseError);
}

TEST_CASE("field blocks parse exactly") {
  CHECK(field_spec_of_json(Json{{"kind", "rational"}}) ==
        FieldSpec::rational());
  CHECK(field_spec_of_json(Json{{"kind", "gfp"}, {"p", 7}}) ==
        FieldSpec::gfp(7));
  CHECK_THROWS_AS(field_spec_of_json(Json{{"kind", "real"}}), ParseError);
  CHECK_THROWS_AS(field_spec_of_json(Json{{"kind", "gfp"}}), ParseError);
  CHECK_THROWS_AS(field_spec_of_json(Json{{"kind", "gfp"}, {"p", 6}}),
                  ParseError);
  CHECK_THROWS_AS(field_spec_of_json(Json::array()), ParseError);
}

TEST_CASE("malformed documents are rejected with parse errors") {
  Q f;
  Json good = extension_to_json(build_entry("matn-upper(2)", f));

  auto broken = [&](auto&& mutate) {
    Json j = good;
    mutate(j);
    return j;
  };

  CHECK_THROWS_AS(load_extension(Json::array(), f), ParseError);
  CHECK_THROWS_AS(load_extension(broken([](Json& j) { j.erase("dim"); }), f),
                  ParseError);
  CHECK_THROWS_AS(load_extension(broken([](Json& j) { j["dim"] = 0; }), f),
                  ParseError);
  CHECK_THROWS_AS(
      load_extension(broken([](Json& j) { j["unit"] = Json::array({"1"}); }),
                     f),
      ParseError);
  CHECK_THROWS_AS(load_extension(broken([](Json& j) { j.erase("mul"); }), f),
                  ParseError);
  CHECK_THROWS_AS(
      load_extension(broken([](Json& j) { j["mul"][0] = {0, 0, "x"}; }), f),
      ParseError);
  CHECK_THROWS_AS(
      load_extension(broken([](Json& j) { j["mul"][0][2] = 99; }), f),
      ParseError);
  CHECK_THROWS_AS(
      load_extension(broken([](Json& j) { j["mul"][0][3] = "abc"; }), f),
      ParseError);
  CHECK_THROWS_AS(
      load_extension(broken([](Json& j) { j["labels"] = {"a", "b"}; }), f),
      ParseError);
  CHECK_THROWS_AS(
      load_extension(broken([](Json& j) { j.erase("subalgebra"); }), f),
      ParseError);

  // structurally invalid: the span of a single non-unit element
  CHECK_THROWS_AS(
      load_extension(
          broken([](Json& j) {
            j["subalgebra"] = Json::array({Json::array({"0", "1", "0", "0"})});
          }),
          f),
      StructureError);
}

TEST_CASE("oversized inputs hit the ambient size guard") {
  Q f;
  Json j;
  j["field"] = {{"kind", "rational"}};
  j["dim"] = 12;  // 144 ambient tensor coordinates, above the default cap
  j["unit"] = Json::array();
  for (int i = 0; i < 12; ++i) j["unit"].push_back(i == 0 ? "1" : "0");
  j["mul"] = Json::array();
  j["subalgebra"] = Json::array({j["unit"]});
  CHECK_THROWS_AS(load_extension(j, f), ParseError);
  CHECK_NOTHROW(check_size_guard(11));
  CHECK_THROWS_AS(check_size_guard(12), ParseError);
}

TEST_CASE("check selections parse the documented tokens") {
  auto sel = parse_check_selection("d2, hopf");
  CHECK_FALSE(sel.all);
  REQUIRE(sel.groups.size() == 2);
  CHECK(sel.groups[0] == CheckGroup::d2);
  CHECK(sel.groups[1] == CheckGroup::hopf);
  CHECK(parse_check_selection("all").all);
  CHECK(parse_check_selection("d2,all,pi").all);
  CHECK_THROWS_AS(parse_check_selection("bogus"), ParseError);
  CHECK_THROWS_AS(parse_check_selection(""), ParseError);
}
