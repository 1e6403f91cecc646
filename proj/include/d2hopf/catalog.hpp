#pragma once

#include <string>
#include <vector>

#include "examples.hpp"
#include "io.hpp"

namespace d2hopf {

struct UnknownEntry : ParseError {
  using ParseError::ParseError;
};

struct FieldIncompatible : ParseError {
  using ParseError::ParseError;
};

/// A built-in extension: its constructor lives in build_entry, the flags
/// record what the solver is expected to find (the catalog test fails on any
/// mismatch), and the field rule gates which ground fields are admissible.
struct CatalogEntry {
  enum class FieldRule { any, rational_or_gfp_three_mod_four, gfp_pinned };

  std::string id;
  std::string summary;
  std::string fields;  // human-readable requirement, shown by `list`
  FieldRule rule = FieldRule::any;
  FieldSpec default_field;
  bool d2_left = false;
  bool d2_right = false;
  bool irreducible = false;
  std::string note;
};

/// The built-in entries in stable listing order.
inline const std::vector<CatalogEntry>& catalog() {
  using R = CatalogEntry::FieldRule;
  static const std::vector<CatalogEntry> entries = {
      {"trivial-B-equals-A",
       "M_2 over itself, the degenerate base case",
       "rational or gfp", R::any, FieldSpec::rational(), true, true, true,
       "the centralizer is the one-dimensional center"},
      {"matn-upper(2)",
       "M_2 over its upper-triangular subalgebra",
       "rational or gfp", R::any, FieldSpec::rational(), true, true, true,
       "trivial centralizer"},
      {"matn-upper(3)",
       "M_3 over its upper-triangular subalgebra (stress entry)",
       "rational or gfp", R::any, FieldSpec::rational(), true, true, true,
       "trivial centralizer"},
      {"matn-diag(2)",
       "M_2 over its diagonal subalgebra",
       "rational or gfp", R::any, FieldSpec::rational(), true, true, true,
       "the centralizer equals the diagonal base, which is separable"},
      {"quaternion-complex",
       "the quaternions over the subalgebra spanned by 1 and i",
       "rational, or gfp with p = 3 mod 4", R::rational_or_gfp_three_mod_four,
       FieldSpec::rational(), true, true, true,
       "the centralizer equals the base and is separable"},
      {"sweedler-h4",
       "the four-dimensional algebra <g, x | g^2 = 1, x^2 = 0, xg = -gx> "
       "over the subalgebra spanned by 1 and x",
       "rational or gfp", R::any, FieldSpec::rational(), true, true, false,
       "the centralizer span{1, x, gx} strictly contains the base"},
      {"group-normal(5)",
       "the group algebra of S_3 over the subalgebra of the normal "
       "subgroup A_3",
       "gfp only, with p not dividing 6", R::gfp_pinned, FieldSpec::gfp(5),
       true, true, false,
       "the centralizer contains the transposition class sum, which lies "
       "outside the base"}};
  return entries;
}

/// Resolves an id to its catalog row. The group entry is a family: bare
/// `group-normal` means the default modulus, and `group-normal(<p>)` is
/// accepted for any admissible odd prime p not dividing the group order.
inline CatalogEntry find_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  if (id == "group-normal") {
    for (const auto& e : catalog())
      if (e.id == "group-normal(5)") return e;
  }
  if (id.rfind("group-normal(", 0) == 0 && id.back() == ')') {
    std::string num = id.substr(13, id.size() - 14);
    std::uint64_t p = 0;
    std::size_t used = 0;
    try {
      p = std::stoull(num, &used);
    } catch (const std::exception&) {
      throw UnknownEntry("unknown catalog entry '" + id + "'");
    }
    if (used != num.size())
      throw UnknownEntry("unknown catalog entry '" + id + "'");
    try {
      PrimeField check(p);
    } catch (const ParseError&) {
      throw FieldIncompatible("group-normal: the modulus must be an odd "
                              "prime, got " + num);
    }
    if (p % 2 == 0 || p % 3 == 0)
      throw FieldIncompatible("group-normal: the modulus must not divide "
                              "the group order 6, got " + num);
    CatalogEntry e = find_entry("group-normal(5)");
    e.id = id;
    e.default_field = FieldSpec::gfp(p);
    return e;
  }
  throw UnknownEntry("unknown catalog entry '" + id + "'");
}

/// Checks a requested ground field against the entry's field rule.
inline void require_compatible(const CatalogEntry& e, const FieldSpec& fs) {
  switch (e.rule) {
    case CatalogEntry::FieldRule::any:
      return;
    case CatalogEntry::FieldRule::rational_or_gfp_three_mod_four:
      if (fs.kind == FieldSpec::Kind::gfp && fs.p % 4 != 3)
        throw FieldIncompatible(
            e.id + ": needs rational coefficients or gfp with p = 3 mod 4, "
            "got " + fs.name());
      return;
    case CatalogEntry::FieldRule::gfp_pinned:
      if (fs != e.default_field)
        throw FieldIncompatible(e.id + ": is defined over " +
                                e.default_field.name() + ", got " +
                                fs.name());
      return;
  }
}

/// Builds the extension of a catalog row over the given field.
template <class F>
Extension<F> build_entry(const CatalogEntry& e, F f) {
  require_compatible(e, field_spec_of(f));
  if (e.id == "trivial-B-equals-A")
    return Extension<F>::make(matrix_algebra(f, 2),
                              Matrix<F>::identity(f, 4));
  if (e.id == "matn-upper(2)")
    return Extension<F>::make(matrix_algebra(f, 2),
                              upper_triangular_rows(f, 2));
  if (e.id == "matn-upper(3)")
    return Extension<F>::make(matrix_algebra(f, 3),
                              upper_triangular_rows(f, 3));
  if (e.id == "matn-diag(2)")
    return Extension<F>::make(matrix_algebra(f, 2), diagonal_rows(f, 2));
  if (e.id == "quaternion-complex")
    return Extension<F>::make(quaternion_algebra(f),
                              leading_basis_rows(f, 4, 2));
  if (e.id == "sweedler-h4") {
    Matrix<F> rows(f, 2, 4);
    rows.at(0, 0) = f.one();  // 1
    rows.at(1, 2) = f.one();  // x
    return Extension<F>::make(sweedler_algebra(f), rows);
  }
  if (e.id.rfind("group-normal(", 0) == 0)
    return Extension<F>::make(s3_algebra(f), leading_basis_rows(f, 6, 3));
  throw UnknownEntry("unknown catalog entry '" + e.id + "'");
}

template <class F>
Extension<F> build_entry(const std::string& id, F f) {
  return build_entry(find_entry(id), f);
}

}  // namespace d2hopf
