#pragma once

#include <optional>
#include <vector>

#include "matrix.hpp"

namespace d2hopf {

/// A subspace of K^n held by its canonical RREF basis. Coordinates of a
/// member vector are read off the pivot columns, so they are unique and
/// deterministic for a given span.
template <class F>
struct Subspace {
  F field{};
  std::size_t ambient = 0;
  Matrix<F> basis;  // rows form the canonical RREF basis
  std::vector<std::size_t> pivots;

  Subspace() = default;

  static Subspace from_rows(const Matrix<F>& rows) {
    Subspace s;
    s.field = rows.field;
    s.ambient = rows.cols;
    auto r = rref(rows);
    s.basis = r.mat;
    s.pivots = r.pivots;
    return s;
  }

  std::size_t dim() const { return basis.rows; }

  /// Membership coordinates, or nullopt when v is outside the span.
  std::optional<Vec<F>> coords(const Vec<F>& v) const {
    Vec<F> w = v;
    Vec<F> c(dim(), field.zero());
    for (std::size_t i = 0; i < dim(); ++i) {
      c[i] = w[pivots[i]];
      if (!field.is_zero(c[i])) vec_addmul(field, w, field.neg(c[i]), basis.row(i));
    }
    if (!vec_is_zero(field, w)) return std::nullopt;
    return c;
  }

  bool contains(const Vec<F>& v) const { return coords(v).has_value(); }

  Vec<F> from_coords(const Vec<F>& c) const {
    Vec<F> v = vec_zero(field, ambient);
    for (std::size_t i = 0; i < dim(); ++i) vec_addmul(field, v, c[i], basis.row(i));
    return v;
  }

  bool equals(const Subspace& o) const {
    return ambient == o.ambient && basis == o.basis;
  }

  bool contains_subspace(const Subspace& o) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.basis.row(i))) return false;
    return true;
  }
};

/// K^n modulo the span of a set of relation vectors.
///
/// The canonical representative of a class is the ambient vector with zero
/// entries in every relation pivot column; quotient coordinates are the
/// entries at the non-pivot (free) columns. project(lift(q)) == q holds
/// exactly, and lift(project(v)) - v always lies in the relation span.
template <class F>
struct QuotientSpace {
  F field{};
  std::size_t ambient = 0;
  Matrix<F> rel;  // canonical RREF of the relation span
  std::vector<std::size_t> rel_pivots;
  std::vector<std::size_t> free_cols;

  QuotientSpace() = default;

  static QuotientSpace from_relations(F f, std::size_t ambient_dim,
                                      const Matrix<F>& relations) {
    QuotientSpace q;
    q.field = f;
    q.ambient = ambient_dim;
    if (relations.rows > 0 && relations.cols != ambient_dim)
      throw std::invalid_argument("quotient: relation width != ambient dim");
    Matrix<F> rels = relations;
    if (rels.rows == 0) rels = Matrix<F>(f, 0, ambient_dim);
    auto r = rref(rels);
    q.rel = r.mat;
    q.rel_pivots = r.pivots;
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : q.rel_pivots) is_pivot[p] = true;
    for (std::size_t j = 0; j < ambient_dim; ++j)
      if (!is_pivot[j]) q.free_cols.push_back(j);
    return q;
  }

  std::size_t dim() const { return free_cols.size(); }

  /// Quotient coordinates of the class of v.
  Vec<F> project(const Vec<F>& v) const {
    Vec<F> w = v;
    for (std::size_t i = 0; i < rel.rows; ++i) {
      const auto& c = w[rel_pivots[i]];
      if (!field.is_zero(c)) vec_addmul(field, w, field.neg(c), rel.row(i));
    }
    Vec<F> q(dim(), field.zero());
    for (std::size_t k = 0; k < dim(); ++k) q[k] = w[free_cols[k]];
    return q;
  }

  /// Canonical ambient representative (zero at every relation pivot).
  Vec<F> lift(const Vec<F>& q) const {
    Vec<F> v = vec_zero(field, ambient);
    for (std::size_t k = 0; k < dim(); ++k) v[free_cols[k]] = q[k];
    return v;
  }

  Matrix<F> proj_mat() const {
    Matrix<F> m(field, dim(), ambient);
    for (std::size_t j = 0; j < ambient; ++j) {
      Vec<F> e = vec_zero(field, ambient);
      e[j] = field.one();
      Vec<F> q = project(e);
      for (std::size_t i = 0; i < dim(); ++i) m.at(i, j) = q[i];
    }
    return m;
  }

  Matrix<F> lift_mat() const {
    Matrix<F> m(field, ambient, dim());
    for (std::size_t k = 0; k < dim(); ++k) m.at(free_cols[k], k) = field.one();
    return m;
  }

  /// Induced action on the quotient of an ambient linear map, checked to
  /// descend (it must send the relation span into itself).
  Matrix<F> induced_map(const Matrix<F>& ambient_map) const {
    if (ambient_map.rows != ambient || ambient_map.cols != ambient)
      throw std::invalid_argument("induced_map: shape mismatch");
    for (std::size_t i = 0; i < rel.rows; ++i) {
      Vec<F> img = mat_apply(ambient_map, rel.row(i));
      if (!vec_is_zero(field, project(img)))
        throw std::domain_error("induced_map: map does not descend to quotient");
    }
    Matrix<F> m(field, dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k) {
      Vec<F> e = vec_zero(field, dim());
      e[k] = field.one();
      Vec<F> q = project(mat_apply(ambient_map, lift(e)));
      for (std::size_t i = 0; i < dim(); ++i) m.at(i, k) = q[i];
    }
    return m;
  }
};

}  // namespace d2hopf
