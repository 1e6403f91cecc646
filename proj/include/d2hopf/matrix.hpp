#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fields.hpp"

namespace d2hopf {

template <class F>
using Vec = std::vector<typename F::Elem>;

/// Dense row-major matrix over a field descriptor F.
template <class F>
struct Matrix {
  using Elem = typename F::Elem;

  F field{};
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(F f, std::size_t r, std::size_t c)
      : field(f), rows(r), cols(c), a(r * c, f.zero()) {}

  Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Matrix identity(F f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  Vec<F> row(std::size_t i) const {
    return Vec<F>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
  }

  Vec<F> col(std::size_t j) const {
    Vec<F> v(rows, field.zero());
    for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
  }

  void set_row(std::size_t i, const Vec<F>& v) {
    for (std::size_t j = 0; j < cols; ++j) at(i, j) = v[j];
  }

  bool operator==(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!field.eq(a[k], o.a[k])) return false;
    return true;
  }
};

template <class F>
Vec<F> vec_zero(F f, std::size_t n) {
  return Vec<F>(n, f.zero());
}

template <class F>
bool vec_is_zero(F f, const Vec<F>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

template <class F>
bool vec_eq(F f, const Vec<F>& u, const Vec<F>& v) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!f.eq(u[i], v[i])) return false;
  return true;
}

template <class F>
void vec_addmul(F f, Vec<F>& dst, const typename F::Elem& c, const Vec<F>& src) {
  if (f.is_zero(c)) return;
  for (std::size_t i = 0; i < dst.size(); ++i)
    if (!f.is_zero(src[i])) dst[i] = f.add(dst[i], f.mul(c, src[i]));
}

template <class F>
Vec<F> vec_add(F f, const Vec<F>& u, const Vec<F>& v) {
  Vec<F> r = u;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(r[i], v[i]);
  return r;
}

template <class F>
Vec<F> vec_sub(F f, const Vec<F>& u, const Vec<F>& v) {
  Vec<F> r = u;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(r[i], v[i]);
  return r;
}

template <class F>
Vec<F> vec_scale(F f, const typename F::Elem& c, const Vec<F>& v) {
  Vec<F> r = v;
  for (auto& x : r) x = f.mul(c, x);
  return r;
}

template <class F>
Matrix<F> mat_mul(const Matrix<F>& m, const Matrix<F>& n) {
  if (m.cols != n.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  Matrix<F> r(m.field, m.rows, n.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t k = 0; k < m.cols; ++k) {
      const auto& c = m.at(i, k);
      if (m.field.is_zero(c)) continue;
      for (std::size_t j = 0; j < n.cols; ++j) {
        if (m.field.is_zero(n.at(k, j))) continue;
        r.at(i, j) = m.field.add(r.at(i, j), m.field.mul(c, n.at(k, j)));
      }
    }
  return r;
}

template <class F>
Vec<F> mat_apply(const Matrix<F>& m, const Vec<F>& v) {
  if (m.cols != v.size()) throw std::invalid_argument("mat_apply: shape mismatch");
  Vec<F> r = vec_zero(m.field, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (m.field.is_zero(m.at(i, j)) || m.field.is_zero(v[j])) continue;
      r[i] = m.field.add(r[i], m.field.mul(m.at(i, j), v[j]));
    }
  return r;
}

template <class F>
Matrix<F> mat_add(const Matrix<F>& m, const Matrix<F>& n) {
  if (m.rows != n.rows || m.cols != n.cols)
    throw std::invalid_argument("mat_add: shape mismatch");
  Matrix<F> r = m;
  for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = m.field.add(r.a[k], n.a[k]);
  return r;
}

template <class F>
Matrix<F> mat_sub(const Matrix<F>& m, const Matrix<F>& n) {
  if (m.rows != n.rows || m.cols != n.cols)
    throw std::invalid_argument("mat_sub: shape mismatch");
  Matrix<F> r = m;
  for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = m.field.sub(r.a[k], n.a[k]);
  return r;
}

template <class F>
Matrix<F> mat_scale(const typename F::Elem& c, const Matrix<F>& m) {
  Matrix<F> r = m;
  for (auto& x : r.a) x = m.field.mul(c, x);
  return r;
}

template <class F>
Matrix<F> mat_transpose(const Matrix<F>& m) {
  Matrix<F> r(m.field, m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& m) {
  Matrix<F> r(m.field, m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

template <class F>
bool mat_is_zero(const Matrix<F>& m) {
  for (const auto& x : m.a)
    if (!m.field.is_zero(x)) return false;
  return true;
}

/// Kronecker product; block (i,j) of the result is m(i,j) * n.
template <class F>
Matrix<F> kron(const Matrix<F>& m, const Matrix<F>& n) {
  Matrix<F> r(m.field, m.rows * n.rows, m.cols * n.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (m.field.is_zero(m.at(i, j))) continue;
      for (std::size_t k = 0; k < n.rows; ++k)
        for (std::size_t l = 0; l < n.cols; ++l)
          r.at(i * n.rows + k, j * n.cols + l) = m.field.mul(m.at(i, j), n.at(k, l));
    }
  return r;
}

/// Incrementally maintained reduced row echelon form of a growing row span.
///
/// Rows are fully reduced against each other after every insertion, and kept
/// sorted by pivot column, so the stored basis depends only on the row span,
/// never on insertion order. That property is what makes every derived basis
/// in the library canonical.
template <class F>
struct Echelon {
  F field{};
  std::size_t cols = 0;
  std::vector<Vec<F>> rows;
  std::vector<std::size_t> pivots;

  Echelon() = default;
  Echelon(F f, std::size_t c) : field(f), cols(c) {}

  /// Reduce v against the current rows in place; afterwards v has zero
  /// entries in every pivot column.
  void reduce(Vec<F>& v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& c = v[pivots[i]];
      if (field.is_zero(c)) continue;
      vec_addmul(field, v, field.neg(c), rows[i]);
    }
  }

  /// Insert the row if independent; returns true when the rank grew.
  bool insert(Vec<F> v) {
    reduce(v);
    std::size_t lead = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (!field.is_zero(v[j])) {
        lead = j;
        break;
      }
    if (lead == cols) return false;
    const auto invl = field.inv(v[lead]);
    for (auto& x : v) x = field.mul(invl, x);
    // Back-substitute into the stored rows.
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& c = rows[i][lead];
      if (!field.is_zero(c)) vec_addmul(field, rows[i], field.neg(c), v);
    }
    std::size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < lead) ++pos;
    rows.insert(rows.begin() + pos, std::move(v));
    pivots.insert(pivots.begin() + pos, lead);
    return true;
  }

  std::size_t rank() const { return rows.size(); }

  Matrix<F> to_matrix() const {
    Matrix<F> m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
  }
};

struct RrefResult_tag {};

template <class F>
struct RrefResult {
  Matrix<F> mat;                    // canonical RREF, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column per row, ascending
};

/// Reduced row echelon form; canonical in the row span of m.
template <class F>
RrefResult<F> rref(const Matrix<F>& m) {
  Echelon<F> e(m.field, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) e.insert(m.row(i));
  return {e.to_matrix(), e.pivots};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

/// Canonical basis of { v : m v = 0 }, one row per basis vector.
template <class F>
Matrix<F> nullspace(const Matrix<F>& m) {
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Echelon<F> basis(m.field, m.cols);
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<F> v = vec_zero(m.field, m.cols);
    v[f] = m.field.one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = m.field.neg(r.mat.at(i, f));
    basis.insert(std::move(v));
  }
  return basis.to_matrix();
}

/// One solution of m x = b (free variables pinned to zero), or nullopt when
/// the system is inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
  if (m.rows != b.size()) throw std::invalid_argument("solve: shape mismatch");
  Echelon<F> e(m.field, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    Vec<F> row = m.row(i);
    row.push_back(b[i]);
    e.insert(std::move(row));
  }
  for (auto p : e.pivots)
    if (p == m.cols) return std::nullopt;
  Vec<F> x = vec_zero(m.field, m.cols);
  for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = e.rows[i][m.cols];
  return x;
}

/// Matrix inverse; throws when singular.
template <class F>
Matrix<F> mat_inverse(const Matrix<F>& m) {
  if (m.rows != m.cols) throw std::invalid_argument("mat_inverse: not square");
  const std::size_t n = m.rows;
  Echelon<F> e(m.field, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec<F> row = vec_zero(m.field, 2 * n);
    for (std::size_t j = 0; j < n; ++j) row[j] = m.at(i, j);
    row[n + i] = m.field.one();
    e.insert(std::move(row));
  }
  if (e.rank() != n || e.pivots.back() >= n)
    throw std::domain_error("mat_inverse: singular matrix");
  Matrix<F> inv(m.field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.rows[i][n + j];
  return inv;
}

template <class F>
std::string mat_to_string(const Matrix<F>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (std::size_t j = 0; j < m.cols; ++j)
      os << (j ? " " : "") << m.field.to_string(m.at(i, j));
    os << "]" << (i + 1 == m.rows ? "]" : "\n");
  }
  if (m.rows == 0) os << "[]";
  return os.str();
}

template <class F>
std::string vec_to_string(F f, const Vec<F>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? " " : "") << f.to_string(v[i]);
  os << ")";
  return os.str();
}

}  // namespace d2hopf
