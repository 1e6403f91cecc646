#pragma once

#include <string>
#include <vector>

#include "matrix.hpp"
#include "quotient.hpp"

namespace d2hopf {

/// Thrown when structure constants fail associativity/unit validation or a
/// claimed subalgebra is not one.
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite-dimensional unital associative algebra over F, presented by
/// structure constants on a distinguished basis e_0..e_{n-1}.
template <class F>
struct Algebra {
  F field{};
  std::size_t n = 0;
  std::vector<Vec<F>> table;  // table[i*n+j] = coordinates of e_i * e_j
  Vec<F> unit;
  std::vector<std::string> labels;

  Algebra() = default;
  Algebra(F f, std::size_t dim)
      : field(f), n(dim), table(dim * dim, vec_zero(f, dim)),
        unit(vec_zero(f, dim)) {}

  const Vec<F>& basis_product(std::size_t i, std::size_t j) const {
    return table[i * n + j];
  }
  Vec<F>& basis_product(std::size_t i, std::size_t j) {
    return table[i * n + j];
  }

  Vec<F> multiply(const Vec<F>& u, const Vec<F>& v) const {
    Vec<F> out = vec_zero(field, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (field.is_zero(u[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (field.is_zero(v[j])) continue;
        vec_addmul(field, out, field.mul(u[i], v[j]), basis_product(i, j));
      }
    }
    return out;
  }

  /// Operator x -> v*x.
  Matrix<F> left_mult(const Vec<F>& v) const {
    Matrix<F> m(field, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Vec<F> col = vec_zero(field, n);
      for (std::size_t i = 0; i < n; ++i)
        if (!field.is_zero(v[i]))
          vec_addmul(field, col, v[i], basis_product(i, j));
      for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  /// Operator x -> x*v.
  Matrix<F> right_mult(const Vec<F>& v) const {
    Matrix<F> m(field, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Vec<F> col = vec_zero(field, n);
      for (std::size_t i = 0; i < n; ++i)
        if (!field.is_zero(v[i]))
          vec_addmul(field, col, v[i], basis_product(j, i));
      for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  Vec<F> basis_vec(std::size_t i) const {
    Vec<F> v = vec_zero(field, n);
    v[i] = field.one();
    return v;
  }

  std::string label(std::size_t i) const {
    if (i < labels.size()) return labels[i];
    return "e" + std::to_string(i);
  }

  /// Associativity on all basis triples and two-sided unit law. Quadratic
  /// data checked cubically; catalog dimensions keep this cheap, user input
  /// needs the guard.
  void validate() const {
    if (table.size() != n * n) throw StructureError("algebra: table size");
    for (std::size_t i = 0; i < n; ++i) {
      Vec<F> e = basis_vec(i);
      if (!vec_eq(field, multiply(unit, e), e) ||
          !vec_eq(field, multiply(e, unit), e))
        throw StructureError("algebra: unit law fails at basis " +
                             std::to_string(i));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vec<F> lhs = multiply(basis_product(i, j), basis_vec(k));
          Vec<F> rhs = multiply(basis_vec(i), basis_product(j, k));
          if (!vec_eq(field, lhs, rhs))
            throw StructureError("algebra: associativity fails at (" +
                                 std::to_string(i) + "," + std::to_string(j) +
                                 "," + std::to_string(k) + ")");
        }
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!vec_eq(field, basis_product(i, j), basis_product(j, i)))
          return false;
    return true;
  }

  /// Center {a : ab = ba for all b}, as a canonical subspace.
  Subspace<F> center() const {
    Matrix<F> stacked(field, n * n, n);
    for (std::size_t b = 0; b < n; ++b) {
      Matrix<F> comm =
          mat_sub(left_mult(basis_vec(b)), right_mult(basis_vec(b)));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          stacked.at(b * n + i, j) = comm.at(i, j);
    }
    return Subspace<F>::from_rows(nullspace(stacked));
  }
};

/// Checks that the row span of `rows` is a unital subalgebra of A; returns a
/// diagnostic naming the first violation, or nothing when valid.
template <class F>
std::optional<std::string> subalgebra_defect(const Algebra<F>& A,
                                             const Matrix<F>& rows) {
  auto span = Subspace<F>::from_rows(rows);
  if (!span.contains(A.unit)) return "subalgebra does not contain the unit";
  for (std::size_t i = 0; i < span.dim(); ++i)
    for (std::size_t j = 0; j < span.dim(); ++j) {
      Vec<F> prod = A.multiply(span.basis.row(i), span.basis.row(j));
      if (!span.contains(prod))
        return "subalgebra not closed: product of basis rows " +
               std::to_string(i) + " and " + std::to_string(j) +
               " leaves the span";
    }
  return std::nullopt;
}

/// Extension A | B: a validated unital subalgebra with cached action
/// operators of the canonical B-basis on A.
template <class F>
struct Extension {
  Algebra<F> A;
  Subspace<F> B;
  std::vector<Matrix<F>> b_left;   // x -> b_i * x
  std::vector<Matrix<F>> b_right;  // x -> x * b_i

  static Extension make(Algebra<F> algebra, const Matrix<F>& b_rows) {
    algebra.validate();
    if (auto defect = subalgebra_defect(algebra, b_rows))
      throw StructureError(*defect);
    Extension e;
    e.A = std::move(algebra);
    e.B = Subspace<F>::from_rows(b_rows);
    for (std::size_t i = 0; i < e.B.dim(); ++i) {
      e.b_left.push_back(e.A.left_mult(e.B.basis.row(i)));
      e.b_right.push_back(e.A.right_mult(e.B.basis.row(i)));
    }
    return e;
  }

  const F& field() const { return A.field; }
  std::size_t dimA() const { return A.n; }
  std::size_t dimB() const { return B.dim(); }
  Vec<F> b_vec(std::size_t i) const { return B.basis.row(i); }
};

/// Centralizer {a in A : ab = ba for every b in B}, the base ring R of the
/// dual bialgebroids. Always a unital subalgebra.
template <class F>
Subspace<F> centralizer(const Extension<F>& E) {
  const auto& f = E.field();
  std::size_t n = E.dimA();
  Matrix<F> stacked(f, E.dimB() * n, n);
  for (std::size_t b = 0; b < E.dimB(); ++b) {
    Matrix<F> comm = mat_sub(E.b_left[b], E.b_right[b]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        stacked.at(b * n + i, j) = comm.at(i, j);
  }
  return Subspace<F>::from_rows(nullspace(stacked));
}

/// A coordinate space with commuting left and right A-actions.
template <class F>
struct Bimodule {
  F field{};
  std::size_t dim = 0;
  std::vector<Matrix<F>> left;   // indexed by A-basis
  std::vector<Matrix<F>> right;  // indexed by A-basis

  Matrix<F> left_op(const Vec<F>& a) const { return combine(left, a); }
  Matrix<F> right_op(const Vec<F>& a) const { return combine(right, a); }

  Vec<F> act_left(const Vec<F>& a, const Vec<F>& p) const {
    Vec<F> out = vec_zero(field, dim);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!field.is_zero(a[i]))
        vec_addmul(field, out, a[i], mat_apply(left[i], p));
    return out;
  }
  Vec<F> act_right(const Vec<F>& p, const Vec<F>& a) const {
    Vec<F> out = vec_zero(field, dim);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!field.is_zero(a[i]))
        vec_addmul(field, out, a[i], mat_apply(right[i], p));
    return out;
  }

  /// Left action is a unital homomorphism, right action a unital
  /// anti-homomorphism, and the two commute.
  void validate(const Algebra<F>& A) const {
    const F& f = field;
    auto id = Matrix<F>::identity(f, dim);
    if (left_op(A.unit) != id || right_op(A.unit) != id)
      throw StructureError("bimodule: unit does not act as identity");
    for (std::size_t i = 0; i < A.n; ++i)
      for (std::size_t j = 0; j < A.n; ++j) {
        const Vec<F>& prod = A.basis_product(i, j);
        if (mat_mul(left[i], left[j]) != left_op(prod))
          throw StructureError("bimodule: left action not multiplicative");
        if (mat_mul(right[j], right[i]) != right_op(prod))
          throw StructureError("bimodule: right action not anti-multiplicative");
        if (mat_mul(left[i], right[j]) != mat_mul(right[j], left[i]))
          throw StructureError("bimodule: left and right actions do not commute");
      }
  }

 private:
  Matrix<F> combine(const std::vector<Matrix<F>>& ops, const Vec<F>& a) const {
    Matrix<F> m(field, dim, dim);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!field.is_zero(a[i])) m = mat_add(m, mat_scale(a[i], ops[i]));
    return m;
  }
};

/// A as an A-A bimodule by left and right multiplication.
template <class F>
Bimodule<F> regular_bimodule(const Algebra<F>& A) {
  Bimodule<F> m;
  m.field = A.field;
  m.dim = A.n;
  for (std::size_t i = 0; i < A.n; ++i) {
    m.left.push_back(A.left_mult(A.basis_vec(i)));
    m.right.push_back(A.right_mult(A.basis_vec(i)));
  }
  return m;
}

}  // namespace d2hopf
