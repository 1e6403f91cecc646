#pragma once

#include <array>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace d2hopf {

/// Full matrix algebra M_n with basis E_{ij} at index i*n + j.
template <class F>
Algebra<F> matrix_algebra(F f, std::size_t n) {
  Algebra<F> A(f, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        // E_{ij} E_{jk} = E_{ik}
        A.basis_product(i * n + j, j * n + k)[i * n + k] = f.one();
  for (std::size_t i = 0; i < n; ++i) A.unit[i * n + i] = f.one();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      A.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  return A;
}

/// Basis rows of the upper-triangular subalgebra of M_n.
template <class F>
Matrix<F> upper_triangular_rows(F f, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) idx.push_back({i, j});
  Matrix<F> rows(f, idx.size(), n * n);
  for (std::size_t r = 0; r < idx.size(); ++r)
    rows.at(r, idx[r].first * n + idx[r].second) = f.one();
  return rows;
}

/// Basis rows of the diagonal subalgebra of M_n.
template <class F>
Matrix<F> diagonal_rows(F f, std::size_t n) {
  Matrix<F> rows(f, n, n * n);
  for (std::size_t i = 0; i < n; ++i) rows.at(i, i * n + i) = f.one();
  return rows;
}

/// Quaternion algebra with basis 1, i, j, k: i^2 = j^2 = -1, ij = k = -ji.
template <class F>
Algebra<F> quaternion_algebra(F f) {
  Algebra<F> A(f, 4);
  A.labels = {"1", "i", "j", "k"};
  auto one = f.one();
  auto neg = f.neg(one);
  auto set = [&](std::size_t a, std::size_t b, std::size_t c,
                 typename F::Elem s) { A.basis_product(a, b)[c] = s; };
  for (std::size_t a = 0; a < 4; ++a) {
    set(0, a, a, one);
    if (a) set(a, 0, a, one);
  }
  set(1, 1, 0, neg);
  set(2, 2, 0, neg);
  set(3, 3, 0, neg);
  set(1, 2, 3, one);
  set(2, 1, 3, neg);
  set(2, 3, 1, one);
  set(3, 2, 1, neg);
  set(3, 1, 2, one);
  set(1, 3, 2, neg);
  A.unit[0] = one;
  return A;
}

/// Four-dimensional algebra <g, x | g^2 = 1, x^2 = 0, xg = -gx> with basis
/// 1, g, x, gx.
template <class F>
Algebra<F> sweedler_algebra(F f) {
  Algebra<F> A(f, 4);
  A.labels = {"1", "g", "x", "gx"};
  auto one = f.one();
  auto neg = f.neg(one);
  auto set = [&](std::size_t a, std::size_t b, std::size_t c,
                 typename F::Elem s) { A.basis_product(a, b)[c] = s; };
  for (std::size_t a = 0; a < 4; ++a) {
    set(0, a, a, one);
    if (a) set(a, 0, a, one);
  }
  set(1, 1, 0, one);   // g g = 1
  set(1, 2, 3, one);   // g x = gx
  set(2, 1, 3, neg);   // x g = -gx
  set(1, 3, 2, one);   // g gx = x
  set(3, 1, 2, neg);   // gx g = -x
  // x x = 0, x gx = 0, gx x = 0, gx gx = 0
  A.unit[0] = one;
  return A;
}

/// Group algebra from a multiplication table t[i][j] = index of g_i g_j,
/// with g_0 the neutral element.
template <class F>
Algebra<F> group_algebra(F f, const std::vector<std::vector<std::size_t>>& t,
                         std::vector<std::string> names = {}) {
  std::size_t n = t.size();
  Algebra<F> A(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      A.basis_product(i, j)[t[i][j]] = f.one();
  A.unit[0] = f.one();
  A.labels = std::move(names);
  return A;
}

/// Symmetric group S_3 with basis order e, (123), (132), (12), (13), (23).
template <class F>
Algebra<F> s3_algebra(F f) {
  // Indices: 0 = e, 1 = (123), 2 = (132), 3 = (12), 4 = (13), 5 = (23).
  // Products composed left-to-right as permutations acting on the right:
  // (g*h)(x) = h(g(x)).
  auto perm = [](std::size_t idx) -> std::array<std::size_t, 3> {
    switch (idx) {
      case 0: return {0, 1, 2};
      case 1: return {1, 2, 0};  // (123): 1->2->3->1
      case 2: return {2, 0, 1};  // (132)
      case 3: return {1, 0, 2};  // (12)
      case 4: return {2, 1, 0};  // (13)
      default: return {0, 2, 1};  // (23)
    }
  };
  auto find = [&](const std::array<std::size_t, 3>& p) -> std::size_t {
    for (std::size_t i = 0; i < 6; ++i)
      if (perm(i) == p) return i;
    throw std::logic_error("s3: not a permutation");
  };
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      auto a = perm(i), b = perm(j);
      std::array<std::size_t, 3> c{};
      for (std::size_t x = 0; x < 3; ++x) c[x] = b[a[x]];
      t[i][j] = find(c);
    }
  return group_algebra(f, t, {"e", "(123)", "(132)", "(12)", "(13)", "(23)"});
}

/// Basis rows of the group subalgebra spanned by the first m basis elements.
template <class F>
Matrix<F> leading_basis_rows(F f, std::size_t n, std::size_t m) {
  Matrix<F> rows(f, m, n);
  for (std::size_t i = 0; i < m; ++i) rows.at(i, i) = f.one();
  return rows;
}

}  // namespace d2hopf
