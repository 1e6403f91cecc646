#pragma once

#include <optional>
#include <vector>

#include "homspace.hpp"
#include "tensor.hpp"

namespace d2hopf {

enum class Side { left, right };

inline const char* side_name(Side s) {
  return s == Side::left ? "left" : "right";
}

/// A depth-two quasibasis. Elements t[i] are classes in the tensor-square
/// quotient coordinates; ops[i] are operators on A. The defining identities:
///   left:  x (x) y = sum_i t_i . (beta_i(x) y)   with ops[i] = beta_i,
///   right: x (x) y = sum_j (x gamma_j(y)) . u_j  with ops[j] = gamma_j.
template <class F>
struct QuasiBasis {
  Side side = Side::left;
  std::vector<Vec<F>> t;
  std::vector<Matrix<F>> ops;

  std::size_t size() const { return t.size(); }
};

/// Search result: either a quasibasis, or the rank growth observed when the
/// identity map is adjoined to the span of the available composites (zero
/// exactly when the extension is depth two on the requested side).
template <class F>
struct QuasiBasisSearch {
  std::optional<QuasiBasis<F>> basis;
  std::size_t defect = 0;
};

/// Decides one-sided depth-twoness by expressing the identity of the tensor
/// square as a combination of composites A (x)_B A -> A -> A (x)_B A through
/// the two hom spaces with matching linearity tags, then reading the
/// quasibasis elements off the solution.
template <class F>
QuasiBasisSearch<F> find_quasibasis(const APowers<F>& pows, Side side) {
  const Extension<F>& E = *pows.E;
  const F f = E.field();
  const std::size_t n = E.dimA();
  const std::size_t d = pows.dim(2);
  auto P = pows.bimodule(2);

  // Hom spaces F: A -> A(x)_B A and G: A(x)_B A -> A. For the left hand both
  // are left-B and right-A linear; for the right hand, left-A and right-B.
  std::vector<Matrix<F>> domF_l, codF_l, domF_r, codF_r;
  std::vector<Matrix<F>> domG_l, codG_l, domG_r, codG_r;
  if (side == Side::left) {
    for (std::size_t b = 0; b < E.dimB(); ++b) {
      Matrix<F> onP = P.left_op(E.b_vec(b));
      domF_l.push_back(E.b_left[b]);
      codF_l.push_back(onP);
      domG_l.push_back(onP);
      codG_l.push_back(E.b_left[b]);
    }
    for (std::size_t a = 0; a < n; ++a) {
      Matrix<F> onA = E.A.right_mult(E.A.basis_vec(a));
      domF_r.push_back(onA);
      codF_r.push_back(P.right[a]);
      domG_r.push_back(P.right[a]);
      codG_r.push_back(onA);
    }
  } else {
    for (std::size_t a = 0; a < n; ++a) {
      Matrix<F> onA = E.A.left_mult(E.A.basis_vec(a));
      domF_l.push_back(onA);
      codF_l.push_back(P.left[a]);
      domG_l.push_back(P.left[a]);
      codG_l.push_back(onA);
    }
    for (std::size_t b = 0; b < E.dimB(); ++b) {
      Matrix<F> onP = P.right_op(E.b_vec(b));
      domF_r.push_back(E.b_right[b]);
      codF_r.push_back(onP);
      domG_r.push_back(onP);
      codG_r.push_back(E.b_right[b]);
    }
  }
  auto Fh = hom_space(f, n, d,
                      bimodule_hom_conditions(domF_l, codF_l, domF_r, codF_r));
  auto Gh = hom_space(f, d, n,
                      bimodule_hom_conditions(domG_l, codG_l, domG_r, codG_r));

  const std::size_t nf = Fh.dim(), ng = Gh.dim();
  Matrix<F> sys(f, d * d, nf * ng);
  for (std::size_t p = 0; p < nf; ++p) {
    Matrix<F> fp = Fh.map_at(p);
    for (std::size_t q = 0; q < ng; ++q) {
      Vec<F> col = flatten_map(mat_mul(fp, Gh.map_at(q)));
      for (std::size_t i = 0; i < d * d; ++i) sys.at(i, p * ng + q) = col[i];
    }
  }
  Vec<F> rhs = flatten_map(Matrix<F>::identity(f, d));

  QuasiBasisSearch<F> out;
  auto c = solve(sys, rhs);
  if (!c) {
    Echelon<F> span(f, d * d);
    Matrix<F> st = transpose(sys);
    for (std::size_t r = 0; r < st.rows; ++r) span.insert(st.row(r));
    std::size_t before = span.rank();
    span.insert(rhs);
    out.defect = span.rank() - before;
    return out;
  }

  QuasiBasis<F> qb;
  qb.side = side;
  for (std::size_t q = 0; q < ng; ++q) {
    Vec<F> t = vec_zero(f, d);
    for (std::size_t p = 0; p < nf; ++p) {
      const auto& coef = (*c)[p * ng + q];
      if (f.is_zero(coef)) continue;
      vec_addmul(f, t, coef, mat_apply(Fh.map_at(p), E.A.unit));
    }
    if (vec_is_zero(f, t)) continue;
    Matrix<F> gq = Gh.map_at(q);
    Matrix<F> op(f, n, n);
    for (std::size_t x = 0; x < n; ++x) {
      Vec<F> arg = side == Side::left
                       ? pows.embed({E.A.basis_vec(x), E.A.unit})
                       : pows.embed({E.A.unit, E.A.basis_vec(x)});
      Vec<F> img = mat_apply(gq, arg);
      for (std::size_t i = 0; i < n; ++i) op.at(i, x) = img[i];
    }
    if (mat_is_zero(op)) continue;
    qb.t.push_back(std::move(t));
    qb.ops.push_back(std::move(op));
  }
  out.basis = std::move(qb);
  return out;
}

/// Evaluates the defining identity of a quasibasis on every basis pair of A.
template <class F>
bool verify_quasibasis(const APowers<F>& pows, const QuasiBasis<F>& qb) {
  const Extension<F>& E = *pows.E;
  const F f = E.field();
  const std::size_t n = E.dimA();
  const std::size_t d = pows.dim(2);
  auto P = pows.bimodule(2);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vec<F> ex = E.A.basis_vec(x), ey = E.A.basis_vec(y);
      Vec<F> acc = vec_zero(f, d);
      for (std::size_t i = 0; i < qb.size(); ++i) {
        if (qb.side == Side::left) {
          Vec<F> a = E.A.multiply(mat_apply(qb.ops[i], ex), ey);
          acc = vec_add(f, acc, P.act_right(qb.t[i], a));
        } else {
          Vec<F> a = E.A.multiply(ex, mat_apply(qb.ops[i], ey));
          acc = vec_add(f, acc, P.act_left(a, qb.t[i]));
        }
      }
      if (!vec_eq(f, acc, pows.embed({ex, ey}))) return false;
    }
  return true;
}

}  // namespace d2hopf
