#pragma once

#include <memory>
#include <utility>

#include "quasibasis.hpp"

namespace d2hopf {

/// A subspace closed under the ambient product, repackaged as an algebra in
/// its own coordinates. Throws StructureError when the span is not closed or
/// misses the unit.
template <class F>
Algebra<F> algebra_on_subspace(const Algebra<F>& A, const Subspace<F>& s,
                               const std::string& what) {
  const F f = A.field;
  Algebra<F> out;
  out.field = f;
  out.n = s.dim();
  out.table.resize(out.n * out.n);
  for (std::size_t i = 0; i < out.n; ++i)
    for (std::size_t j = 0; j < out.n; ++j) {
      auto c = s.coords(A.multiply(s.basis.row(i), s.basis.row(j)));
      if (!c) throw StructureError(what + ": span is not closed under product");
      out.table[i * out.n + j] = *c;
    }
  auto u = s.coords(A.unit);
  if (!u) throw StructureError(what + ": span does not contain the unit");
  out.unit = *u;
  return out;
}

/// Everything shared by the structures attached to a depth-two extension:
/// the centralizer R (as a subspace of A and as an algebra), the tensor
/// square with its central subring, both quasibases, and the endomorphism
/// ring S of the bimodule A with its R-actions.
///
/// The tensor powers and the central square keep pointers into this object,
/// so it is heap-allocated and pinned (no copies or moves).
template <class F>
struct D2Context {
  Extension<F> E;
  Subspace<F> R;
  Algebra<F> Ralg;
  APowers<F> pows;
  CentralSquare<F> Tsq;
  QuasiBasis<F> lqb, rqb;

  HomSpace<F> S;      // bimodule endomorphisms of A over B
  Algebra<F> Salg;    // composition ring on S coordinates
  Vec<F> s_one;       // coordinates of the identity map
  Matrix<F> lambda_map, rho_map;       // R coords -> S coords
  std::vector<Matrix<F>> s_act_left;   // per R-basis: compose with left mult
  std::vector<Matrix<F>> s_act_right;  // per R-basis: compose with right mult

  D2Context() = default;
  D2Context(const D2Context&) = delete;
  D2Context& operator=(const D2Context&) = delete;

  const F& field() const { return E.field(); }
  std::size_t dimA() const { return E.dimA(); }
  std::size_t dimS() const { return S.dim(); }
  std::size_t dimT() const { return Tsq.dim(); }
  std::size_t dimR() const { return R.dim(); }

  Matrix<F> s_op(const Vec<F>& coords) const { return S.from_coords(coords); }
  Vec<F> s_coords_or_throw(const Matrix<F>& m, const char* what) const {
    auto c = S.coords(m);
    if (!c) throw StructureError(std::string(what) + ": map left S");
    return *c;
  }
  Vec<F> t_coords_or_throw(const Vec<F>& square_class, const char* what) const {
    auto c = Tsq.sub.coords(square_class);
    if (!c) throw StructureError(std::string(what) + ": class not central");
    return *c;
  }
  /// Representative of a T element in the full A (x) A coordinate space.
  Vec<F> t_rep(const Vec<F>& t) const { return Tsq.representative(t); }
  /// Representative of a tensor-square class.
  Vec<F> square_rep(const Vec<F>& cls) const {
    return pows.quotient(2).lift(cls);
  }
  Vec<F> r_elem(std::size_t k) const { return R.basis.row(k); }
};

/// Outcome of building the context: a null ctx together with the one-sided
/// rank defects means the extension is not depth two on some side.
template <class F>
struct ContextBuild {
  std::unique_ptr<D2Context<F>> ctx;
  std::size_t left_defect = 0;
  std::size_t right_defect = 0;

  bool ok() const { return ctx != nullptr; }
};

template <class F>
ContextBuild<F> build_context(Extension<F> e) {
  ContextBuild<F> out;
  auto ctx = std::make_unique<D2Context<F>>();
  ctx->E = std::move(e);
  const F f = ctx->E.field();
  const std::size_t n = ctx->E.dimA();

  ctx->pows = APowers<F>::make(ctx->E);
  auto l = find_quasibasis(ctx->pows, Side::left);
  auto r = find_quasibasis(ctx->pows, Side::right);
  out.left_defect = l.defect;
  out.right_defect = r.defect;
  if (!l.basis || !r.basis) return out;
  ctx->lqb = std::move(*l.basis);
  ctx->rqb = std::move(*r.basis);

  ctx->R = centralizer(ctx->E);
  ctx->Ralg = algebra_on_subspace(ctx->E.A, ctx->R, "centralizer");
  ctx->Tsq = CentralSquare<F>::make(ctx->pows, ctx->R);

  // S: endomorphisms of A commuting with both one-sided B-actions.
  std::vector<Matrix<F>> bl = ctx->E.b_left, br = ctx->E.b_right;
  ctx->S = hom_space(f, n, n, bimodule_hom_conditions(bl, bl, br, br));
  const std::size_t sd = ctx->S.dim();

  auto s_coords = [&](const Matrix<F>& m, const char* what) {
    auto c = ctx->S.coords(m);
    if (!c) throw StructureError(std::string(what) + ": map left S");
    return *c;
  };
  ctx->s_one = s_coords(Matrix<F>::identity(f, n), "identity");

  ctx->Salg.field = f;
  ctx->Salg.n = sd;
  ctx->Salg.table.resize(sd * sd);
  for (std::size_t i = 0; i < sd; ++i) {
    Matrix<F> si = ctx->S.map_at(i);
    for (std::size_t j = 0; j < sd; ++j)
      ctx->Salg.table[i * sd + j] =
          s_coords(mat_mul(si, ctx->S.map_at(j)), "composition");
  }
  ctx->Salg.unit = ctx->s_one;

  const std::size_t rd = ctx->R.dim();
  ctx->lambda_map = Matrix<F>(f, sd, rd);
  ctx->rho_map = Matrix<F>(f, sd, rd);
  for (std::size_t k = 0; k < rd; ++k) {
    Matrix<F> lm = ctx->E.A.left_mult(ctx->R.basis.row(k));
    Matrix<F> rm = ctx->E.A.right_mult(ctx->R.basis.row(k));
    Vec<F> lc = s_coords(lm, "left multiplication by R");
    Vec<F> rc = s_coords(rm, "right multiplication by R");
    for (std::size_t i = 0; i < sd; ++i) {
      ctx->lambda_map.at(i, k) = lc[i];
      ctx->rho_map.at(i, k) = rc[i];
    }
    Matrix<F> al(f, sd, sd), ar(f, sd, sd);
    for (std::size_t j = 0; j < sd; ++j) {
      Vec<F> cl = s_coords(mat_mul(lm, ctx->S.map_at(j)), "R-action");
      Vec<F> cr = s_coords(mat_mul(rm, ctx->S.map_at(j)), "R-action");
      for (std::size_t i = 0; i < sd; ++i) {
        al.at(i, j) = cl[i];
        ar.at(i, j) = cr[i];
      }
    }
    ctx->s_act_left.push_back(std::move(al));
    ctx->s_act_right.push_back(std::move(ar));
  }

  out.ctx = std::move(ctx);
  return out;
}

}  // namespace d2hopf
