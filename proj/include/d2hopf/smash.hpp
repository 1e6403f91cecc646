#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bialgebroid.hpp"
#include "context.hpp"
#include "report.hpp"

namespace d2hopf {

template <class F>
bool subspace_eq(const Subspace<F>& a, const Subspace<F>& b) {
  return a.ambient == b.ambient && a.basis == b.basis;
}

/// Endomorphisms commuting with all right multiplications by the base.
template <class F>
HomSpace<F> end_right_b(const Extension<F>& E) {
  std::vector<Intertwine<F>> conds;
  for (std::size_t b = 0; b < E.dimB(); ++b)
    conds.push_back({E.b_right[b], E.b_right[b]});
  return hom_space(E.field(), E.A.n, E.A.n, conds);
}

/// Endomorphisms commuting with all left multiplications by the base.
template <class F>
HomSpace<F> end_left_b(const Extension<F>& E) {
  std::vector<Intertwine<F>> conds;
  for (std::size_t b = 0; b < E.dimB(); ++b)
    conds.push_back({E.b_left[b], E.b_left[b]});
  return hom_space(E.field(), E.A.n, E.A.n, conds);
}

/// Whether right multiplication by the base exhausts the commutant of the
/// right-linear endomorphism ring (the double centralizer property).
template <class F>
bool is_balanced(const Extension<F>& E) {
  HomSpace<F> endAB = end_right_b(E);
  std::vector<Intertwine<F>> conds;
  for (std::size_t k = 0; k < endAB.dim(); ++k) {
    Matrix<F> m = endAB.map_at(k);
    conds.push_back({m, m});
  }
  HomSpace<F> commutant = hom_space(E.field(), E.A.n, E.A.n, conds);
  return commutant.dim() == E.dimB();
}

/// The smash product of A with its endomorphism bialgebroid, together with
/// the evaluation data identifying it with the right-linear endomorphism
/// ring of A.
template <class F>
struct SmashS {
  HomSpace<F> endAB;
  Subspace<F> invariants;
  bool balanced = false;
  TensorChain<F> chain;  // A (x)_R S
  Algebra<F> ring;
  Matrix<F> xi;  // ring coords -> endAB coords
};

template <class F>
SmashS<F> build_smash_s(const D2Context<F>& ctx, const SStructure<F>& S) {
  const F& f = ctx.field();
  const std::size_t n = ctx.dimA(), sd = ctx.dimS(), rd = ctx.dimR();
  SmashS<F> sm;
  sm.endAB = end_right_b(ctx.E);
  sm.balanced = is_balanced(ctx.E);

  Matrix<F> stacked(f, sd * n, n);
  for (std::size_t k = 0; k < sd; ++k) {
    Matrix<F> diff = mat_sub(
        ctx.S.map_at(k),
        ctx.E.A.left_mult(mat_apply(ctx.S.map_at(k), ctx.E.A.unit)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        stacked.at(k * n + i, j) = diff.at(i, j);
  }
  sm.invariants = Subspace<F>::from_rows(nullspace(stacked));

  sm.chain = TensorChain<F>(f, rd);
  typename TensorChain<F>::Factor fa;
  fa.dim = n;
  for (std::size_t r = 0; r < rd; ++r) {
    fa.ring_left.push_back(ctx.E.A.left_mult(ctx.r_elem(r)));
    fa.ring_right.push_back(ctx.E.A.right_mult(ctx.r_elem(r)));
  }
  sm.chain.add_factor(fa);
  typename TensorChain<F>::Factor fs;
  fs.dim = sd;
  for (std::size_t r = 0; r < rd; ++r) {
    fs.ring_left.push_back(ctx.s_act_left[r]);
    fs.ring_right.push_back(ctx.s_act_right[r]);
  }
  sm.chain.add_factor(fs);

  const auto& q = sm.chain.level(1).q;
  const std::size_t N = q.dim();
  std::vector<Vec<F>> dlift;
  for (std::size_t k = 0; k < sd; ++k) {
    Vec<F> e = vec_zero(f, sd);
    e[k] = f.one();
    dlift.push_back(S.view.chain.level(1).q.lift(S.view.delta_of(e)));
  }

  sm.ring.field = f;
  sm.ring.n = N;
  sm.ring.table.assign(N * N, vec_zero(f, N));
  sm.ring.unit = sm.chain.embed({ctx.E.A.unit, ctx.s_one});
  for (std::size_t zi = 0; zi < N; ++zi) {
    Vec<F> ez = vec_zero(f, N);
    ez[zi] = f.one();
    Vec<F> za = q.lift(ez);
    for (std::size_t wi = 0; wi < N; ++wi) {
      Vec<F> ew = vec_zero(f, N);
      ew[wi] = f.one();
      Vec<F> wa = q.lift(ew);
      Vec<F> amb = vec_zero(f, n * sd);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t k = 0; k < sd; ++k) {
          const auto& cz = za[a * sd + k];
          if (f.is_zero(cz)) continue;
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t l = 0; l < sd; ++l) {
              const auto& cw = wa[c * sd + l];
              if (f.is_zero(cw)) continue;
              auto coef = f.mul(cz, cw);
              for (std::size_t p = 0; p < sd; ++p)
                for (std::size_t q2 = 0; q2 < sd; ++q2) {
                  const auto& dc = dlift[k][p * sd + q2];
                  if (f.is_zero(dc)) continue;
                  Vec<F> img(n, f.zero());
                  for (std::size_t i = 0; i < n; ++i)
                    img[i] = ctx.S.map_at(p).at(i, c);
                  Vec<F> x = ctx.E.A.multiply(ctx.E.A.basis_vec(a), img);
                  const Vec<F>& sc = ctx.Salg.basis_product(q2, l);
                  auto cc = f.mul(coef, dc);
                  for (std::size_t i = 0; i < n; ++i) {
                    if (f.is_zero(x[i])) continue;
                    for (std::size_t m = 0; m < sd; ++m)
                      if (!f.is_zero(sc[m])) {
                        auto& cell = amb[i * sd + m];
                        cell = f.add(cell, f.mul(cc, f.mul(x[i], sc[m])));
                      }
                  }
                }
            }
        }
      sm.ring.table[zi * N + wi] = q.project(amb);
    }
  }

  sm.xi = Matrix<F>(f, sm.endAB.dim(), N);
  for (std::size_t zi = 0; zi < N; ++zi) {
    Vec<F> ez = vec_zero(f, N);
    ez[zi] = f.one();
    Vec<F> za = q.lift(ez);
    Matrix<F> M(f, n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t k = 0; k < sd; ++k) {
        const auto& c = za[a * sd + k];
        if (f.is_zero(c)) continue;
        M = mat_add(M, mat_scale(c, mat_mul(ctx.E.A.left_mult(
                                                ctx.E.A.basis_vec(a)),
                                            ctx.S.map_at(k))));
      }
    auto co = sm.endAB.coords(M);
    if (!co)
      throw StructureError("smash image is not right B-linear");
    for (std::size_t i = 0; i < sm.endAB.dim(); ++i) sm.xi.at(i, zi) = (*co)[i];
  }

  return sm;
}

template <class F>
std::vector<CheckResult> smash_s_checks(const D2Context<F>& ctx,
                                        const SmashS<F>& sm) {
  const F& f = ctx.field();
  const std::size_t n = ctx.dimA(), sd = ctx.dimS();
  std::vector<CheckResult> out;

  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < sd && ok; ++k)
      for (std::size_t b = 0; b < ctx.E.dimB(); ++b) {
        Vec<F> bv = ctx.E.b_vec(b);
        Vec<F> lhs = mat_apply(ctx.S.map_at(k), bv);
        Vec<F> rhs = ctx.E.A.multiply(
            mat_apply(ctx.S.map_at(k), ctx.E.A.unit), bv);
        if (!vec_eq(f, lhs, rhs)) {
          ok = false;
          w = "endomorphism " + std::to_string(k) + " base index " +
              std::to_string(b);
          break;
        }
      }
    out.push_back(ok ? check_pass("action-fixes-base",
                                  "the base lies in the invariants of the "
                                  "natural action of S on A",
                                  sd * ctx.E.dimB())
                     : check_fail("action-fixes-base",
                                  "the base lies in the invariants of the "
                                  "natural action of S on A",
                                  sd * ctx.E.dimB(), w));
  }

  {
    bool eq = subspace_eq(sm.invariants, ctx.E.B);
    std::string st =
        "the invariants of the natural action of S on A equal the base";
    if (eq)
      out.push_back(check_pass("action-invariants-equal-base", st, 1));
    else if (!sm.balanced)
      out.push_back(check_pass(
          "action-invariants-equal-base", st, 1,
          "not required here: the extension is not balanced; invariant "
          "dimension " +
              std::to_string(sm.invariants.dim()) + " vs base dimension " +
              std::to_string(ctx.E.dimB())));
    else
      out.push_back(check_fail(
          "action-invariants-equal-base", st, 1,
          "balanced extension with invariant dimension " +
              std::to_string(sm.invariants.dim()) + " vs base dimension " +
              std::to_string(ctx.E.dimB())));
  }

  {
    bool ok = true;
    std::string w;
    try {
      sm.ring.validate();
    } catch (const std::exception& e) {
      ok = false;
      w = e.what();
    }
    out.push_back(ok ? check_pass("smash-ring",
                                  "the smash product of A with S is an "
                                  "associative unital ring",
                                  sm.ring.n)
                     : check_fail("smash-ring",
                                  "the smash product of A with S is an "
                                  "associative unital ring",
                                  sm.ring.n, w));
  }

  {
    const std::size_t N = sm.ring.n;
    bool ok = sm.endAB.dim() == N && rank(sm.xi) == N;
    std::string w;
    if (!ok)
      w = "dimensions " + std::to_string(N) + " vs " +
          std::to_string(sm.endAB.dim());
    for (std::size_t zi = 0; zi < N && ok; ++zi)
      for (std::size_t wi = 0; wi < N; ++wi) {
        Vec<F> lhs = mat_apply(sm.xi, sm.ring.basis_product(zi, wi));
        Matrix<F> Mz = sm.endAB.from_coords(sm.xi.col(zi));
        Matrix<F> Mw = sm.endAB.from_coords(sm.xi.col(wi));
        auto rc = sm.endAB.coords(mat_mul(Mz, Mw));
        if (!rc || !vec_eq(f, lhs, *rc)) {
          ok = false;
          w = "z=" + std::to_string(zi) + " w=" + std::to_string(wi);
          break;
        }
      }
    if (ok) {
      Vec<F> uc = mat_apply(sm.xi, sm.ring.unit);
      auto idc = sm.endAB.coords(Matrix<F>::identity(f, n));
      ok = idc && vec_eq(f, uc, *idc);
      if (!ok) w = "unit image differs from the identity";
    }
    out.push_back(
        ok ? check_pass("smash-endomorphism-iso",
                        "evaluation is a ring isomorphism from the smash "
                        "product onto the right B-linear endomorphisms of A",
                        sm.ring.n * sm.ring.n)
           : check_fail("smash-endomorphism-iso",
                        "evaluation is a ring isomorphism from the smash "
                        "product onto the right B-linear endomorphisms of A",
                        sm.ring.n * sm.ring.n, w));
  }

  return out;
}

/// The smash product of T with the left B-linear endomorphism ring,
/// together with the data identifying it with the A-linear endomorphisms of
/// the tensor square.
template <class F>
struct SmashT {
  HomSpace<F> endE;   // left B-linear endomorphisms of A
  HomSpace<F> endSq;  // left A-linear endomorphisms of the tensor square
  Subspace<F> invariants;
  Subspace<F> rho_image;
  TensorChain<F> chain;  // T (x)_R endE
  Algebra<F> ring;
  Matrix<F> psi;  // ring coords -> endSq coords
};

/// The matrix of f -> (first leg of t) f((second leg of t) -).
template <class F>
Matrix<F> t_act_on_endo(const D2Context<F>& ctx, const Matrix<F>& fm,
                        const Vec<F>& t) {
  const F& f = ctx.field();
  const std::size_t n = ctx.dimA();
  Vec<F> rep = ctx.Tsq.representative(t);
  Matrix<F> out(f, n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& c = rep[a * n + b];
      if (f.is_zero(c)) continue;
      Matrix<F> term =
          mat_mul(ctx.E.A.left_mult(ctx.E.A.basis_vec(a)),
                  mat_mul(fm, ctx.E.A.left_mult(ctx.E.A.basis_vec(b))));
      out = mat_add(out, mat_scale(c, term));
    }
  return out;
}

template <class F>
SmashT<F> build_smash_t(const D2Context<F>& ctx, const TStructure<F>& T) {
  const F& f = ctx.field();
  const std::size_t n = ctx.dimA(), td = ctx.dimT(), rd = ctx.dimR();
  const std::size_t d = ctx.pows.dim(2);
  SmashT<F> sm;
  sm.endE = end_left_b(ctx.E);
  const std::size_t ed = sm.endE.dim();

  {
    std::vector<Intertwine<F>> conds;
    auto P2 = ctx.pows.bimodule(2);
    for (std::size_t a = 0; a < n; ++a)
      conds.push_back({P2.left[a], P2.left[a]});
    sm.endSq = hom_space(f, d, d, conds);
  }

  // Invariants of the action of T and the image of right multiplication.
  {
    Matrix<F> stacked(f, td * ed, ed);
    for (std::size_t m = 0; m < td; ++m) {
      Vec<F> em = vec_zero(f, td);
      em[m] = f.one();
      Vec<F> rv = vec_zero(f, n);
      for (std::size_t i = 0; i < rd; ++i)
        vec_addmul(f, rv, ctx.Tsq.counit.at(i, m), ctx.r_elem(i));
      Matrix<F> lam = ctx.E.A.left_mult(rv);
      for (std::size_t p = 0; p < ed; ++p) {
        Matrix<F> Fp = sm.endE.map_at(p);
        Matrix<F> acted = t_act_on_endo(ctx, Fp, em);
        Matrix<F> expect = mat_mul(Fp, lam);
        auto dc = sm.endE.coords(mat_sub(acted, expect));
        if (!dc)
          throw StructureError("action of T left the endomorphism space");
        for (std::size_t i = 0; i < ed; ++i)
          stacked.at(m * ed + i, p) = (*dc)[i];
      }
    }
    sm.invariants = Subspace<F>::from_rows(nullspace(stacked));
  }
  {
    Matrix<F> rows(f, n, ed);
    for (std::size_t a = 0; a < n; ++a) {
      auto c = sm.endE.coords(ctx.E.A.right_mult(ctx.E.A.basis_vec(a)));
      if (!c)
        throw StructureError(
            "right multiplication is not left B-linear; the base data is "
            "inconsistent");
      for (std::size_t i = 0; i < ed; ++i) rows.at(a, i) = (*c)[i];
    }
    sm.rho_image = Subspace<F>::from_rows(rows);
  }

  sm.chain = TensorChain<F>(f, rd);
  typename TensorChain<F>::Factor ft;
  ft.dim = td;
  for (std::size_t r = 0; r < rd; ++r) {
    ft.ring_left.push_back(ctx.Tsq.r_left[r]);
    ft.ring_right.push_back(ctx.Tsq.r_right[r]);
  }
  sm.chain.add_factor(ft);
  typename TensorChain<F>::Factor fe;
  fe.dim = ed;
  for (std::size_t r = 0; r < rd; ++r) {
    Matrix<F> lam = ctx.E.A.left_mult(ctx.r_elem(r));
    Matrix<F> rho = ctx.E.A.right_mult(ctx.r_elem(r));
    Matrix<F> ml(f, ed, ed), mr(f, ed, ed);
    for (std::size_t p = 0; p < ed; ++p) {
      auto cl = sm.endE.coords(mat_mul(lam, sm.endE.map_at(p)));
      auto cr = sm.endE.coords(mat_mul(rho, sm.endE.map_at(p)));
      if (!cl || !cr)
        throw StructureError("centralizer does not act on the endomorphisms");
      for (std::size_t i = 0; i < ed; ++i) {
        ml.at(i, p) = (*cl)[i];
        mr.at(i, p) = (*cr)[i];
      }
    }
    fe.ring_left.push_back(std::move(ml));
    fe.ring_right.push_back(std::move(mr));
  }
  sm.chain.add_factor(fe);

  const auto& q = sm.chain.level(1).q;
  const std::size_t N = q.dim();
  std::vector<Vec<F>> dlift;
  for (std::size_t m = 0; m < td; ++m) {
    Vec<F> e = vec_zero(f, td);
    e[m] = f.one();
    dlift.push_back(T.view.chain.level(1).q.lift(T.view.delta_of(e)));
  }

  sm.ring.field = f;
  sm.ring.n = N;
  sm.ring.table.assign(N * N, vec_zero(f, N));
  {
    auto idc = sm.endE.coords(Matrix<F>::identity(f, n));
    if (!idc) throw StructureError("identity is not left B-linear");
    sm.ring.unit = sm.chain.embed({ctx.Tsq.unit, *idc});
  }
  for (std::size_t zi = 0; zi < N; ++zi) {
    Vec<F> ez = vec_zero(f, N);
    ez[zi] = f.one();
    Vec<F> za = q.lift(ez);
    for (std::size_t wi = 0; wi < N; ++wi) {
      Vec<F> ew = vec_zero(f, N);
      ew[wi] = f.one();
      Vec<F> wa = q.lift(ew);
      Vec<F> amb = vec_zero(f, td * ed);
      for (std::size_t m = 0; m < td; ++m)
        for (std::size_t p = 0; p < ed; ++p) {
          const auto& cz = za[m * ed + p];
          if (f.is_zero(cz)) continue;
          Vec<F> em = vec_zero(f, td);
          em[m] = f.one();
          for (std::size_t m2 = 0; m2 < td; ++m2)
            for (std::size_t p2 = 0; p2 < ed; ++p2) {
              const auto& cw = wa[m2 * ed + p2];
              if (f.is_zero(cw)) continue;
              auto coef = f.mul(cz, cw);
              for (std::size_t a = 0; a < td; ++a)
                for (std::size_t b = 0; b < td; ++b) {
                  const auto& dc = dlift[m2][a * td + b];
                  if (f.is_zero(dc)) continue;
                  Vec<F> ea = vec_zero(f, td);
                  ea[a] = f.one();
                  Vec<F> eb = vec_zero(f, td);
                  eb[b] = f.one();
                  Vec<F> tprod = ctx.Tsq.multiply(em, ea);
                  Matrix<F> acted = t_act_on_endo(ctx, sm.endE.map_at(p), eb);
                  auto ec = sm.endE.coords(
                      mat_mul(acted, sm.endE.map_at(p2)));
                  if (!ec)
                    throw StructureError(
                        "smash product left the endomorphism space");
                  auto cc = f.mul(coef, dc);
                  for (std::size_t i = 0; i < td; ++i) {
                    if (f.is_zero(tprod[i])) continue;
                    for (std::size_t j = 0; j < ed; ++j)
                      if (!f.is_zero((*ec)[j])) {
                        auto& cell = amb[i * ed + j];
                        cell = f.add(cell,
                                     f.mul(cc, f.mul(tprod[i], (*ec)[j])));
                      }
                  }
                }
            }
        }
      sm.ring.table[zi * N + wi] = q.project(amb);
    }
  }

  sm.psi = Matrix<F>(f, sm.endSq.dim(), N);
  {
    auto P2 = ctx.pows.bimodule(2);
    const auto& q2 = ctx.pows.quotient(2);
    std::vector<Matrix<F>> rm, lm;
    for (std::size_t a = 0; a < n; ++a) {
      rm.push_back(ctx.E.A.right_mult(ctx.E.A.basis_vec(a)));
      lm.push_back(ctx.E.A.left_mult(ctx.E.A.basis_vec(a)));
    }
    for (std::size_t zi = 0; zi < N; ++zi) {
      Vec<F> ez = vec_zero(f, N);
      ez[zi] = f.one();
      Vec<F> za = q.lift(ez);
      Matrix<F> M(f, d, d);
      for (std::size_t m = 0; m < td; ++m)
        for (std::size_t p = 0; p < ed; ++p) {
          const auto& c = za[m * ed + p];
          if (f.is_zero(c)) continue;
          Vec<F> em = vec_zero(f, td);
          em[m] = f.one();
          Vec<F> rep = ctx.Tsq.representative(em);
          Matrix<F> amb(f, n * n, n * n);
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
              const auto& rc = rep[a * n + b];
              if (f.is_zero(rc)) continue;
              amb = mat_add(amb, mat_scale(rc, kron(rm[a],
                                                    mat_mul(lm[b],
                                                            sm.endE.map_at(
                                                                p)))));
            }
          M = mat_add(M, mat_scale(c, q2.induced_map(amb)));
        }
      auto co = sm.endSq.coords(M);
      if (!co)
        throw StructureError("smash image is not left A-linear");
      for (std::size_t i = 0; i < sm.endSq.dim(); ++i)
        sm.psi.at(i, zi) = (*co)[i];
    }
  }

  return sm;
}

template <class F>
std::vector<CheckResult> smash_t_checks(const D2Context<F>& ctx,
                                        const TStructure<F>& T,
                                        const SmashT<F>& sm) {
  const F& f = ctx.field();
  const std::size_t td = ctx.dimT(), ed = sm.endE.dim();
  std::vector<CheckResult> out;

  {
    bool ok = true;
    std::string w;
    for (std::size_t p = 0; p < ed && ok; ++p)
      for (std::size_t s = 0; s < td && ok; ++s)
        for (std::size_t t = 0; t < td; ++t) {
          Vec<F> es = vec_zero(f, td);
          es[s] = f.one();
          Vec<F> et = vec_zero(f, td);
          et[t] = f.one();
          Matrix<F> lhs =
              t_act_on_endo(ctx, t_act_on_endo(ctx, sm.endE.map_at(p), es),
                            et);
          Matrix<F> rhs =
              t_act_on_endo(ctx, sm.endE.map_at(p), ctx.Tsq.multiply(es, et));
          if (!(lhs == rhs)) {
            ok = false;
            w = "f=" + std::to_string(p) + " s=" + std::to_string(s) +
                " t=" + std::to_string(t);
            break;
          }
        }
    out.push_back(ok ? check_pass("t-action-right-module",
                                  "the action of T on the left B-linear "
                                  "endomorphisms is a right module action",
                                  ed * td * td)
                     : check_fail("t-action-right-module",
                                  "the action of T on the left B-linear "
                                  "endomorphisms is a right module action",
                                  ed * td * td, w));
  }

  {
    bool ok = true;
    std::string w;
    std::vector<Vec<F>> dlift;
    for (std::size_t m = 0; m < td; ++m) {
      Vec<F> e = vec_zero(f, td);
      e[m] = f.one();
      dlift.push_back(T.view.chain.level(1).q.lift(T.view.delta_of(e)));
    }
    for (std::size_t p = 0; p < ed && ok; ++p)
      for (std::size_t p2 = 0; p2 < ed && ok; ++p2)
        for (std::size_t m = 0; m < td; ++m) {
          Vec<F> em = vec_zero(f, td);
          em[m] = f.one();
          Matrix<F> rhs = t_act_on_endo(
              ctx, mat_mul(sm.endE.map_at(p), sm.endE.map_at(p2)), em);
          Matrix<F> lhs(f, ctx.dimA(), ctx.dimA());
          for (std::size_t a = 0; a < td; ++a)
            for (std::size_t b = 0; b < td; ++b) {
              const auto& c = dlift[m][a * td + b];
              if (f.is_zero(c)) continue;
              Vec<F> ea = vec_zero(f, td);
              ea[a] = f.one();
              Vec<F> eb = vec_zero(f, td);
              eb[b] = f.one();
              Matrix<F> term =
                  mat_mul(t_act_on_endo(ctx, sm.endE.map_at(p), ea),
                          t_act_on_endo(ctx, sm.endE.map_at(p2), eb));
              lhs = mat_add(lhs, mat_scale(c, term));
            }
          if (!(lhs == rhs)) {
            ok = false;
            w = "f=" + std::to_string(p) + " g=" + std::to_string(p2) +
                " t=" + std::to_string(m);
            break;
          }
        }
    out.push_back(ok ? check_pass("t-action-measures",
                                  "the action of T measures composition of "
                                  "endomorphisms through the coproduct",
                                  ed * ed * td)
                     : check_fail("t-action-measures",
                                  "the action of T measures composition of "
                                  "endomorphisms through the coproduct",
                                  ed * ed * td, w));
  }

  {
    bool ok = subspace_eq(sm.invariants, sm.rho_image);
    out.push_back(
        ok ? check_pass("t-action-invariants",
                        "the invariants of the action of T are exactly the "
                        "right multiplications by A",
                        ed)
           : check_fail("t-action-invariants",
                        "the invariants of the action of T are exactly the "
                        "right multiplications by A",
                        ed,
                        "invariant dimension " +
                            std::to_string(sm.invariants.dim()) + " vs " +
                            std::to_string(sm.rho_image.dim())));
  }

  {
    bool ok = true;
    std::string w;
    try {
      sm.ring.validate();
    } catch (const std::exception& e) {
      ok = false;
      w = e.what();
    }
    out.push_back(ok ? check_pass("t-smash-ring",
                                  "the smash product of T with the left "
                                  "B-linear endomorphisms is an associative "
                                  "unital ring",
                                  sm.ring.n)
                     : check_fail("t-smash-ring",
                                  "the smash product of T with the left "
                                  "B-linear endomorphisms is an associative "
                                  "unital ring",
                                  sm.ring.n, w));
  }

  {
    const std::size_t N = sm.ring.n;
    bool ok = sm.endSq.dim() == N && rank(sm.psi) == N;
    std::string w;
    if (!ok)
      w = "dimensions " + std::to_string(N) + " vs " +
          std::to_string(sm.endSq.dim());
    for (std::size_t zi = 0; zi < N && ok; ++zi)
      for (std::size_t wi = 0; wi < N; ++wi) {
        Vec<F> lhs = mat_apply(sm.psi, sm.ring.basis_product(zi, wi));
        Matrix<F> Mz = sm.endSq.from_coords(sm.psi.col(zi));
        Matrix<F> Mw = sm.endSq.from_coords(sm.psi.col(wi));
        auto rc = sm.endSq.coords(mat_mul(Mz, Mw));
        if (!rc || !vec_eq(f, lhs, *rc)) {
          ok = false;
          w = "z=" + std::to_string(zi) + " w=" + std::to_string(wi);
          break;
        }
      }
    if (ok) {
      Vec<F> uc = mat_apply(sm.psi, sm.ring.unit);
      auto idc = sm.endSq.coords(
          Matrix<F>::identity(f, ctx.pows.dim(2)));
      ok = idc && vec_eq(f, uc, *idc);
      if (!ok) w = "unit image differs from the identity";
    }
    out.push_back(ok ? check_pass("t-smash-square-iso",
                                  "the smash product of T with the "
                                  "endomorphisms maps isomorphically onto "
                                  "the A-linear endomorphisms of the tensor "
                                  "square",
                                  sm.ring.n * sm.ring.n)
                     : check_fail("t-smash-square-iso",
                                  "the smash product of T with the "
                                  "endomorphisms maps isomorphically onto "
                                  "the A-linear endomorphisms of the tensor "
                                  "square",
                                  sm.ring.n * sm.ring.n, w));
  }

  return out;
}

}  // namespace d2hopf
