#pragma once

#include <string>
#include <vector>

#include "context.hpp"
#include "report.hpp"

namespace d2hopf {

/// The two evaluation pairings between S and T with values in the
/// centralizer: one applies an endomorphism to the first tensorand and
/// multiplies on the right, the other applies it to the second tensorand and
/// multiplies on the left.
template <class F>
struct PairingTable {
  // angle[k] is the R-valued row of <alpha_k, -> over the T basis, stored as
  // a (dimR x dimT) matrix; bracket[k] likewise for [-, alpha_k].
  std::vector<Matrix<F>> angle;
  std::vector<Matrix<F>> bracket;
};

template <class F>
Vec<F> pair_angle_ambient(const D2Context<F>& ctx, const Matrix<F>& alpha,
                          const Vec<F>& rep) {
  const F& f = ctx.field();
  const std::size_t n = ctx.dimA();
  Vec<F> acc = vec_zero(f, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& c = rep[a * n + b];
      if (f.is_zero(c)) continue;
      Vec<F> img(n, f.zero());
      for (std::size_t i = 0; i < n; ++i) img[i] = alpha.at(i, a);
      vec_addmul(f, acc, c, ctx.E.A.multiply(img, ctx.E.A.basis_vec(b)));
    }
  return acc;
}

template <class F>
Vec<F> pair_bracket_ambient(const D2Context<F>& ctx, const Vec<F>& rep,
                            const Matrix<F>& alpha) {
  const F& f = ctx.field();
  const std::size_t n = ctx.dimA();
  Vec<F> acc = vec_zero(f, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& c = rep[a * n + b];
      if (f.is_zero(c)) continue;
      Vec<F> img(n, f.zero());
      for (std::size_t i = 0; i < n; ++i) img[i] = alpha.at(i, b);
      vec_addmul(f, acc, c, ctx.E.A.multiply(ctx.E.A.basis_vec(a), img));
    }
  return acc;
}

/// Signals that a pairing value left the centralizer or a duality map
/// degenerated; for a verified depth-two extension this indicates an
/// internal inconsistency rather than a property of the input.
struct DegeneratePairing : StructureError {
  using StructureError::StructureError;
};

template <class F>
PairingTable<F> build_pairings(const D2Context<F>& ctx) {
  const F& f = ctx.field();
  const std::size_t sd = ctx.dimS(), td = ctx.dimT(), rd = ctx.dimR();
  PairingTable<F> P;
  for (std::size_t k = 0; k < sd; ++k) {
    Matrix<F> ang(f, rd, td), brk(f, rd, td);
    for (std::size_t m = 0; m < td; ++m) {
      Vec<F> em = vec_zero(f, td);
      em[m] = f.one();
      Vec<F> rep = ctx.Tsq.representative(em);
      auto a = ctx.R.coords(pair_angle_ambient(ctx, ctx.S.map_at(k), rep));
      auto b = ctx.R.coords(pair_bracket_ambient(ctx, rep, ctx.S.map_at(k)));
      if (!a || !b)
        throw DegeneratePairing("pairing value left the centralizer");
      for (std::size_t i = 0; i < rd; ++i) {
        ang.at(i, m) = (*a)[i];
        brk.at(i, m) = (*b)[i];
      }
    }
    P.angle.push_back(std::move(ang));
    P.bracket.push_back(std::move(brk));
  }
  return P;
}

/// Nondegeneracy and the reconstruction formulas: evaluation against T
/// identifies S with the right R-linear maps T -> R in one direction and
/// with the left R-linear maps in the other, and pairing against either
/// quasibasis reconstructs an endomorphism from its values.
template <class F>
std::vector<CheckResult> pairing_checks(const D2Context<F>& ctx,
                                        const PairingTable<F>& P) {
  const F& f = ctx.field();
  const std::size_t sd = ctx.dimS(), td = ctx.dimT(), rd = ctx.dimR();
  const std::size_t n = ctx.dimA();
  std::vector<CheckResult> out;

  {
    std::vector<Intertwine<F>> conds;
    for (std::size_t r = 0; r < rd; ++r)
      conds.push_back(
          {ctx.Tsq.r_right[r], ctx.Ralg.right_mult(ctx.Ralg.basis_vec(r))});
    HomSpace<F> hom = hom_space(f, td, rd, conds);
    bool ok = hom.dim() == sd;
    std::string w;
    if (!ok)
      w = "hom dimension " + std::to_string(hom.dim()) + " vs " +
          std::to_string(sd);
    Matrix<F> M(f, hom.dim() == sd ? sd : hom.dim(), sd);
    if (ok) {
      for (std::size_t k = 0; k < sd && ok; ++k) {
        auto c = hom.coords(P.angle[k]);
        if (!c) {
          ok = false;
          w = "pairing map is not right R-linear at basis index " +
              std::to_string(k);
          break;
        }
        for (std::size_t i = 0; i < sd; ++i) M.at(i, k) = (*c)[i];
      }
      if (ok && rank(M) != sd) {
        ok = false;
        w = "evaluation matrix is singular";
      }
    }
    out.push_back(ok ? check_pass("pairing-right-nondegenerate",
                                  "evaluation on the first tensorand "
                                  "identifies S with the right R-linear "
                                  "maps from T to R",
                                  sd)
                     : check_fail("pairing-right-nondegenerate",
                                  "evaluation on the first tensorand "
                                  "identifies S with the right R-linear "
                                  "maps from T to R",
                                  sd, w));
  }

  {
    std::vector<Intertwine<F>> conds;
    for (std::size_t r = 0; r < rd; ++r)
      conds.push_back(
          {ctx.Tsq.r_left[r], ctx.Ralg.left_mult(ctx.Ralg.basis_vec(r))});
    HomSpace<F> hom = hom_space(f, td, rd, conds);
    bool ok = hom.dim() == sd;
    std::string w;
    if (!ok)
      w = "hom dimension " + std::to_string(hom.dim()) + " vs " +
          std::to_string(sd);
    Matrix<F> M(f, hom.dim() == sd ? sd : hom.dim(), sd);
    if (ok) {
      for (std::size_t k = 0; k < sd && ok; ++k) {
        auto c = hom.coords(P.bracket[k]);
        if (!c) {
          ok = false;
          w = "pairing map is not left R-linear at basis index " +
              std::to_string(k);
          break;
        }
        for (std::size_t i = 0; i < sd; ++i) M.at(i, k) = (*c)[i];
      }
      if (ok && rank(M) != sd) {
        ok = false;
        w = "evaluation matrix is singular";
      }
    }
    out.push_back(ok ? check_pass("pairing-left-nondegenerate",
                                  "evaluation on the second tensorand "
                                  "identifies S with the left R-linear "
                                  "maps from T to R",
                                  sd)
                     : check_fail("pairing-left-nondegenerate",
                                  "evaluation on the second tensorand "
                                  "identifies S with the left R-linear "
                                  "maps from T to R",
                                  sd, w));
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < sd && ok; ++k) {
      Matrix<F> rebuilt(f, n, n);
      for (std::size_t i = 0; i < ctx.lqb.size(); ++i) {
        Vec<F> rep = ctx.square_rep(ctx.lqb.t[i]);
        Vec<F> val = pair_angle_ambient(ctx, ctx.S.map_at(k), rep);
        rebuilt = mat_add(
            rebuilt, mat_mul(ctx.E.A.left_mult(val), ctx.lqb.ops[i]));
      }
      if (!(rebuilt == ctx.S.map_at(k))) {
        ok = false;
        w = "basis index " + std::to_string(k);
      }
    }
    out.push_back(ok ? check_pass("pairing-rebuild-left",
                                  "pairing values on the left quasibasis "
                                  "reconstruct every endomorphism",
                                  sd)
                     : check_fail("pairing-rebuild-left",
                                  "pairing values on the left quasibasis "
                                  "reconstruct every endomorphism",
                                  sd, w));
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < sd && ok; ++k) {
      Matrix<F> rebuilt(f, n, n);
      for (std::size_t j = 0; j < ctx.rqb.size(); ++j) {
        Vec<F> rep = ctx.square_rep(ctx.rqb.t[j]);
        Vec<F> val = pair_bracket_ambient(ctx, rep, ctx.S.map_at(k));
        rebuilt = mat_add(
            rebuilt, mat_mul(ctx.E.A.right_mult(val), ctx.rqb.ops[j]));
      }
      if (!(rebuilt == ctx.S.map_at(k))) {
        ok = false;
        w = "basis index " + std::to_string(k);
      }
    }
    out.push_back(ok ? check_pass("pairing-rebuild-right",
                                  "pairing values on the right quasibasis "
                                  "reconstruct every endomorphism",
                                  sd)
                     : check_fail("pairing-rebuild-right",
                                  "pairing values on the right quasibasis "
                                  "reconstruct every endomorphism",
                                  sd, w));
  }

  return out;
}

}  // namespace d2hopf
