#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bialgebroid.hpp"
#include "duality.hpp"
#include "quasibasis.hpp"
#include "report.hpp"
#include "smash.hpp"

namespace d2hopf {

/// Whether every centralizer element lies in the base, the defining
/// condition of an irreducible extension.
template <class F>
bool centralizer_in_base(const D2Context<F>& ctx) {
  for (std::size_t k = 0; k < ctx.dimR(); ++k)
    if (!ctx.E.B.coords(ctx.r_elem(k))) return false;
  return true;
}

template <class F>
std::vector<CheckResult> irreducibility_checks(const D2Context<F>& ctx) {
  const F& f = ctx.field();
  std::vector<CheckResult> out;
  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < ctx.dimR(); ++k)
      if (!ctx.E.B.coords(ctx.r_elem(k))) {
        ok = false;
        w = "centralizer element " + vec_to_string(f, ctx.r_elem(k)) +
            " lies outside the base";
        break;
      }
    out.push_back(ok ? check_pass("centralizer-in-base",
                                  "the centralizer lies in the base",
                                  ctx.dimR())
                     : check_fail("centralizer-in-base",
                                  "the centralizer lies in the base",
                                  ctx.dimR(), w));
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < ctx.dimR() && ok; ++i)
      for (std::size_t j = 0; j < ctx.dimR(); ++j)
        if (!vec_eq(f, ctx.Ralg.basis_product(i, j),
                    ctx.Ralg.basis_product(j, i))) {
          ok = false;
          w = "i=" + std::to_string(i) + " j=" + std::to_string(j);
          break;
        }
    out.push_back(ok ? check_pass("centralizer-commutative",
                                  "the centralizer is commutative",
                                  ctx.dimR() * ctx.dimR())
                     : check_fail("centralizer-commutative",
                                  "the centralizer is commutative",
                                  ctx.dimR() * ctx.dimR(), w));
  }
  return out;
}

/// The antipode of S for an irreducible extension, determined by matching
/// the two evaluation pairings against T.
template <class F>
struct AntipodeData {
  bool exists = false;
  std::string reason;
  Matrix<F> tau;  // dimS x dimS on endomorphism coordinates
  std::vector<Matrix<F>> tau_op;
};

template <class F>
AntipodeData<F> build_antipode(const D2Context<F>& ctx,
                               const PairingTable<F>& P) {
  const F& f = ctx.field();
  const std::size_t sd = ctx.dimS(), td = ctx.dimT(), rd = ctx.dimR();
  AntipodeData<F> ad;
  if (!centralizer_in_base(ctx)) {
    ad.reason = "the centralizer does not lie in the base";
    return ad;
  }
  Matrix<F> lhs(f, td * rd, sd), rhs(f, td * rd, sd);
  for (std::size_t k = 0; k < sd; ++k)
    for (std::size_t m = 0; m < td; ++m)
      for (std::size_t i = 0; i < rd; ++i) {
        lhs.at(m * rd + i, k) = P.bracket[k].at(i, m);
        rhs.at(m * rd + i, k) = P.angle[k].at(i, m);
      }
  if (rank(lhs) != sd) {
    ad.reason = "the evaluation pairing is degenerate";
    return ad;
  }
  ad.tau = Matrix<F>(f, sd, sd);
  for (std::size_t k = 0; k < sd; ++k) {
    auto sol = solve(lhs, rhs.col(k));
    if (!sol) {
      ad.reason = "the pairing values of basis endomorphism " +
                  std::to_string(k) +
                  " are not realized by any endomorphism";
      return ad;
    }
    for (std::size_t i = 0; i < sd; ++i) ad.tau.at(i, k) = (*sol)[i];
  }
  ad.exists = true;
  for (std::size_t k = 0; k < sd; ++k)
    ad.tau_op.push_back(ctx.s_op(ad.tau.col(k)));
  return ad;
}

namespace detail {

template <class F>
Vec<F> eps_value(const D2Context<F>& ctx, const Matrix<F>& eps,
                 std::size_t k) {
  Vec<F> rv = vec_zero(ctx.field(), ctx.dimA());
  for (std::size_t i = 0; i < ctx.dimR(); ++i)
    vec_addmul(ctx.field(), rv, eps.at(i, k), ctx.r_elem(i));
  return rv;
}

}  // namespace detail

/// The antipode identities: the defining pairing equation, the exchange
/// lemma, quasibasis transport, the shared right bialgebroid structure, and
/// the convolution laws.
template <class F>
std::vector<CheckResult> antipode_checks(const D2Context<F>& ctx,
                                         const SStructure<F>& S,
                                         const PairingTable<F>& P,
                                         const AntipodeData<F>& ad) {
  const F& f = ctx.field();
  const std::size_t sd = ctx.dimS(), td = ctx.dimT(), rd = ctx.dimR();
  const std::size_t n = ctx.dimA();
  std::vector<CheckResult> out;

  if (!ad.exists) {
    out.push_back(check_fail("antipode-exists",
                             "the pairing comparison defines an antipode",
                             sd, ad.reason));
    return out;
  }
  out.push_back(check_pass("antipode-exists",
                           "the pairing comparison defines an antipode", sd));

  {
    std::vector<Intertwine<F>> conds_r, conds_l;
    for (std::size_t r = 0; r < rd; ++r) {
      conds_r.push_back(
          {ctx.Tsq.r_right[r], ctx.Ralg.right_mult(ctx.Ralg.basis_vec(r))});
      conds_l.push_back(
          {ctx.Tsq.r_left[r], ctx.Ralg.left_mult(ctx.Ralg.basis_vec(r))});
    }
    HomSpace<F> hr = hom_space(f, td, rd, conds_r);
    HomSpace<F> hl = hom_space(f, td, rd, conds_l);
    bool ok = subspace_eq(hr.flat, hl.flat);
    out.push_back(ok ? check_pass("dual-hom-spaces-coincide",
                                  "the right and left R-linear maps from T "
                                  "to R form the same space",
                                  td * rd)
                     : check_fail("dual-hom-spaces-coincide",
                                  "the right and left R-linear maps from T "
                                  "to R form the same space",
                                  td * rd,
                                  "dimensions " + std::to_string(hr.dim()) +
                                      " vs " + std::to_string(hl.dim())));
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < sd && ok; ++k)
      for (std::size_t m = 0; m < td; ++m) {
        Vec<F> em = vec_zero(f, td);
        em[m] = f.one();
        Vec<F> rep = ctx.Tsq.representative(em);
        Vec<F> lhs = pair_angle_ambient(ctx, ctx.S.map_at(k), rep);
        Vec<F> rhs = pair_bracket_ambient(ctx, rep, ad.tau_op[k]);
        if (!vec_eq(f, lhs, rhs)) {
          ok = false;
          w = "alpha=" + std::to_string(k) + " t=" + std::to_string(m);
          break;
        }
      }
    out.push_back(ok ? check_pass("antipode-defining-pairing",
                                  "applying an endomorphism to the first "
                                  "tensorand equals applying its antipode "
                                  "image to the second",
                                  sd * td)
                     : check_fail("antipode-defining-pairing",
                                  "applying an endomorphism to the first "
                                  "tensorand equals applying its antipode "
                                  "image to the second",
                                  sd * td, w));
  }

  {
    bool ok = rank(ad.tau) == sd;
    std::string w = ok ? "" : "the antipode matrix is singular";
    for (std::size_t i = 0; i < sd && ok; ++i)
      for (std::size_t j = 0; j < sd; ++j) {
        Vec<F> lhs = mat_apply(ad.tau, ctx.Salg.basis_product(i, j));
        Vec<F> rhs = ctx.Salg.multiply(ad.tau.col(j), ad.tau.col(i));
        if (!vec_eq(f, lhs, rhs)) {
          ok = false;
          w = "i=" + std::to_string(i) + " j=" + std::to_string(j);
          break;
        }
      }
    out.push_back(ok ? check_pass("antipode-anti-automorphism",
                                  "the antipode is a bijective "
                                  "anti-homomorphism of S",
                                  sd * sd)
                     : check_fail("antipode-anti-automorphism",
                                  "the antipode is a bijective "
                                  "anti-homomorphism of S",
                                  sd * sd, w));
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t r = 0; r < rd; ++r) {
      Vec<F> lam = ctx.lambda_map.col(r), rho = ctx.rho_map.col(r);
      if (!vec_eq(f, mat_apply(ad.tau, lam), rho) ||
          !vec_eq(f, mat_apply(ad.tau, rho), lam)) {
        ok = false;
        w = "r=" + std::to_string(r);
        break;
      }
    }
    out.push_back(ok ? check_pass("antipode-swaps-multiplications",
                                  "the antipode exchanges left and right "
                                  "multiplications by the centralizer",
                                  2 * rd)
                     : check_fail("antipode-swaps-multiplications",
                                  "the antipode exchanges left and right "
                                  "multiplications by the centralizer",
                                  2 * rd, w));
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < sd; ++k) {
      Vec<F> a = mat_apply(ad.tau_op[k], ctx.E.A.unit);
      Vec<F> b = mat_apply(ctx.S.map_at(k), ctx.E.A.unit);
      if (!vec_eq(f, a, b)) {
        ok = false;
        w = "alpha=" + std::to_string(k);
        break;
      }
    }
    out.push_back(ok ? check_pass("antipode-unit-value",
                                  "an endomorphism and its antipode image "
                                  "agree on the identity",
                                  sd)
                     : check_fail("antipode-unit-value",
                                  "an endomorphism and its antipode image "
                                  "agree on the identity",
                                  sd, w));
  }

  {
    QuasiBasis<F> qb;
    qb.side = Side::right;
    qb.t = ctx.lqb.t;
    for (std::size_t i = 0; i < ctx.lqb.size(); ++i)
      qb.ops.push_back(ctx.s_op(mat_apply(
          ad.tau, ctx.s_coords_or_throw(ctx.lqb.ops[i], "transport"))));
    bool ok = verify_quasibasis(ctx.pows, qb);
    out.push_back(ok ? check_pass("antipode-transports-left-quasibasis",
                                  "the antipode turns the left quasibasis "
                                  "into a right quasibasis",
                                  n * n)
                     : check_fail("antipode-transports-left-quasibasis",
                                  "the antipode turns the left quasibasis "
                                  "into a right quasibasis",
                                  n * n, "transported pairs fail"));
  }
  {
    QuasiBasis<F> qb;
    qb.side = Side::left;
    qb.t = ctx.rqb.t;
    for (std::size_t j = 0; j < ctx.rqb.size(); ++j)
      qb.ops.push_back(ctx.s_op(mat_apply(
          ad.tau, ctx.s_coords_or_throw(ctx.rqb.ops[j], "transport"))));
    bool ok = verify_quasibasis(ctx.pows, qb);
    out.push_back(ok ? check_pass("antipode-transports-right-quasibasis",
                                  "the antipode turns the right quasibasis "
                                  "into a left quasibasis",
                                  n * n)
                     : check_fail("antipode-transports-right-quasibasis",
                                  "the antipode turns the right quasibasis "
                                  "into a left quasibasis",
                                  n * n, "transported pairs fail"));
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t r = 0; r < rd && ok; ++r)
      for (std::size_t s = 0; s < rd && ok; ++s) {
        Matrix<F> lam = ctx.E.A.left_mult(ctx.r_elem(r));
        Matrix<F> rho = ctx.E.A.right_mult(ctx.r_elem(s));
        for (std::size_t k = 0; k < sd; ++k) {
          Matrix<F> one = mat_mul(lam, mat_mul(rho, ctx.S.map_at(k)));
          Matrix<F> two = mat_mul(ctx.S.map_at(k), mat_mul(rho, lam));
          if (!(one == two)) {
            ok = false;
            w = "r=" + std::to_string(r) + " s=" + std::to_string(s) +
                " alpha=" + std::to_string(k);
            break;
          }
        }
      }
    out.push_back(ok ? check_pass("bimodule-structures-coincide",
                                  "acting by the centralizer outside or "
                                  "inside an endomorphism is the same",
                                  rd * rd * sd)
                     : check_fail("bimodule-structures-coincide",
                                  "acting by the centralizer outside or "
                                  "inside an endomorphism is the same",
                                  rd * rd * sd, w));
  }

  // The same coproduct and counit make S a right bialgebroid once source
  // and target are exchanged; the tensor quotient is unchanged because the
  // two bimodule structures coincide.
  {
    BialgebroidView<F> op = make_bialgebroid_view(
        opposite_algebra(ctx.Salg), ctx.Ralg, ctx.lambda_map, ctx.rho_map);
    bool same = op.dim2() == S.view.dim2();
    if (same) {
      const std::size_t amb = sd * sd;
      for (std::size_t i = 0; i < amb && same; ++i) {
        Vec<F> e = vec_zero(f, amb);
        e[i] = f.one();
        same = vec_eq(f, op.chain.level(1).q.project(e),
                      S.view.chain.level(1).q.project(e));
      }
    }
    out.push_back(same
                      ? check_pass("dual-tensor-quotients-coincide",
                                   "both bimodule readings give the same "
                                   "tensor square of S",
                                   sd * sd)
                      : check_fail("dual-tensor-quotients-coincide",
                                   "both bimodule readings give the same "
                                   "tensor square of S",
                                   sd * sd, "quotients differ"));
    if (same) {
      op.delta = S.view.delta;
      op.eps = S.view.eps;
      append_checks(out, prefix_checks("right-axiom-",
                                       left_bialgebroid_axioms(op)));
    }
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t r = 0; r < rd && ok; ++r) {
      Matrix<F> lam = ctx.E.A.left_mult(ctx.r_elem(r));
      Matrix<F> rho = ctx.E.A.right_mult(ctx.r_elem(r));
      for (std::size_t k = 0; k < sd; ++k) {
        Vec<F> a = mat_apply(
            ad.tau, ctx.s_coords_or_throw(mat_mul(ctx.S.map_at(k), lam),
                                          "antipode twist"));
        Vec<F> b = ctx.s_coords_or_throw(mat_mul(rho, ad.tau_op[k]),
                                         "antipode twist");
        Vec<F> c = mat_apply(
            ad.tau, ctx.s_coords_or_throw(mat_mul(rho, ctx.S.map_at(k)),
                                          "antipode twist"));
        Vec<F> d = ctx.s_coords_or_throw(mat_mul(ad.tau_op[k], lam),
                                         "antipode twist");
        if (!vec_eq(f, a, b) || !vec_eq(f, c, d)) {
          ok = false;
          w = "r=" + std::to_string(r) + " alpha=" + std::to_string(k);
          break;
        }
      }
    }
    out.push_back(ok ? check_pass("antipode-source-target-twist",
                                  "the antipode exchanges composition with "
                                  "source and target multiplications",
                                  2 * rd * sd)
                     : check_fail("antipode-source-target-twist",
                                  "the antipode exchanges composition with "
                                  "source and target multiplications",
                                  2 * rd * sd, w));
  }

  {
    bool okl = true, okr = true;
    std::string wl, wr;
    for (std::size_t k = 0; k < sd; ++k) {
      Vec<F> lift = S.view.chain.level(1).q.lift(S.view.delta.col(k));
      Matrix<F> conv_l(f, n, n), conv_r(f, n, n);
      for (std::size_t a = 0; a < sd; ++a)
        for (std::size_t b = 0; b < sd; ++b) {
          const auto& c = lift[a * sd + b];
          if (f.is_zero(c)) continue;
          conv_l = mat_add(
              conv_l, mat_scale(c, mat_mul(ctx.S.map_at(a), ad.tau_op[b])));
          conv_r = mat_add(
              conv_r, mat_scale(c, mat_mul(ad.tau_op[a], ctx.S.map_at(b))));
        }
      Vec<F> ev = detail::eps_value(ctx, S.view.eps, k);
      if (okl && !(conv_l == ctx.E.A.left_mult(ev))) {
        okl = false;
        wl = "alpha=" + std::to_string(k);
      }
      if (okr && !(conv_r == ctx.E.A.right_mult(ev))) {
        okr = false;
        wr = "alpha=" + std::to_string(k);
      }
    }
    out.push_back(okl ? check_pass("antipode-convolution-source",
                                   "convolving the identity with the "
                                   "antipode gives left multiplication by "
                                   "the counit value",
                                   sd)
                      : check_fail("antipode-convolution-source",
                                   "convolving the identity with the "
                                   "antipode gives left multiplication by "
                                   "the counit value",
                                   sd, wl));
    out.push_back(okr ? check_pass("antipode-convolution-target",
                                   "convolving the antipode with the "
                                   "identity gives right multiplication by "
                                   "the counit value",
                                   sd)
                      : check_fail("antipode-convolution-target",
                                   "convolving the antipode with the "
                                   "identity gives right multiplication by "
                                   "the counit value",
                                   sd, wr));
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t r = 0; r < rd && ok; ++r) {
      Matrix<F> rho = ctx.E.A.right_mult(ctx.r_elem(r));
      Matrix<F> lam = ctx.E.A.left_mult(ctx.r_elem(r));
      for (std::size_t k = 0; k < sd && ok; ++k) {
        Vec<F> lift = S.view.chain.level(1).q.lift(S.view.delta.col(k));
        for (std::size_t x = 0; x < n && ok; ++x)
          for (std::size_t y = 0; y < n; ++y) {
            Vec<F> one = vec_zero(f, n), two = vec_zero(f, n);
            for (std::size_t a = 0; a < sd; ++a)
              for (std::size_t b = 0; b < sd; ++b) {
                const auto& c = lift[a * sd + b];
                if (f.is_zero(c)) continue;
                Vec<F> fx = mat_apply(rho, ctx.S.map_at(a).col(x));
                vec_addmul(f, one, c,
                           ctx.E.A.multiply(fx, ctx.S.map_at(b).col(y)));
                Vec<F> gy = mat_apply(lam, ctx.S.map_at(b).col(y));
                vec_addmul(f, two, c,
                           ctx.E.A.multiply(ctx.S.map_at(a).col(x), gy));
              }
            if (!vec_eq(f, one, two)) {
              ok = false;
              w = "r=" + std::to_string(r) + " alpha=" + std::to_string(k);
              break;
            }
          }
      }
    }
    out.push_back(ok ? check_pass("dual-mixing-identification",
                                  "right multiplying the first coproduct "
                                  "leg matches left multiplying the second "
                                  "under evaluation",
                                  rd * sd * n * n)
                     : check_fail("dual-mixing-identification",
                                  "right multiplying the first coproduct "
                                  "leg matches left multiplying the second "
                                  "under evaluation",
                                  rd * sd * n * n, w));
  }

  return out;
}

/// The skew Hopf algebra properties of (S, tau).
template <class F>
std::vector<CheckResult> skew_hopf_checks(const D2Context<F>& ctx,
                                          const SStructure<F>& S,
                                          const AntipodeData<F>& ad) {
  const F& f = ctx.field();
  const std::size_t sd = ctx.dimS(), rd = ctx.dimR(), n = ctx.dimA();
  std::vector<CheckResult> out;
  if (!ad.exists) {
    out.push_back(check_fail("skew-antipode-exists",
                             "the antipode underlying the skew Hopf "
                             "algebra exists",
                             sd, ad.reason));
    return out;
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t r = 0; r < rd && ok; ++r)
      for (std::size_t k = 0; k < sd; ++k) {
        Vec<F> lhs1 = mat_apply(ad.tau, mat_apply(ctx.s_act_left[r],
                                                  ctx.Salg.basis_vec(k)));
        Vec<F> rhs1 = mat_apply(ctx.s_act_right[r], ad.tau.col(k));
        Vec<F> lhs2 = mat_apply(ad.tau, mat_apply(ctx.s_act_right[r],
                                                  ctx.Salg.basis_vec(k)));
        Vec<F> rhs2 = mat_apply(ctx.s_act_left[r], ad.tau.col(k));
        if (!vec_eq(f, lhs1, rhs1) || !vec_eq(f, lhs2, rhs2)) {
          ok = false;
          w = "r=" + std::to_string(r) + " alpha=" + std::to_string(k);
          break;
        }
      }
    out.push_back(ok ? check_pass("skew-bimodule-twist",
                                  "the antipode swaps the two centralizer "
                                  "actions on S",
                                  2 * rd * sd)
                     : check_fail("skew-bimodule-twist",
                                  "the antipode swaps the two centralizer "
                                  "actions on S",
                                  2 * rd * sd, w));
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < sd && ok; ++i)
      for (std::size_t j = 0; j < sd; ++j) {
        Vec<F> lhs = mat_apply(S.view.eps, ctx.Salg.basis_product(i, j));
        Vec<F> rhs = ctx.Ralg.multiply(S.view.eps.col(i), S.view.eps.col(j));
        if (!vec_eq(f, lhs, rhs)) {
          ok = false;
          w = "i=" + std::to_string(i) + " j=" + std::to_string(j);
          break;
        }
      }
    out.push_back(ok ? check_pass("skew-counit-multiplicative",
                                  "the counit is multiplicative on S",
                                  sd * sd)
                     : check_fail("skew-counit-multiplicative",
                                  "the counit is multiplicative on S",
                                  sd * sd, w));
  }

  {
    bool okl = true, okr = true;
    std::string wl, wr;
    for (std::size_t k = 0; k < sd; ++k) {
      Vec<F> lift = S.view.chain.level(1).q.lift(S.view.delta.col(k));
      Vec<F> conv_l = vec_zero(f, sd), conv_r = vec_zero(f, sd);
      for (std::size_t a = 0; a < sd; ++a)
        for (std::size_t b = 0; b < sd; ++b) {
          const auto& c = lift[a * sd + b];
          if (f.is_zero(c)) continue;
          vec_addmul(f, conv_l, c,
                     ctx.Salg.multiply(ctx.Salg.basis_vec(a),
                                       ad.tau.col(b)));
          vec_addmul(f, conv_r, c,
                     ctx.Salg.multiply(ad.tau.col(a),
                                       ctx.Salg.basis_vec(b)));
        }
      Vec<F> left_unit = vec_zero(f, sd), right_unit = vec_zero(f, sd);
      for (std::size_t i = 0; i < rd; ++i) {
        vec_addmul(f, left_unit, S.view.eps.at(i, k), ctx.lambda_map.col(i));
        vec_addmul(f, right_unit, S.view.eps.at(i, k), ctx.rho_map.col(i));
      }
      if (okl && !vec_eq(f, conv_l, left_unit)) {
        okl = false;
        wl = "alpha=" + std::to_string(k);
      }
      if (okr && !vec_eq(f, conv_r, right_unit)) {
        okr = false;
        wr = "alpha=" + std::to_string(k);
      }
    }
    out.push_back(okl ? check_pass("skew-convolution-left",
                                   "the identity convolved with the "
                                   "antipode is the counit acting on the "
                                   "left of the unit",
                                   sd)
                      : check_fail("skew-convolution-left",
                                   "the identity convolved with the "
                                   "antipode is the counit acting on the "
                                   "left of the unit",
                                   sd, wl));
    out.push_back(okr ? check_pass("skew-convolution-right",
                                   "the antipode convolved with the "
                                   "identity is the counit acting on the "
                                   "right of the unit",
                                   sd)
                      : check_fail("skew-convolution-right",
                                   "the antipode convolved with the "
                                   "identity is the counit acting on the "
                                   "right of the unit",
                                   sd, wr));
  }

  {
    Matrix<F> lhs = mat_mul(S.view.eps, ad.tau);
    bool ok = lhs == S.view.eps;
    out.push_back(ok ? check_pass("skew-counit-stable",
                                  "the counit is unchanged by the antipode",
                                  sd)
                     : check_fail("skew-counit-stable",
                                  "the counit is unchanged by the antipode",
                                  sd, "matrices differ"));
  }

  {
    bool ok = true;
    std::string w;
    const auto& q1 = S.view.chain.level(1).q;
    for (std::size_t k = 0; k < sd; ++k) {
      Vec<F> lhs = S.view.delta_of(ad.tau.col(k));
      Vec<F> lift = q1.lift(S.view.delta.col(k));
      Vec<F> amb = vec_zero(f, sd * sd);
      for (std::size_t a = 0; a < sd; ++a)
        for (std::size_t b = 0; b < sd; ++b) {
          const auto& c = lift[a * sd + b];
          if (f.is_zero(c)) continue;
          // twist then apply the antipode to both legs
          Vec<F> ta = ad.tau.col(a), tb = ad.tau.col(b);
          for (std::size_t i = 0; i < sd; ++i) {
            if (f.is_zero(tb[i])) continue;
            for (std::size_t j = 0; j < sd; ++j)
              if (!f.is_zero(ta[j])) {
                auto& cell = amb[i * sd + j];
                cell = f.add(cell, f.mul(c, f.mul(tb[i], ta[j])));
              }
          }
        }
      Vec<F> rhs = q1.project(amb);
      if (!vec_eq(f, lhs, rhs)) {
        ok = false;
        w = "alpha=" + std::to_string(k);
        break;
      }
    }
    out.push_back(ok ? check_pass("skew-anti-coalgebra",
                                  "the antipode reverses the coproduct",
                                  sd)
                     : check_fail("skew-anti-coalgebra",
                                  "the antipode reverses the coproduct",
                                  sd, w));
  }

  {
    Matrix<F> sq = mat_mul(ad.tau, ad.tau);
    bool involutive = sq == Matrix<F>::identity(f, sd);
    std::size_t order = 1;
    Matrix<F> pow = ad.tau;
    while (!(pow == Matrix<F>::identity(f, sd)) && order <= 2 * sd * sd) {
      pow = mat_mul(ad.tau, pow);
      ++order;
    }
    std::string note =
        involutive ? "the antipode is an involution"
                   : (pow == Matrix<F>::identity(f, sd)
                          ? "the antipode has order " + std::to_string(order)
                          : "the antipode has order above " +
                                std::to_string(2 * sd * sd));
    out.push_back(
        check_pass("skew-antipode-order",
                   "the multiplicative order of the antipode, recorded for "
                   "information",
                   sd, note));
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < sd && ok; ++k) {
      Vec<F> lift = S.view.chain.level(1).q.lift(S.view.delta.col(k));
      for (std::size_t x = 0; x < n && ok; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          Vec<F> xy = ctx.E.A.basis_product(x, y);
          Vec<F> lhs = mat_apply(ad.tau_op[k], xy);
          Vec<F> rhs = vec_zero(f, n);
          for (std::size_t a = 0; a < sd; ++a)
            for (std::size_t b = 0; b < sd; ++b) {
              const auto& c = lift[a * sd + b];
              if (f.is_zero(c)) continue;
              Vec<F> xb = mat_apply(ad.tau_op[b], ctx.E.A.basis_vec(x));
              Vec<F> ya = mat_apply(ad.tau_op[a], ctx.E.A.basis_vec(y));
              vec_addmul(f, rhs, c, ctx.E.A.multiply(xb, ya));
            }
          if (!vec_eq(f, lhs, rhs)) {
            ok = false;
            w = "alpha=" + std::to_string(k) + " x=" + std::to_string(x) +
                " y=" + std::to_string(y);
            break;
          }
        }
    }
    out.push_back(ok ? check_pass("skew-module-algebra",
                                  "acting through the antipode measures "
                                  "products with reversed coproduct legs",
                                  sd * n * n)
                     : check_fail("skew-module-algebra",
                                  "acting through the antipode measures "
                                  "products with reversed coproduct legs",
                                  sd * n * n, w));
  }

  return out;
}

/// Separability data for the centralizer and the section axioms.
template <class F>
struct LuData {
  bool separable = false;
  Vec<F> e;  // element of R (x) R over the ground field
};

template <class F>
LuData<F> build_separability(const D2Context<F>& ctx) {
  const F& f = ctx.field();
  const std::size_t rd = ctx.dimR();
  LuData<F> lu;
  Matrix<F> sys(f, rd * rd * rd + rd, rd * rd);
  Vec<F> rhs = vec_zero(f, rd * rd * rd + rd);
  for (std::size_t r = 0; r < rd; ++r) {
    Matrix<F> L = ctx.Ralg.left_mult(ctx.Ralg.basis_vec(r));
    Matrix<F> R = ctx.Ralg.right_mult(ctx.Ralg.basis_vec(r));
    Matrix<F> diff = mat_sub(kron(L, Matrix<F>::identity(f, rd)),
                             kron(Matrix<F>::identity(f, rd), R));
    for (std::size_t i = 0; i < rd * rd; ++i)
      for (std::size_t j = 0; j < rd * rd; ++j)
        sys.at(r * rd * rd + i, j) = diff.at(i, j);
  }
  for (std::size_t i = 0; i < rd; ++i)
    for (std::size_t j = 0; j < rd; ++j) {
      const Vec<F>& prod = ctx.Ralg.basis_product(i, j);
      for (std::size_t k = 0; k < rd; ++k)
        sys.at(rd * rd * rd + k, i * rd + j) = prod[k];
    }
  for (std::size_t k = 0; k < rd; ++k)
    rhs[rd * rd * rd + k] = ctx.Ralg.unit[k];
  auto sol = solve(sys, rhs);
  if (!sol) return lu;
  lu.separable = true;
  lu.e = *sol;
  return lu;
}

template <class F>
std::vector<CheckResult> lu_checks(const D2Context<F>& ctx,
                                   const SStructure<F>& S,
                                   const AntipodeData<F>& ad,
                                   const LuData<F>& lu) {
  const F& f = ctx.field();
  const std::size_t sd = ctx.dimS(), rd = ctx.dimR(), n = ctx.dimA();
  std::vector<CheckResult> out;
  if (!ad.exists) {
    out.push_back(check_fail("separability-antipode-exists",
                             "the antipode underlying the section axioms "
                             "exists",
                             sd, ad.reason));
    return out;
  }
  if (!lu.separable) {
    out.push_back(check_pass(
        "separability-element", "the centralizer is separable", rd * rd,
        "not required here: no separability element exists over this "
        "ground field, so the section axioms do not apply"));
    return out;
  }

  {
    bool ok = true;
    std::string w;
    Vec<F> mult = vec_zero(f, rd);
    for (std::size_t i = 0; i < rd; ++i)
      for (std::size_t j = 0; j < rd; ++j)
        vec_addmul(f, mult, lu.e[i * rd + j], ctx.Ralg.basis_product(i, j));
    if (!vec_eq(f, mult, ctx.Ralg.unit)) {
      ok = false;
      w = "the element does not multiply to the identity";
    }
    for (std::size_t r = 0; r < rd && ok; ++r) {
      Matrix<F> L = ctx.Ralg.left_mult(ctx.Ralg.basis_vec(r));
      Matrix<F> R = ctx.Ralg.right_mult(ctx.Ralg.basis_vec(r));
      Vec<F> a = mat_apply(kron(L, Matrix<F>::identity(f, rd)), lu.e);
      Vec<F> b = mat_apply(kron(Matrix<F>::identity(f, rd), R), lu.e);
      if (!vec_eq(f, a, b)) {
        ok = false;
        w = "r=" + std::to_string(r);
      }
    }
    out.push_back(ok ? check_pass("separability-element",
                                  "the centralizer is separable",
                                  rd * rd,
                                  "element " + vec_to_string(f, lu.e))
                     : check_fail("separability-element",
                                  "the centralizer is separable", rd * rd,
                                  w));
  }

  // eta on a canonical lift of the tensor square.
  const auto& q1 = S.view.chain.level(1).q;
  auto eta = [&](const Vec<F>& cls) {
    Vec<F> lift = q1.lift(cls);
    Vec<F> amb = vec_zero(f, sd * sd);
    for (std::size_t a = 0; a < sd; ++a)
      for (std::size_t b = 0; b < sd; ++b) {
        const auto& c = lift[a * sd + b];
        if (f.is_zero(c)) continue;
        for (std::size_t i = 0; i < rd; ++i)
          for (std::size_t j = 0; j < rd; ++j) {
            const auto& ec = lu.e[i * rd + j];
            if (f.is_zero(ec)) continue;
            Vec<F> left = mat_apply(ctx.s_act_right[i],
                                    ctx.Salg.basis_vec(a));
            Vec<F> right = mat_apply(ctx.s_act_left[j],
                                     ctx.Salg.basis_vec(b));
            auto cc = f.mul(c, ec);
            for (std::size_t p = 0; p < sd; ++p) {
              if (f.is_zero(left[p])) continue;
              for (std::size_t q = 0; q < sd; ++q)
                if (!f.is_zero(right[q])) {
                  auto& cell = amb[p * sd + q];
                  cell = f.add(cell, f.mul(cc, f.mul(left[p], right[q])));
                }
            }
          }
      }
    return amb;
  };

  {
    bool ok = true;
    std::string w;
    for (std::size_t z = 0; z < S.view.dim2(); ++z) {
      Vec<F> cls = vec_zero(f, S.view.dim2());
      cls[z] = f.one();
      Vec<F> back = q1.project(eta(cls));
      if (!vec_eq(f, back, cls)) {
        ok = false;
        w = "z=" + std::to_string(z);
        break;
      }
    }
    out.push_back(ok ? check_pass("separability-section",
                                  "the separability element splits the "
                                  "projection onto the tensor square",
                                  S.view.dim2())
                     : check_fail("separability-section",
                                  "the separability element splits the "
                                  "projection onto the tensor square",
                                  S.view.dim2(), w));
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < sd; ++k) {
      Vec<F> amb = eta(S.view.delta.col(k));
      Matrix<F> acc(f, n, n);
      for (std::size_t a = 0; a < sd; ++a)
        for (std::size_t b = 0; b < sd; ++b) {
          const auto& c = amb[a * sd + b];
          if (f.is_zero(c)) continue;
          acc = mat_add(acc,
                        mat_scale(c, mat_mul(ctx.S.map_at(a),
                                             ad.tau_op[b])));
        }
      Vec<F> ev = detail::eps_value(ctx, S.view.eps, k);
      if (!(acc == ctx.E.A.left_mult(ev))) {
        ok = false;
        w = "alpha=" + std::to_string(k);
        break;
      }
    }
    out.push_back(ok ? check_pass("separability-convolution",
                                  "composing the section with the antipode "
                                  "convolution recovers the source of the "
                                  "counit",
                                  sd)
                     : check_fail("separability-convolution",
                                  "composing the section with the antipode "
                                  "convolution recovers the source of the "
                                  "counit",
                                  sd, w));
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < sd; ++k) {
      Vec<F> lift = q1.lift(S.view.delta.col(k));
      Vec<F> conv = vec_zero(f, sd);
      for (std::size_t a = 0; a < sd; ++a)
        for (std::size_t b = 0; b < sd; ++b) {
          const auto& c = lift[a * sd + b];
          if (f.is_zero(c)) continue;
          vec_addmul(f, conv, c,
                     ctx.Salg.multiply(ad.tau.col(a),
                                       ctx.Salg.basis_vec(b)));
        }
      Vec<F> expected = vec_zero(f, sd);
      Vec<F> eps_tau = mat_apply(S.view.eps, ad.tau.col(k));
      for (std::size_t i = 0; i < rd; ++i)
        vec_addmul(f, expected, eps_tau[i], ctx.rho_map.col(i));
      if (!vec_eq(f, conv, expected)) {
        ok = false;
        w = "alpha=" + std::to_string(k);
        break;
      }
    }
    out.push_back(ok ? check_pass("separability-target-convolution",
                                  "the antipode convolution recovers the "
                                  "target of the counit of the antipode "
                                  "image",
                                  sd)
                     : check_fail("separability-target-convolution",
                                  "the antipode convolution recovers the "
                                  "target of the counit of the antipode "
                                  "image",
                                  sd, w));
  }

  return out;
}

/// Mirror construction on T, only meaningful when the centralizer is the
/// whole center of A; reported as information.
template <class F>
std::vector<CheckResult> mirror_antipode_checks(const D2Context<F>& ctx,
                                                const PairingTable<F>& P) {
  const F& f = ctx.field();
  const std::size_t sd = ctx.dimS(), td = ctx.dimT(), rd = ctx.dimR();
  const std::size_t n = ctx.dimA();
  std::vector<CheckResult> out;

  Matrix<F> stacked(f, n * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    Matrix<F> comm = mat_sub(ctx.E.A.left_mult(ctx.E.A.basis_vec(a)),
                             ctx.E.A.right_mult(ctx.E.A.basis_vec(a)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        stacked.at(a * n + i, j) = comm.at(i, j);
  }
  Subspace<F> center = Subspace<F>::from_rows(nullspace(stacked));
  if (!subspace_eq(center, ctx.R)) {
    out.push_back(check_pass(
        "mirror-antipode", "the pairing comparison defines an antipode on T",
        td,
        "not defined here: the centralizer has dimension " +
            std::to_string(ctx.dimR()) + " while the center has dimension " +
            std::to_string(center.dim())));
    return out;
  }

  Matrix<F> lhs(f, sd * rd, td), rhs(f, sd * rd, td);
  for (std::size_t m = 0; m < td; ++m)
    for (std::size_t k = 0; k < sd; ++k)
      for (std::size_t i = 0; i < rd; ++i) {
        lhs.at(k * rd + i, m) = P.angle[k].at(i, m);
        rhs.at(k * rd + i, m) = P.bracket[k].at(i, m);
      }
  bool ok = rank(lhs) == td;
  std::string w = ok ? "" : "the pairing against S is degenerate on T";
  Matrix<F> tauT(f, td, td);
  if (ok)
    for (std::size_t m = 0; m < td; ++m) {
      auto sol = solve(lhs, rhs.col(m));
      if (!sol) {
        ok = false;
        w = "no solution at basis index " + std::to_string(m);
        break;
      }
      for (std::size_t i = 0; i < td; ++i) tauT.at(i, m) = (*sol)[i];
    }
  if (ok && rank(tauT) != td) {
    ok = false;
    w = "the mirror map is singular";
  }
  if (ok) {
    for (std::size_t i = 0; i < td && ok; ++i)
      for (std::size_t j = 0; j < td; ++j) {
        Vec<F> ei = vec_zero(f, td), ej = vec_zero(f, td);
        ei[i] = f.one();
        ej[j] = f.one();
        Vec<F> a = mat_apply(tauT, ctx.Tsq.multiply(ei, ej));
        Vec<F> b = ctx.Tsq.multiply(mat_apply(tauT, ej),
                                    mat_apply(tauT, ei));
        if (!vec_eq(f, a, b)) {
          ok = false;
          w = "not an anti-homomorphism at i=" + std::to_string(i) +
              " j=" + std::to_string(j);
          break;
        }
      }
  }
  if (ok && !(mat_mul(ctx.Tsq.counit, tauT) == ctx.Tsq.counit)) {
    ok = false;
    w = "the counit is not preserved";
  }
  out.push_back(ok ? check_pass("mirror-antipode",
                                "the pairing comparison defines an antipode "
                                "on T",
                                td,
                                "anti-automorphism confirmed on T")
                   : check_fail("mirror-antipode",
                                "the pairing comparison defines an antipode "
                                "on T",
                                td, w));
  return out;
}

}  // namespace d2hopf
