#pragma once

#include <vector>

#include "algebra.hpp"
#include "matrix.hpp"
#include "quotient.hpp"

namespace d2hopf {

/// One intertwining condition on an unknown map X: codomain x domain.
/// Requires X * dom_op = cod_op * X, i.e. X carries the domain operator to
/// the codomain operator. Left linearity over b uses (L_b, L_b'), right
/// linearity uses the right-action operators.
template <class F>
struct Intertwine {
  Matrix<F> dom_op;
  Matrix<F> cod_op;
};

/// Flatten row-major: entry (i, j) of a cod x dom matrix sits at i*dom + j.
template <class F>
Vec<F> flatten_map(const Matrix<F>& m) {
  return m.a;
}

template <class F>
Matrix<F> unflatten_map(F f, std::size_t cod, std::size_t dom,
                        const Vec<F>& v) {
  Matrix<F> m(f, cod, dom);
  m.a = v;
  return m;
}

/// Basis of the space of all F-linear maps domain -> codomain satisfying
/// every intertwining condition, in canonical flattened coordinates.
template <class F>
struct HomSpace {
  F field{};
  std::size_t dom = 0;
  std::size_t cod = 0;
  Subspace<F> flat;  // canonical basis of flattened solution maps

  std::size_t dim() const { return flat.dim(); }

  Matrix<F> map_at(std::size_t k) const {
    return unflatten_map(field, cod, dom, flat.basis.row(k));
  }

  /// Coordinates of a concrete map in this basis; nullopt when the map
  /// fails one of the defining constraints.
  std::optional<Vec<F>> coords(const Matrix<F>& m) const {
    return flat.coords(flatten_map(m));
  }

  Matrix<F> from_coords(const Vec<F>& c) const {
    return unflatten_map(field, cod, dom, flat.from_coords(c));
  }
};

/// Solves the stacked linear system X*D_g = C_g*X over all conditions g.
/// The unknown is the flattened matrix; one nullspace computation yields a
/// canonical basis independent of condition order.
template <class F>
HomSpace<F> hom_space(F f, std::size_t dom, std::size_t cod,
                      const std::vector<Intertwine<F>>& conds) {
  std::size_t unknowns = cod * dom;
  Matrix<F> sys(f, conds.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (const auto& g : conds) {
    if (g.dom_op.rows != dom || g.dom_op.cols != dom ||
        g.cod_op.rows != cod || g.cod_op.cols != cod)
      throw std::invalid_argument("hom_space: operator shape mismatch");
    // (X D - C X)_{ij} = sum_q X_{iq} D_{qj} - sum_p C_{ip} X_{pj}
    for (std::size_t i = 0; i < cod; ++i)
      for (std::size_t j = 0; j < dom; ++j) {
        for (std::size_t q = 0; q < dom; ++q)
          sys.at(row, i * dom + q) = g.dom_op.at(q, j);
        for (std::size_t p = 0; p < cod; ++p) {
          auto& cell = sys.at(row, p * dom + j);
          cell = f.sub(cell, g.cod_op.at(i, p));
        }
        ++row;
      }
  }
  HomSpace<F> h;
  h.field = f;
  h.dom = dom;
  h.cod = cod;
  h.flat = Subspace<F>::from_rows(nullspace(sys));
  return h;
}

/// Intertwining conditions for the four standard linearity tags over the
/// canonical B-basis of an extension, given the domain/codomain operators.
template <class F>
std::vector<Intertwine<F>> bimodule_hom_conditions(
    const std::vector<Matrix<F>>& dom_left,
    const std::vector<Matrix<F>>& cod_left,
    const std::vector<Matrix<F>>& dom_right,
    const std::vector<Matrix<F>>& cod_right) {
  std::vector<Intertwine<F>> conds;
  for (std::size_t i = 0; i < dom_left.size(); ++i)
    conds.push_back({dom_left[i], cod_left[i]});
  for (std::size_t i = 0; i < dom_right.size(); ++i)
    conds.push_back({dom_right[i], cod_right[i]});
  return conds;
}

/// Hom(A_B, P_B) as an A-A bimodule: (a.f.a')(x) = a f(a' x). Returns the
/// hom space together with the bimodule structure on its coordinates.
template <class F>
struct HomBimodule {
  HomSpace<F> maps;   // right-B-linear maps A -> P
  Bimodule<F> actions;  // A-A bimodule structure on the coordinate space
};

template <class F>
HomBimodule<F> hom_bimodule(const Extension<F>& E, const Bimodule<F>& P) {
  const F& f = E.field();
  std::size_t n = E.dimA();
  std::vector<Intertwine<F>> conds;
  for (std::size_t b = 0; b < E.dimB(); ++b)
    conds.push_back({E.b_right[b], P.right_op(E.b_vec(b))});
  HomBimodule<F> out;
  out.maps = hom_space(f, n, P.dim, conds);

  std::size_t d = out.maps.dim();
  out.actions.field = f;
  out.actions.dim = d;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<F> lm(f, d, d), rm(f, d, d);
    Matrix<F> pl = P.left_op(E.A.basis_vec(i));
    Matrix<F> al = E.A.left_mult(E.A.basis_vec(i));
    for (std::size_t k = 0; k < d; ++k) {
      Matrix<F> fk = out.maps.map_at(k);
      auto lc = out.maps.coords(mat_mul(pl, fk));
      auto rc = out.maps.coords(mat_mul(fk, al));
      if (!lc || !rc)
        throw StructureError("hom_bimodule: action leaves the hom space");
      for (std::size_t r = 0; r < d; ++r) {
        lm.at(r, k) = (*lc)[r];
        rm.at(r, k) = (*rc)[r];
      }
    }
    out.actions.left.push_back(lm);
    out.actions.right.push_back(rm);
  }
  return out;
}

}  // namespace d2hopf
