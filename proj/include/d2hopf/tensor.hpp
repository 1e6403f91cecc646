#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "matrix.hpp"
#include "quotient.hpp"

namespace d2hopf {

/// Raised when a construction would exceed the configured ambient size cap.
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ambient-dimension cap for the tensor square, overridable via the
/// D2HOPF_MAX_DIM environment variable.
inline std::size_t max_ambient_dim() {
  if (const char* s = std::getenv("D2HOPF_MAX_DIM")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 128;
}

/// Induced map on quotient classes from a map src-ambient -> target
/// coordinates. Verifies that source relations map to zero, so the result is
/// well defined on classes.
template <class F>
Matrix<F> descend_to_coords(const QuotientSpace<F>& src,
                            const Matrix<F>& coord_map) {
  if (coord_map.cols != src.ambient)
    throw std::invalid_argument("descend_to_coords: shape mismatch");
  const F& f = src.field;
  for (std::size_t i = 0; i < src.rel.rows; ++i)
    if (!vec_is_zero(f, mat_apply(coord_map, src.rel.row(i))))
      throw std::domain_error("descend: map does not respect relations");
  Matrix<F> out(f, coord_map.rows, src.dim());
  for (std::size_t k = 0; k < src.dim(); ++k) {
    Vec<F> e = vec_zero(f, src.dim());
    e[k] = f.one();
    Vec<F> img = mat_apply(coord_map, src.lift(e));
    for (std::size_t i = 0; i < out.rows; ++i) out.at(i, k) = img[i];
  }
  return out;
}

/// Induced map between two quotients of possibly different ambients, given
/// the map on ambient coordinates.
template <class F>
Matrix<F> descend_map(const QuotientSpace<F>& src, const QuotientSpace<F>& tgt,
                      const Matrix<F>& ambient_map) {
  if (ambient_map.cols != src.ambient || ambient_map.rows != tgt.ambient)
    throw std::invalid_argument("descend_map: ambient shape mismatch");
  return descend_to_coords(src, mat_mul(tgt.proj_mat(), ambient_map));
}

/// Iterated tensor product V_1 (x)_R V_2 (x)_R ... over a fixed middle ring,
/// built one junction at a time so ambient sizes stay proportional to the
/// running quotient dimension rather than the full Kronecker power.
///
/// Each factor carries the ring's left and right action on it; each level k
/// stores the quotient of the first k+1 factors together with the induced
/// ring actions on its outermost factors.
template <class F>
struct TensorChain {
  struct Factor {
    std::size_t dim = 0;
    std::vector<Matrix<F>> ring_left;   // per ring-basis element
    std::vector<Matrix<F>> ring_right;  // per ring-basis element
  };
  struct Level {
    QuotientSpace<F> q;
    std::vector<Matrix<F>> ring_left;   // induced action on the first factor
    std::vector<Matrix<F>> ring_right;  // induced action on the last factor
  };

  F field{};
  std::size_t ring_dim = 0;
  std::vector<Factor> factors;
  std::vector<Level> levels;

  TensorChain() = default;
  TensorChain(F f, std::size_t rdim) : field(f), ring_dim(rdim) {}

  std::size_t size() const { return levels.size(); }
  std::size_t dim(std::size_t k) const { return levels.at(k).q.dim(); }
  const Level& level(std::size_t k) const { return levels.at(k); }

  void add_factor(Factor fac) {
    if (fac.ring_left.size() != ring_dim || fac.ring_right.size() != ring_dim)
      throw std::invalid_argument("tensor chain: ring action count mismatch");
    if (levels.empty()) {
      Level l;
      l.q = QuotientSpace<F>::from_relations(field, fac.dim,
                                             Matrix<F>(field, 0, fac.dim));
      l.ring_left = fac.ring_left;
      l.ring_right = fac.ring_right;
      levels.push_back(std::move(l));
      factors.push_back(std::move(fac));
      return;
    }
    const Level& prev = levels.back();
    std::size_t pd = prev.q.dim();
    std::size_t ambient = pd * fac.dim;
    if (ambient > 32 * max_ambient_dim())
      throw SizeGuardError("tensor chain step ambient " +
                           std::to_string(ambient) + " exceeds sanity bound");
    // Relations (z*r) (x) e_j - z (x) (r*e_j) over quotient basis z, ring
    // basis r, factor basis j.
    Matrix<F> rel(field, pd * ring_dim * fac.dim, ambient);
    std::size_t row = 0;
    for (std::size_t z = 0; z < pd; ++z)
      for (std::size_t r = 0; r < ring_dim; ++r) {
        const Matrix<F>& zr = prev.ring_right[r];
        for (std::size_t j = 0; j < fac.dim; ++j) {
          for (std::size_t w = 0; w < pd; ++w)
            if (!field.is_zero(zr.at(w, z)))
              rel.at(row, w * fac.dim + j) = zr.at(w, z);
          const Matrix<F>& rj = fac.ring_left[r];
          for (std::size_t m = 0; m < fac.dim; ++m)
            if (!field.is_zero(rj.at(m, j))) {
              auto& cell = rel.at(row, z * fac.dim + m);
              cell = field.sub(cell, rj.at(m, j));
            }
          ++row;
        }
      }
    Level l;
    l.q = QuotientSpace<F>::from_relations(field, ambient, rel);
    for (std::size_t r = 0; r < ring_dim; ++r) {
      l.ring_left.push_back(l.q.induced_map(
          kron(prev.ring_left[r], Matrix<F>::identity(field, fac.dim))));
      l.ring_right.push_back(l.q.induced_map(
          kron(Matrix<F>::identity(field, pd), fac.ring_right[r])));
    }
    levels.push_back(std::move(l));
    factors.push_back(std::move(fac));
  }

  /// Class of the pure tensor parts[0] (x) ... (x) parts[m-1] in level m-1.
  Vec<F> embed(const std::vector<Vec<F>>& parts) const {
    if (parts.empty() || parts.size() > levels.size())
      throw std::invalid_argument("tensor chain embed: bad factor count");
    Vec<F> cur = levels[0].q.project(parts[0]);
    for (std::size_t k = 1; k < parts.size(); ++k) {
      std::size_t fd = factors[k].dim;
      Vec<F> amb = vec_zero(field, cur.size() * fd);
      for (std::size_t w = 0; w < cur.size(); ++w) {
        if (field.is_zero(cur[w])) continue;
        for (std::size_t j = 0; j < fd; ++j)
          if (!field.is_zero(parts[k][j]))
            amb[w * fd + j] = field.mul(cur[w], parts[k][j]);
      }
      cur = levels[k].q.project(amb);
    }
    return cur;
  }
};

/// Subspace of vectors on which two operator families agree, e.g. the
/// B-central part {v : b.v = v.b for every b}.
template <class F>
Subspace<F> coincidence_subspace(F f, const std::vector<Matrix<F>>& left,
                                 const std::vector<Matrix<F>>& right) {
  if (left.empty()) throw std::invalid_argument("coincidence: no operators");
  std::size_t n = left[0].cols;
  Matrix<F> stacked(f, left.size() * n, n);
  for (std::size_t b = 0; b < left.size(); ++b) {
    Matrix<F> d = mat_sub(left[b], right[b]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked.at(b * n + i, j) = d.at(i, j);
  }
  return Subspace<F>::from_rows(nullspace(stacked));
}

/// Tensor powers A (x)_B ... (x)_B A of an extension, with the full outer
/// A-actions and the junction multiplication maps used by the relative
/// cochain differentials.
template <class F>
struct APowers {
  const Extension<F>* E = nullptr;
  TensorChain<F> chain;
  // Outer actions per power (1-based power index k stored at k-1).
  std::vector<std::vector<Matrix<F>>> left_alg;
  std::vector<std::vector<Matrix<F>>> right_alg;
  // mult[k-1][pos]: power k -> power k-1 multiplying factors pos, pos+1.
  std::vector<std::vector<Matrix<F>>> mult;

  static APowers make(const Extension<F>& E) {
    const F& f = E.field();
    std::size_t n = E.dimA();
    if (n * n > max_ambient_dim())
      throw SizeGuardError(
          "tensor square ambient " + std::to_string(n * n) +
          " exceeds the cap " + std::to_string(max_ambient_dim()) +
          " (set D2HOPF_MAX_DIM to raise)");
    APowers p;
    p.E = &E;
    p.chain = TensorChain<F>(f, E.dimB());
    p.extend_to(2);
    return p;
  }

  std::size_t powers() const { return chain.size(); }
  std::size_t dim(std::size_t k) const { return chain.dim(k - 1); }
  const QuotientSpace<F>& quotient(std::size_t k) const {
    return chain.level(k - 1).q;
  }

  /// Ensure powers 1..k are built.
  void extend_to(std::size_t k) {
    const F& f = E->field();
    std::size_t n = E->dimA();
    while (chain.size() < k) {
      typename TensorChain<F>::Factor fac;
      fac.dim = n;
      fac.ring_left = E->b_left;
      fac.ring_right = E->b_right;
      chain.add_factor(fac);
      std::size_t lev = chain.size() - 1;
      std::vector<Matrix<F>> la, ra;
      if (lev == 0) {
        for (std::size_t i = 0; i < n; ++i) {
          la.push_back(E->A.left_mult(E->A.basis_vec(i)));
          ra.push_back(E->A.right_mult(E->A.basis_vec(i)));
        }
      } else {
        std::size_t pd = chain.dim(lev - 1);
        for (std::size_t i = 0; i < n; ++i) {
          la.push_back(chain.level(lev).q.induced_map(
              kron(left_alg[lev - 1][i], Matrix<F>::identity(f, n))));
          ra.push_back(chain.level(lev).q.induced_map(
              kron(Matrix<F>::identity(f, pd),
                   E->A.right_mult(E->A.basis_vec(i)))));
        }
      }
      left_alg.push_back(std::move(la));
      right_alg.push_back(std::move(ra));
      mult.push_back(build_mult_maps(lev));
    }
  }

  /// Class of a pure tensor of A-vectors in the matching power.
  Vec<F> embed(const std::vector<Vec<F>>& parts) const {
    return chain.embed(parts);
  }

  /// Outer bimodule structure on power k (the coefficient bimodule
  /// P = A (x)_B A is bimodule(2)).
  Bimodule<F> bimodule(std::size_t k) const {
    Bimodule<F> m;
    m.field = E->field();
    m.dim = dim(k);
    m.left = left_alg[k - 1];
    m.right = right_alg[k - 1];
    return m;
  }

  /// Multiplication of adjacent factors pos, pos+1 (0-based), power k -> k-1.
  const Matrix<F>& mult_at(std::size_t k, std::size_t pos) const {
    return mult.at(k - 1).at(pos);
  }

 private:
  std::vector<Matrix<F>> build_mult_maps(std::size_t lev) {
    std::vector<Matrix<F>> out;
    if (lev == 0) return out;  // a single factor has no junctions
    const F& f = E->field();
    std::size_t n = E->dimA();
    std::size_t pd = chain.dim(lev - 1);
    const auto& q = chain.level(lev).q;
    for (std::size_t pos = 0; pos < lev; ++pos) {
      // coord_map: level-lev ambient (prefix coords x last factor) into the
      // coordinates of the contracted power.
      Matrix<F> coord_map;
      if (pos + 1 == lev) {
        // Last junction: (w (x) e_j) -> w * e_j via the right A-action on
        // the prefix.
        coord_map = Matrix<F>(f, pd, pd * n);
        for (std::size_t w = 0; w < pd; ++w)
          for (std::size_t j = 0; j < n; ++j) {
            const Matrix<F>& rj = right_alg[lev - 1][j];
            for (std::size_t i = 0; i < pd; ++i)
              if (!f.is_zero(rj.at(i, w)))
                coord_map.at(i, w * n + j) = rj.at(i, w);
          }
      } else {
        // Contract inside the prefix, then reattach the last factor and
        // project into the contracted power's quotient.
        const Matrix<F>& inner = mult[lev - 1][pos];
        Matrix<F> amb = kron(inner, Matrix<F>::identity(f, n));
        coord_map = mat_mul(chain.level(lev - 1).q.proj_mat(), amb);
      }
      out.push_back(descend_to_coords(q, coord_map));
    }
    return out;
  }
};

/// Restriction of an operator to an invariant subspace, in the subspace's
/// canonical coordinates. Throws when the subspace is not invariant.
template <class F>
Matrix<F> restrict_to(const Subspace<F>& s, const Matrix<F>& op) {
  const F& f = s.field;
  Matrix<F> out(f, s.dim(), s.dim());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    auto c = s.coords(mat_apply(op, s.basis.row(k)));
    if (!c) throw std::domain_error("restrict_to: subspace not invariant");
    for (std::size_t i = 0; i < s.dim(); ++i) out.at(i, k) = (*c)[i];
  }
  return out;
}

/// The ring of B-central elements of A (x)_B A: multiplication
/// (s)(t) = t1 s1 (x) s2 t2 on representatives, unit 1 (x) 1, the
/// multiplication-counit into the centralizer, the commuting embeddings
/// r -> 1 (x) r and r -> r (x) 1, and the centralizer bimodule actions.
template <class F>
struct CentralSquare {
  F field{};
  Subspace<F> sub;   // basis inside the tensor-square quotient coordinates
  Subspace<F> R;     // centralizer of B in A, coordinates in A
  Vec<F> unit;       // coordinates of 1 (x) 1 in the sub basis
  Matrix<F> counit;  // R.dim x dim: t -> t1 t2
  Matrix<F> src_map;  // R.dim -> dim: r -> 1 (x) r
  Matrix<F> tgt_map;  // R.dim -> dim: r -> r (x) 1
  std::vector<Matrix<F>> r_left;   // per R-basis: t -> (r (x) 1) t
  std::vector<Matrix<F>> r_right;  // per R-basis: t -> t (1 (x) r)
  // Kept for representative arithmetic.
  const APowers<F>* pows = nullptr;

  std::size_t dim() const { return sub.dim(); }

  static CentralSquare make(const APowers<F>& pows, const Subspace<F>& R) {
    const Extension<F>& E = *pows.E;
    const F& f = E.field();
    CentralSquare t;
    t.field = f;
    t.R = R;
    t.pows = &pows;
    auto P2 = pows.bimodule(2);
    std::vector<Matrix<F>> bl, br;
    for (std::size_t b = 0; b < E.dimB(); ++b) {
      bl.push_back(P2.left_op(E.b_vec(b)));
      br.push_back(P2.right_op(E.b_vec(b)));
    }
    t.sub = coincidence_subspace(f, bl, br);
    auto unit_class = pows.embed({E.A.unit, E.A.unit});
    auto uc = t.sub.coords(unit_class);
    if (!uc) throw StructureError("central square: 1 (x) 1 not central");
    t.unit = *uc;

    // counit: multiply representatives; lands in the centralizer.
    const Matrix<F>& m = pows.mult_at(2, 0);
    t.counit = Matrix<F>(f, R.dim(), t.dim());
    for (std::size_t k = 0; k < t.dim(); ++k) {
      Vec<F> a = mat_apply(m, t.sub.basis.row(k));
      auto rc = R.coords(a);
      if (!rc) throw StructureError("central square: counit leaves centralizer");
      for (std::size_t i = 0; i < R.dim(); ++i) t.counit.at(i, k) = (*rc)[i];
    }

    t.src_map = Matrix<F>(f, t.dim(), R.dim());
    t.tgt_map = Matrix<F>(f, t.dim(), R.dim());
    for (std::size_t r = 0; r < R.dim(); ++r) {
      auto s = t.sub.coords(pows.embed({E.A.unit, R.basis.row(r)}));
      auto g = t.sub.coords(pows.embed({R.basis.row(r), E.A.unit}));
      if (!s || !g)
        throw StructureError("central square: source/target not central");
      for (std::size_t i = 0; i < t.dim(); ++i) {
        t.src_map.at(i, r) = (*s)[i];
        t.tgt_map.at(i, r) = (*g)[i];
      }
    }
    for (std::size_t r = 0; r < R.dim(); ++r) {
      t.r_left.push_back(restrict_to(t.sub, P2.left_op(R.basis.row(r))));
      t.r_right.push_back(restrict_to(t.sub, P2.right_op(R.basis.row(r))));
    }
    return t;
  }

  /// Representative in the full A (x) A ambient space.
  Vec<F> representative(const Vec<F>& t) const {
    return pows->quotient(2).lift(sub.from_coords(t));
  }

  /// Ring product: on representatives s = s1 (x) s2 and t = t1 (x) t2 the
  /// product is t1 s1 (x) s2 t2.
  Vec<F> multiply(const Vec<F>& s, const Vec<F>& t) const {
    const Algebra<F>& A = pows->E->A;
    const F& f = field;
    std::size_t n = A.n;
    Vec<F> sa = representative(s), ta = representative(t);
    Vec<F> acc = vec_zero(f, n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto& sc = sa[a * n + b];
        if (f.is_zero(sc)) continue;
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < n; ++d) {
            const auto& tc = ta[c * n + d];
            if (f.is_zero(tc)) continue;
            auto coef = f.mul(sc, tc);
            const Vec<F>& first = A.basis_product(c, a);
            const Vec<F>& second = A.basis_product(b, d);
            for (std::size_t x = 0; x < n; ++x) {
              if (f.is_zero(first[x])) continue;
              for (std::size_t y = 0; y < n; ++y)
                if (!f.is_zero(second[y])) {
                  auto& cell = acc[x * n + y];
                  cell = f.add(cell, f.mul(coef, f.mul(first[x], second[y])));
                }
            }
          }
      }
    auto c = sub.coords(pows->quotient(2).project(acc));
    if (!c) throw StructureError("central square: product left the subspace");
    return *c;
  }

  /// Counit value as a vector in A.
  Vec<F> counit_in_A(const Vec<F>& t) const {
    return R.from_coords(mat_apply(counit, t));
  }
};

}  // namespace d2hopf
