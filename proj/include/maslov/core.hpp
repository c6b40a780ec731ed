#pragma once
#include <stdexcept>
#include <vector>

#include "maslov/symplectic.hpp"

namespace maslov {

// The canonical quadratic space of a cyclic tuple (l_1, ..., l_n) of
// Lagrangians. E = ⊕ l_i in basis coordinates, K = ker(Σ: E → V),
// q(v, w) = Σ_{i>j} B(v_i, w_j) restricted to K, T = K / ker q.
// All indices here are 0-based and cyclic; block i of E carries l_i.
template <class F>
struct Core {
  using E = typename F::Elem;

  LagTuple<F> t;
  int m = 0, n = 0;
  Mat<E> J;
  std::vector<int> boff;  // block offsets in E (blocks all have dim m)
  int edim = 0;           // n*m

  Mat<E> Sigma;  // 2m x nm, block i is l_i's basis transposed
  Subspace<F> K; // ⊆ F^{nm}
  Mat<E> QE;     // strict lower block pairing, q on E
  Mat<E> G_K;    // gram of q in K's basis, k x k symmetric

  std::vector<Subspace<F>> cap;  // cap[i] = l_i ∩ l_{i+1 mod n}
  std::vector<int> capoff;
  int D = 0;       // Σ dim cap[i]
  Mat<E> partial;  // nm x D: cap[i] generator u goes to +u at block i, -u at block i+1
  Subspace<F> cap_all;  // ⋂ l_i

  Subspace<F> radical;  // kernel of G_K, in K coordinates ⊆ F^k
  Quotient<F> Tq;       // F^k modulo the radical
  Mat<E> G_T;           // gram of T, nondegenerate
  int k = 0, tdim = 0;
};

template <class F>
Mat<typename F::Elem> pair_block(const F& f, const LagTuple<F>& t, const Mat<typename F::Elem>& J,
                                 int i, int j) {
  // (L_i J L_j^T)[r][c] = B(i-th basis row r, j-th basis row c)
  return mul(f, t.L[static_cast<std::size_t>(i)].rows,
             mul(f, J, transpose(t.L[static_cast<std::size_t>(j)].rows)));
}

template <class F>
Core<F> compute_core(const F& f, const LagTuple<F>& t) {
  Core<F> c;
  c.t = t;
  c.m = t.m;
  c.n = t.n;
  if (c.n < 2) throw std::invalid_argument("need at least two Lagrangians");
  c.J = symplectic_J(f, c.m);
  c.edim = c.n * c.m;
  c.boff.resize(static_cast<std::size_t>(c.n));
  for (int i = 0; i < c.n; ++i) c.boff[static_cast<std::size_t>(i)] = i * c.m;

  c.Sigma = Mat<typename F::Elem>(2 * c.m, c.edim);
  for (int i = 0; i < c.n; ++i) {
    const auto& Li = t.L[static_cast<std::size_t>(i)].rows;
    for (int r = 0; r < c.m; ++r)
      for (int v = 0; v < 2 * c.m; ++v) c.Sigma.at(v, c.boff[static_cast<std::size_t>(i)] + r) = Li.at(r, v);
  }
  c.K = kernel_space(f, c.Sigma);
  c.k = c.K.dim();

  c.QE = Mat<typename F::Elem>(c.edim, c.edim);
  for (int i = 0; i < c.n; ++i) {
    for (int j = 0; j < i; ++j) {
      auto Gij = pair_block(f, t, c.J, i, j);
      for (int r = 0; r < c.m; ++r)
        for (int s = 0; s < c.m; ++s)
          c.QE.at(c.boff[static_cast<std::size_t>(i)] + r, c.boff[static_cast<std::size_t>(j)] + s) = Gij.at(r, s);
    }
  }
  c.G_K = mul(f, c.K.rows, mul(f, c.QE, transpose(c.K.rows)));

  c.D = 0;
  for (int i = 0; i < c.n; ++i) {
    int j = (i + 1) % c.n;
    c.cap.push_back(intersect(f, t.L[static_cast<std::size_t>(i)], t.L[static_cast<std::size_t>(j)]));
    c.capoff.push_back(c.D);
    c.D += c.cap.back().dim();
  }
  c.partial = Mat<typename F::Elem>(c.edim, c.D);
  for (int i = 0; i < c.n; ++i) {
    int j = (i + 1) % c.n;
    const auto& W = c.cap[static_cast<std::size_t>(i)];
    for (int g = 0; g < W.dim(); ++g) {
      std::vector<typename F::Elem> w(W.rows.row_ptr(g), W.rows.row_ptr(g) + 2 * c.m);
      auto ci = t.L[static_cast<std::size_t>(i)].coords(f, w);
      auto cj = t.L[static_cast<std::size_t>(j)].coords(f, w);
      int col = c.capoff[static_cast<std::size_t>(i)] + g;
      for (int r = 0; r < c.m; ++r) {
        c.partial.at(c.boff[static_cast<std::size_t>(i)] + r, col) =
            f.add(c.partial.at(c.boff[static_cast<std::size_t>(i)] + r, col), ci[static_cast<std::size_t>(r)]);
        c.partial.at(c.boff[static_cast<std::size_t>(j)] + r, col) =
            f.sub(c.partial.at(c.boff[static_cast<std::size_t>(j)] + r, col), cj[static_cast<std::size_t>(r)]);
      }
    }
  }

  c.cap_all = t.L[0];
  for (int i = 1; i < c.n; ++i) c.cap_all = intersect(f, c.cap_all, t.L[static_cast<std::size_t>(i)]);

  c.radical = kernel_space(f, c.G_K);
  c.Tq = Quotient<F>::make(f, c.radical);
  c.G_T = mul(f, c.Tq.lifts, mul(f, c.G_K, transpose(c.Tq.lifts)));
  c.tdim = c.Tq.q;
  return c;
}

// expected dim T: (n-2)m - Σ dim(l_i ∩ l_{i+1}) + 2 dim(⋂ l_i)
template <class F>
int expected_tdim(const Core<F>& c) {
  return (c.n - 2) * c.m - c.D + 2 * c.cap_all.dim();
}

template <class F>
Subspace<F> image_partial_in_E(const F& f, const Core<F>& c) {
  return column_space(f, c.partial);
}

template <class F>
Subspace<F> radical_in_E(const F& f, const Core<F>& c) {
  return Subspace<F>::from_rows(f, mul(f, c.radical.rows, c.K.rows));
}

// per-block vectors in V of an element of E given by coordinates
template <class F>
std::vector<std::vector<typename F::Elem>> block_vectors(const F& f, const Core<F>& c,
                                                         const std::vector<typename F::Elem>& x) {
  std::vector<std::vector<typename F::Elem>> out;
  for (int i = 0; i < c.n; ++i) {
    std::vector<typename F::Elem> v(static_cast<std::size_t>(2 * c.m), f.zero());
    const auto& Li = c.t.L[static_cast<std::size_t>(i)].rows;
    for (int r = 0; r < c.m; ++r) {
      const auto& xc = x[static_cast<std::size_t>(c.boff[static_cast<std::size_t>(i)] + r)];
      if (f.is_zero(xc)) continue;
      for (int v2 = 0; v2 < 2 * c.m; ++v2)
        v[static_cast<std::size_t>(v2)] = f.add(v[static_cast<std::size_t>(v2)], f.mul(xc, Li.at(r, v2)));
    }
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
typename F::Elem q_form(const F& f, const Core<F>& c, const std::vector<typename F::Elem>& x,
                        const std::vector<typename F::Elem>& y) {
  return bilinear(f, c.QE, x, y);
}

// independent route: q(v, w) = Σ_i B(v_i, w~_i) with w~_i = w_1 + ... + w_i
template <class F>
typename F::Elem q_antiderivative(const F& f, const Core<F>& c,
                                  const std::vector<typename F::Elem>& x,
                                  const std::vector<typename F::Elem>& y) {
  auto vs = block_vectors(f, c, x);
  auto ws = block_vectors(f, c, y);
  std::vector<typename F::Elem> acc(static_cast<std::size_t>(2 * c.m), f.zero());
  auto total = f.zero();
  for (int i = 0; i < c.n; ++i) {
    for (int v = 0; v < 2 * c.m; ++v)
      acc[static_cast<std::size_t>(v)] = f.add(acc[static_cast<std::size_t>(v)], ws[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)]);
    total = f.add(total, sym_B(f, c.J, vs[static_cast<std::size_t>(i)], acc));
  }
  return total;
}

template <class F>
std::vector<typename F::Elem> class_T(const F& f, const Core<F>& c, const std::vector<typename F::Elem>& kcoords) {
  return c.Tq.cls(f, kcoords);
}

// K coordinates of a fixed representative of a T class
template <class F>
std::vector<typename F::Elem> lift_from_T(const F& f, const Core<F>& c, const std::vector<typename F::Elem>& tcoords) {
  return apply(f, transpose(c.Tq.lifts), tcoords);
}

template <class F>
std::vector<typename F::Elem> embed_K_in_E(const F& f, const Core<F>& c, const std::vector<typename F::Elem>& kcoords) {
  return apply(f, transpose(c.K.rows), kcoords);
}

// ---- explicit duality maps -------------------------------------------------

// symmetric middle map on E: block (i, j) is  (1/2) G_ij for i > j,
// -(1/2) G_ij for i < j, zero on the diagonal
template <class F>
Mat<typename F::Elem> phi_zero(const F& f, const Core<F>& c) {
  Mat<typename F::Elem> M(c.edim, c.edim);
  auto h = f.half();
  for (int i = 0; i < c.n; ++i) {
    for (int j = 0; j < c.n; ++j) {
      if (i == j) continue;
      auto Gij = pair_block(f, c.t, c.J, i, j);
      auto s = (i > j) ? h : f.neg(h);
      for (int r = 0; r < c.m; ++r)
        for (int v = 0; v < c.m; ++v)
          M.at(c.boff[static_cast<std::size_t>(i)] + r, c.boff[static_cast<std::size_t>(j)] + v) = f.mul(s, Gij.at(r, v));
    }
  }
  return M;
}

// left duality map into V*: only the wrap-around block l_{n-1} ∩ l_0 enters,
// as u -> B(u, -). Functionals on F^N are stored as plain vectors paired by dot.
template <class F>
Mat<typename F::Elem> phi_minus_one(const F& f, const Core<F>& c) {
  Mat<typename F::Elem> M(2 * c.m, c.D);
  const auto& W = c.cap[static_cast<std::size_t>(c.n - 1)];
  // column for generator w: -(J w^T)
  auto JWt = mul(f, c.J, transpose(W.rows));
  for (int g = 0; g < W.dim(); ++g)
    for (int v = 0; v < 2 * c.m; ++v)
      M.at(v, c.capoff[static_cast<std::size_t>(c.n - 1)] + g) = f.neg(JWt.at(v, g));
  return M;
}

// ---- quadratic subquotient -------------------------------------------------

// Given a symmetric gram G on F^t and an isotropic subspace I, build
// I^⊥ / I with its induced form. When G is nondegenerate the radical of the
// restriction to I^⊥ is exactly I.
template <class F>
struct SubQuot {
  using E = typename F::Elem;
  Subspace<F> I;
  Subspace<F> Iperp;   // ⊆ F^t
  Mat<E> G_perp;       // gram in Iperp's basis
  Subspace<F> I_c;     // I in Iperp coordinates
  Quotient<F> quot;    // F^{dim Iperp} modulo I_c
  Mat<E> G;            // induced gram on I^⊥ / I
  int dim = 0;

  // class coordinates of x ∈ F^t lying in Iperp
  std::vector<E> cls(const F& f, const std::vector<E>& x) const {
    return quot.cls(f, Iperp.coords(f, x));
  }
};

template <class F>
SubQuot<F> quadratic_subquotient(const F& f, const Mat<typename F::Elem>& G, const Subspace<F>& I) {
  SubQuot<F> s;
  s.I = I;
  s.Iperp = kernel_space(f, mul(f, I.rows, G));
  s.G_perp = mul(f, s.Iperp.rows, mul(f, G, transpose(s.Iperp.rows)));
  Mat<typename F::Elem> ic(I.dim(), s.Iperp.dim());
  for (int i = 0; i < I.dim(); ++i) {
    std::vector<typename F::Elem> v(I.rows.row_ptr(i), I.rows.row_ptr(i) + I.ambient());
    if (!s.Iperp.contains_vec(f, v)) throw std::domain_error("subquotient: I not inside I^perp");
    auto cc = s.Iperp.coords(f, v);
    for (int j = 0; j < s.Iperp.dim(); ++j) ic.at(i, j) = cc[static_cast<std::size_t>(j)];
  }
  s.I_c = Subspace<F>::from_rows(f, ic);
  s.quot = Quotient<F>::make(f, s.I_c);
  s.G = mul(f, s.quot.lifts, mul(f, s.G_perp, transpose(s.quot.lifts)));
  s.dim = s.quot.q;
  return s;
}

}  // namespace maslov
