#pragma once
// Splitting a cycle of Lagrangians along a chord.
//
// Fix an index k0 with 2 <= k0 <= n-2.  The cycle (l_0, ..., l_{n-1}) breaks
// into (l_0, ..., l_{k0}) and (l_0, l_{k0}, l_{k0+1}, ..., l_{n-1}).  Placing
// both kernels block-wise into the cycle's direct sum gives an isometry from
// T_1 (+) T_2 onto the subquotient I^perp / I of T, where I is the image of
// the relation space R spanned by (-w at slot 0, +w at slot k0) for
// w in l_0 ∩ l_{k0}.

#include <stdexcept>
#include <vector>

#include "maslov/core.hpp"

namespace maslov {

// columns place block b of a smaller direct sum at slot slots[b] of a larger one
template <class F>
Mat<typename F::Elem> block_placement(const F& f, int m, int n, const std::vector<int>& slots) {
  Mat<typename F::Elem> M(n * m, static_cast<int>(slots.size()) * m);
  for (std::size_t b = 0; b < slots.size(); ++b)
    for (int r = 0; r < m; ++r) M.at(slots[b] * m + r, static_cast<int>(b) * m + r) = f.one();
  return M;
}

template <class F>
struct ChainSplit {
  using E = typename F::Elem;
  int k0 = 0;
  Core<F> left, right;  // cores of the two sub-cycles
  Mat<E> emb1, emb2;    // block placements into the cycle's direct sum
  Mat<E> s1, s2;        // kernel embeddings, rows in the cycle's K coordinates
  Subspace<F> image;    // s1(K_1) + s2(K_2)
  Subspace<F> R;        // relation space in K coordinates
  Subspace<F> I;        // image of R in T
  SubQuot<F> sub;       // I^perp / I
  Mat<E> mu1, mu2;      // induced maps T_i -> I^perp / I, basis images as columns
};

template <class F>
ChainSplit<F> chain_split(const F& f, const Core<F>& c, int k0) {
  using E = typename F::Elem;
  if (k0 < 2 || k0 > c.n - 2) throw std::invalid_argument("chain_split: need 2 <= k0 <= n-2");
  ChainSplit<F> s;
  s.k0 = k0;

  LagTuple<F> t1, t2;
  t1.m = t2.m = c.m;
  for (int i = 0; i <= k0; ++i) t1.L.push_back(c.t.L[static_cast<std::size_t>(i)]);
  t2.L.push_back(c.t.L[0]);
  for (int i = k0; i < c.n; ++i) t2.L.push_back(c.t.L[static_cast<std::size_t>(i)]);
  t1.n = static_cast<int>(t1.L.size());
  t2.n = static_cast<int>(t2.L.size());
  s.left = compute_core(f, t1);
  s.right = compute_core(f, t2);

  std::vector<int> sl1, sl2;
  for (int i = 0; i <= k0; ++i) sl1.push_back(i);
  sl2.push_back(0);
  for (int i = k0; i < c.n; ++i) sl2.push_back(i);
  s.emb1 = block_placement(f, c.m, c.n, sl1);
  s.emb2 = block_placement(f, c.m, c.n, sl2);

  auto kernel_rows = [&](const Core<F>& part, const Mat<E>& emb) {
    Mat<E> M(part.k, c.k);
    for (int r = 0; r < part.k; ++r) {
      std::vector<E> v(part.K.rows.row_ptr(r), part.K.rows.row_ptr(r) + part.edim);
      auto e = apply(f, emb, v);
      if (!c.K.contains_vec(f, e)) throw std::logic_error("chain_split: embedding misses K");
      auto kc = c.K.coords(f, e);
      for (int j = 0; j < c.k; ++j) M.at(r, j) = kc[static_cast<std::size_t>(j)];
    }
    return M;
  };
  s.s1 = kernel_rows(s.left, s.emb1);
  s.s2 = kernel_rows(s.right, s.emb2);
  s.image = Subspace<F>::from_rows(f, vcat(s.s1, s.s2));

  auto capX = intersect(f, c.t.L[0], c.t.L[static_cast<std::size_t>(k0)]);
  Mat<E> rr(capX.dim(), c.k);
  Mat<E> rt(capX.dim(), c.tdim);
  for (int g = 0; g < capX.dim(); ++g) {
    std::vector<E> w(capX.rows.row_ptr(g), capX.rows.row_ptr(g) + 2 * c.m);
    std::vector<E> e(static_cast<std::size_t>(c.edim), f.zero());
    auto c0 = c.t.L[0].coords(f, w);
    auto ck = c.t.L[static_cast<std::size_t>(k0)].coords(f, w);
    for (int r = 0; r < c.m; ++r) {
      e[static_cast<std::size_t>(r)] = f.neg(c0[static_cast<std::size_t>(r)]);
      e[static_cast<std::size_t>(k0 * c.m + r)] = ck[static_cast<std::size_t>(r)];
    }
    if (!c.K.contains_vec(f, e)) throw std::logic_error("chain_split: relation misses K");
    auto kc = c.K.coords(f, e);
    for (int j = 0; j < c.k; ++j) rr.at(g, j) = kc[static_cast<std::size_t>(j)];
    auto tc = class_T(f, c, kc);
    for (int j = 0; j < c.tdim; ++j) rt.at(g, j) = tc[static_cast<std::size_t>(j)];
  }
  s.R = Subspace<F>::from_rows(f, rr);
  s.I = Subspace<F>::from_rows(f, rt);
  s.sub = quadratic_subquotient(f, c.G_T, s.I);

  auto induced = [&](const Core<F>& part, const Mat<E>& emb) {
    Mat<E> M(s.sub.dim, part.tdim);
    for (int b = 0; b < part.tdim; ++b) {
      std::vector<E> tb(static_cast<std::size_t>(part.tdim), f.zero());
      tb[static_cast<std::size_t>(b)] = f.one();
      auto e = apply(f, emb, embed_K_in_E(f, part, lift_from_T(f, part, tb)));
      auto tc = class_T(f, c, c.K.coords(f, e));
      if (!s.sub.Iperp.contains_vec(f, tc)) throw std::logic_error("chain_split: image not orthogonal to I");
      auto sc = s.sub.cls(f, tc);
      for (int j = 0; j < s.sub.dim; ++j) M.at(j, b) = sc[static_cast<std::size_t>(j)];
    }
    return M;
  };
  s.mu1 = induced(s.left, s.emb1);
  s.mu2 = induced(s.right, s.emb2);
  return s;
}

// W = I + M with M a standard-vector complement of I^perp.  The pairing
// between I and M is perfect, so G|_W is nondegenerate and I is an isotropic
// half of W; W^perp then maps isometrically onto I^perp / I.
template <class F>
struct HyperbolicWitness {
  using E = typename F::Elem;
  Subspace<F> M, W, Wperp;
  Mat<E> G_W, G_Wperp;
  Mat<E> nu;  // W^perp basis classes in I^perp / I coordinates, as columns
};

template <class F>
HyperbolicWitness<F> hyperbolic_witness(const F& f, const Mat<typename F::Elem>& G,
                                        const SubQuot<F>& sub) {
  using E = typename F::Elem;
  HyperbolicWitness<F> h;
  h.M = Subspace<F>::from_rows(f, sub.Iperp.complement_std(f));
  h.W = sum(f, sub.I, h.M);
  h.G_W = mul(f, h.W.rows, mul(f, G, transpose(h.W.rows)));
  h.Wperp = kernel_space(f, mul(f, h.W.rows, G));
  h.G_Wperp = mul(f, h.Wperp.rows, mul(f, G, transpose(h.Wperp.rows)));
  h.nu = Mat<E>(sub.dim, h.Wperp.dim());
  for (int b = 0; b < h.Wperp.dim(); ++b) {
    std::vector<E> v(h.Wperp.rows.row_ptr(b), h.Wperp.rows.row_ptr(b) + h.Wperp.ambient());
    if (!sub.Iperp.contains_vec(f, v)) throw std::logic_error("hyperbolic_witness: W^perp outside I^perp");
    auto sc = sub.cls(f, v);
    for (int j = 0; j < sub.dim; ++j) h.nu.at(j, b) = sc[static_cast<std::size_t>(j)];
  }
  return h;
}

}  // namespace maslov
