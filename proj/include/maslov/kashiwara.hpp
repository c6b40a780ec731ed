#pragma once
// The classical index form of a Lagrangian triple, compared with the kernel
// model.  On A = l_0 (+) l_1 (+) l_2 take the symmetrisation of
// Q(x) = B(x_0,x_1) + B(x_1,x_2) + B(x_2,x_0).  The first block is isotropic
// and reducing by it recovers (K, q): an element of I^perp has
// w_1 - w_2 in l_0 (w_i the block vectors in V), and
//   mu(x) = (coords of w_1 - w_2 in l_0, -x_1, x_2)
// lies in K, killing exactly I.

#include <stdexcept>
#include <vector>

#include "maslov/core.hpp"

namespace maslov {

template <class F>
struct Kashiwara {
  using E = typename F::Elem;
  Mat<E> G;              // symmetrised triple form on F^{3m}
  Subspace<F> I;         // first block
  Subspace<F> Iperp_G;   // orthogonal complement through G
  Subspace<F> Iperp_in;  // same space through the incidence condition only
  SubQuot<F> sub;        // I^perp / I
  Mat<E> mubar;          // induced map I^perp / I -> K, basis images as columns
};

template <class F>
Kashiwara<F> kashiwara_compare(const F& f, const Core<F>& c) {
  using E = typename F::Elem;
  if (c.n != 3) throw std::invalid_argument("kashiwara_compare: needs a triple");
  Kashiwara<F> k;
  const int m = c.m;

  k.G = Mat<E>(3 * m, 3 * m);
  auto h = f.half();
  for (int i = 0; i < 3; ++i) {
    auto Pn = pair_block(f, c.t, c.J, i, (i + 1) % 3);  // next neighbour
    auto Pp = pair_block(f, c.t, c.J, i, (i + 2) % 3);  // previous neighbour
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s) {
        k.G.at(i * m + r, ((i + 1) % 3) * m + s) = f.mul(h, Pn.at(r, s));
        k.G.at(i * m + r, ((i + 2) % 3) * m + s) = f.neg(f.mul(h, Pp.at(r, s)));
      }
  }

  Mat<E> first(m, 3 * m);
  for (int r = 0; r < m; ++r) first.at(r, r) = f.one();
  k.I = Subspace<F>::from_rows(f, first);
  k.Iperp_G = kernel_space(f, mul(f, k.I.rows, k.G));

  // x in I^perp iff the pairing of l_0 against w_1 - w_2 vanishes
  Mat<E> V(2 * m, 3 * m);
  auto l1t = transpose(c.t.L[1].rows), l2t = transpose(c.t.L[2].rows);
  for (int r = 0; r < 2 * m; ++r)
    for (int s = 0; s < m; ++s) {
      V.at(r, m + s) = l1t.at(r, s);
      V.at(r, 2 * m + s) = f.neg(l2t.at(r, s));
    }
  k.Iperp_in = kernel_space(f, mul(f, c.t.L[0].rows, mul(f, c.J, V)));

  k.sub = quadratic_subquotient(f, k.G, k.I);

  k.mubar = Mat<E>(c.k, k.sub.dim);
  for (int b = 0; b < k.sub.dim; ++b) {
    std::vector<E> xp(k.sub.quot.lifts.row_ptr(b), k.sub.quot.lifts.row_ptr(b) + k.sub.Iperp.dim());
    auto x = apply(f, transpose(k.sub.Iperp.rows), xp);
    std::vector<E> x1(x.begin() + m, x.begin() + 2 * m);
    std::vector<E> x2(x.begin() + 2 * m, x.begin() + 3 * m);
    auto w1 = apply(f, l1t, x1);
    auto w2 = apply(f, l2t, x2);
    std::vector<E> d(static_cast<std::size_t>(2 * m));
    for (int r = 0; r < 2 * m; ++r)
      d[static_cast<std::size_t>(r)] = f.sub(w1[static_cast<std::size_t>(r)], w2[static_cast<std::size_t>(r)]);
    if (!c.t.L[0].contains_vec(f, d)) throw std::logic_error("kashiwara_compare: difference misses l_0");
    auto d0 = c.t.L[0].coords(f, d);
    std::vector<E> e(static_cast<std::size_t>(3 * m), f.zero());
    for (int r = 0; r < m; ++r) {
      e[static_cast<std::size_t>(r)] = d0[static_cast<std::size_t>(r)];
      e[static_cast<std::size_t>(m + r)] = f.neg(x1[static_cast<std::size_t>(r)]);
      e[static_cast<std::size_t>(2 * m + r)] = x2[static_cast<std::size_t>(r)];
    }
    if (!c.K.contains_vec(f, e)) throw std::logic_error("kashiwara_compare: image misses K");
    auto kc = c.K.coords(f, e);
    for (int j = 0; j < c.k; ++j) k.mubar.at(j, b) = kc[static_cast<std::size_t>(j)];
  }
  return k;
}

}  // namespace maslov
