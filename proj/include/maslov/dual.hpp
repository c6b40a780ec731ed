#pragma once
// Dual description on classes mod the Lagrangians.  E_s collects tuples
// x in (+) V/l_i whose consecutive differences of fixed representatives lie
// in l_i + l_{i+1}.  The functional eps_{i,j}(x,y) on l_i + l_j evaluates as
// B(a, xhat) + B(b, yhat) after splitting the argument as a + b; the cyclic
// sum of its values at yhat_{i+1} - yhat_i is a symmetric pairing q* on E_s
// and factors through T as Lambda^T G_T^{-1} Lambda.

#include <stdexcept>
#include <vector>

#include "maslov/core.hpp"

namespace maslov {

// fixed representatives of V/l: standard vectors at the non-pivot columns
template <class F>
Mat<typename F::Elem> mod_rep(const F& f, const Subspace<F>& L) {
  return transpose(L.complement_std(f));
}

// coordinates of v in those representatives; exact: v - rep * coords lies in l
template <class F>
std::vector<typename F::Elem> mod_coords(const F& f, const Subspace<F>& L,
                                         const std::vector<typename F::Elem>& v) {
  auto w = v;
  for (int r = 0; r < L.dim(); ++r) {
    auto c = w[static_cast<std::size_t>(L.pivots[static_cast<std::size_t>(r)])];
    if (!f.is_zero(c))
      for (int s = 0; s < L.ambient(); ++s)
        w[static_cast<std::size_t>(s)] = f.sub(w[static_cast<std::size_t>(s)], f.mul(c, L.rows.at(r, s)));
  }
  std::vector<typename F::Elem> out;
  std::vector<bool> piv(static_cast<std::size_t>(L.ambient()), false);
  for (int p : L.pivots) piv[static_cast<std::size_t>(p)] = true;
  for (int s = 0; s < L.ambient(); ++s)
    if (!piv[static_cast<std::size_t>(s)]) out.push_back(w[static_cast<std::size_t>(s)]);
  return out;
}

// <eps_{i,j}(x, y), v> for v = a + b in l_i + l_j, classes given by lifts
template <class F>
typename F::Elem eps_value(const F& f, const Mat<typename F::Elem>& J, const Subspace<F>& Li,
                           const Subspace<F>& Lj, const std::vector<typename F::Elem>& xhat,
                           const std::vector<typename F::Elem>& yhat,
                           const std::vector<typename F::Elem>& v) {
  auto M = hcat(transpose(Li.rows), transpose(Lj.rows));
  std::vector<typename F::Elem> w;
  if (!solve(f, M, v, w)) throw std::domain_error("eps_value: argument outside l_i + l_j");
  std::vector<typename F::Elem> ci(w.begin(), w.begin() + Li.dim());
  std::vector<typename F::Elem> cj(w.begin() + Li.dim(), w.end());
  auto a = apply(f, transpose(Li.rows), ci);
  auto b = apply(f, transpose(Lj.rows), cj);
  return f.add(sym_B(f, J, a, xhat), sym_B(f, J, b, yhat));
}

template <class F>
struct DualSpace {
  using E = typename F::Elem;
  std::vector<Mat<E>> rep;  // rep[i] : V/l_i -> V, one fixed lift per class
  std::vector<int> d;       // d[i] = m - dim(l_i cap l_{i+1})
  Subspace<F> Es;           // ⊆ F^{nm}
  Mat<E> gram;              // q* on the basis of Es
  Mat<E> Lambda;            // tdim x dim Es
};

template <class F>
std::vector<typename F::Elem> dual_rep_blocks(const F& f, const Core<F>& c,
                                              const std::vector<Mat<typename F::Elem>>& rep,
                                              const std::vector<typename F::Elem>& x, int i) {
  std::vector<typename F::Elem> xi(x.begin() + c.boff[static_cast<std::size_t>(i)],
                                   x.begin() + c.boff[static_cast<std::size_t>(i)] + c.m);
  return apply(f, rep[static_cast<std::size_t>(i)], xi);
}

// the cyclic pairing with fixed representatives
template <class F>
typename F::Elem dual_pairing(const F& f, const Core<F>& c, const DualSpace<F>& ds,
                              const std::vector<typename F::Elem>& x,
                              const std::vector<typename F::Elem>& y) {
  auto acc = f.zero();
  for (int i = 0; i < c.n; ++i) {
    int j = (i + 1) % c.n;
    auto xi = dual_rep_blocks(f, c, ds.rep, x, i);
    auto xj = dual_rep_blocks(f, c, ds.rep, x, j);
    auto yi = dual_rep_blocks(f, c, ds.rep, y, i);
    auto yj = dual_rep_blocks(f, c, ds.rep, y, j);
    std::vector<typename F::Elem> v(static_cast<std::size_t>(2 * c.m));
    for (int r = 0; r < 2 * c.m; ++r)
      v[static_cast<std::size_t>(r)] = f.sub(yj[static_cast<std::size_t>(r)], yi[static_cast<std::size_t>(r)]);
    acc = f.add(acc, eps_value(f, c.J, c.t.L[static_cast<std::size_t>(i)],
                               c.t.L[static_cast<std::size_t>(j)], xi, xj, v));
  }
  return acc;
}

template <class F>
DualSpace<F> dual_space(const F& f, const Core<F>& c) {
  using E = typename F::Elem;
  DualSpace<F> ds;
  for (int i = 0; i < c.n; ++i) {
    ds.rep.push_back(mod_rep(f, c.t.L[static_cast<std::size_t>(i)]));
    ds.d.push_back(c.m - c.cap[static_cast<std::size_t>(i)].dim());
  }

  Mat<E> M(0, c.n * c.m);
  for (int i = 0; i < c.n; ++i) {
    int j = (i + 1) % c.n;
    auto S = sum(f, c.t.L[static_cast<std::size_t>(i)], c.t.L[static_cast<std::size_t>(j)]);
    auto A = annihilator(f, S);  // rows kill l_i + l_j
    Mat<E> row(A.rows, c.n * c.m);
    auto Ai = mul(f, A, ds.rep[static_cast<std::size_t>(i)]);
    auto Aj = mul(f, A, ds.rep[static_cast<std::size_t>(j)]);
    for (int r = 0; r < A.rows; ++r)
      for (int s = 0; s < c.m; ++s) {
        row.at(r, c.boff[static_cast<std::size_t>(i)] + s) = f.neg(Ai.at(r, s));
        row.at(r, c.boff[static_cast<std::size_t>(j)] + s) =
            f.add(row.at(r, c.boff[static_cast<std::size_t>(j)] + s), Aj.at(r, s));
      }
    M = vcat(M, row);
  }
  ds.Es = kernel_space(f, M);

  const int ed = ds.Es.dim();
  ds.gram = Mat<E>(ed, ed);
  for (int i = 0; i < ed; ++i) {
    std::vector<E> xi(ds.Es.rows.row_ptr(i), ds.Es.rows.row_ptr(i) + c.n * c.m);
    for (int j = 0; j < ed; ++j) {
      std::vector<E> xj(ds.Es.rows.row_ptr(j), ds.Es.rows.row_ptr(j) + c.n * c.m);
      ds.gram.at(i, j) = dual_pairing(f, c, ds, xi, xj);
    }
  }

  ds.Lambda = Mat<E>(c.tdim, ed);
  for (int a = 0; a < c.tdim; ++a) {
    std::vector<E> tb(static_cast<std::size_t>(c.tdim), f.zero());
    tb[static_cast<std::size_t>(a)] = f.one();
    auto lift = embed_K_in_E(f, c, lift_from_T(f, c, tb));
    auto tv = block_vectors(f, c, lift);
    for (int j = 0; j < ed; ++j) {
      std::vector<E> xj(ds.Es.rows.row_ptr(j), ds.Es.rows.row_ptr(j) + c.n * c.m);
      auto acc = f.zero();
      for (int i = 0; i < c.n; ++i)
        acc = f.add(acc, sym_B(f, c.J, tv[static_cast<std::size_t>(i)],
                               dual_rep_blocks(f, c, ds.rep, xj, i)));
      ds.Lambda.at(a, j) = acc;
    }
  }
  return ds;
}

// the diagonal class of an ambient vector
template <class F>
std::vector<typename F::Elem> diagonal_class(const F& f, const Core<F>& c, const DualSpace<F>&,
                                             const std::vector<typename F::Elem>& v) {
  std::vector<typename F::Elem> x;
  for (int i = 0; i < c.n; ++i) {
    auto xi = mod_coords(f, c.t.L[static_cast<std::size_t>(i)], v);
    x.insert(x.end(), xi.begin(), xi.end());
  }
  return x;
}

}  // namespace maslov
