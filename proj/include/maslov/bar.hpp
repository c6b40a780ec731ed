#pragma once
// Enlarged model of the canonical form.  On V (+) E carry the symmetric form
//   Gbar = [[0, Sigma], [Sigma^T, Phi_0]],
// whose radical is exactly the column space of dtilde = (-Phi_{-1}, partial).
// Quotienting by it gives a nondegenerate space; the class of the V summand
// is isotropic there and its subquotient recovers (T, G_T).

#include <stdexcept>
#include <vector>

#include "maslov/core.hpp"

namespace maslov {

template <class F>
struct BarSpace {
  using E = typename F::Elem;
  Mat<E> Gbar;         // on V (+) E
  Mat<E> dtilde;       // relations, columns indexed like partial's
  Subspace<F> radical;
  Quotient<F> Q;       // (V (+) E) / radical
  Mat<E> G;            // induced form, nondegenerate
  Subspace<F> IV;      // class of the V summand
  SubQuot<F> sub;      // IV^perp / IV
  Mat<E> iso;          // map onto T, basis images as columns
};

template <class F>
BarSpace<F> bar_space(const F& f, const Core<F>& c) {
  using E = typename F::Elem;
  BarSpace<F> b;
  const int a = 2 * c.m + c.edim;  // ambient dimension
  auto phi0 = phi_zero(f, c);
  auto phim1 = phi_minus_one(f, c);

  b.Gbar = Mat<E>(a, a);
  for (int r = 0; r < 2 * c.m; ++r)
    for (int s = 0; s < c.edim; ++s) {
      b.Gbar.at(r, 2 * c.m + s) = c.Sigma.at(r, s);
      b.Gbar.at(2 * c.m + s, r) = c.Sigma.at(r, s);
    }
  for (int r = 0; r < c.edim; ++r)
    for (int s = 0; s < c.edim; ++s) b.Gbar.at(2 * c.m + r, 2 * c.m + s) = phi0.at(r, s);

  b.dtilde = Mat<E>(a, c.D);
  for (int r = 0; r < 2 * c.m; ++r)
    for (int s = 0; s < c.D; ++s) b.dtilde.at(r, s) = f.neg(phim1.at(r, s));
  for (int r = 0; r < c.edim; ++r)
    for (int s = 0; s < c.D; ++s) b.dtilde.at(2 * c.m + r, s) = c.partial.at(r, s);

  b.radical = kernel_space(f, b.Gbar);
  b.Q = Quotient<F>::make(f, b.radical);
  b.G = mul(f, b.Q.lifts, mul(f, b.Gbar, transpose(b.Q.lifts)));

  Mat<E> iv(2 * c.m, b.Q.q);
  for (int r = 0; r < 2 * c.m; ++r) {
    std::vector<E> v(static_cast<std::size_t>(a), f.zero());
    v[static_cast<std::size_t>(r)] = f.one();
    auto cc = b.Q.cls(f, v);
    for (int j = 0; j < b.Q.q; ++j) iv.at(r, j) = cc[static_cast<std::size_t>(j)];
  }
  b.IV = Subspace<F>::from_rows(f, iv);
  b.sub = quadratic_subquotient(f, b.G, b.IV);

  b.iso = Mat<E>(c.tdim, b.sub.dim);
  for (int j = 0; j < b.sub.dim; ++j) {
    std::vector<E> sp(b.sub.quot.lifts.row_ptr(j), b.sub.quot.lifts.row_ptr(j) + b.sub.Iperp.dim());
    auto barc = apply(f, transpose(b.sub.Iperp.rows), sp);
    auto full = apply(f, transpose(b.Q.lifts), barc);
    std::vector<E> ev(full.begin() + 2 * c.m, full.end());
    if (!c.K.contains_vec(f, ev)) throw std::logic_error("bar_space: lift not in K");
    auto tc = class_T(f, c, c.K.coords(f, ev));
    for (int r = 0; r < c.tdim; ++r) b.iso.at(r, j) = tc[static_cast<std::size_t>(r)];
  }
  return b;
}

}  // namespace maslov
