#pragma once
// Cone factorisation of a symmetric complex.  A datum consists of matrices
//   d : C^{-1} -> C^0,  sigma : C^0 -> C^1,  sigma d = 0,
//   phi0 : C^0 -> (C^0)* symmetric,  phim1 : C^{-1} -> (C^1)*,
// obeying sigma^T phim1 = phi0 d.  The cone places
//   f_{-1} = (d; -phim1) : C^{-1} -> C^0 (+) (C^1)*,
//   f_0 = [[phi0, sigma^T], [sigma, 0]]  (symmetric, f_0 f_{-1} = 0),
// and D^0 = (C^0 (+) (C^1)*) / im f_{-1} carries the induced form F0 with
// structure maps b, c, e.  H^0 = ker e / im c recovers the canonical form.

#include <stdexcept>
#include <vector>

#include "maslov/core.hpp"

namespace maslov {

template <class F>
struct ConeDatum {
  using E = typename F::Elem;
  Mat<E> d, sigma, phi0, phim1;
  int dm1() const { return d.cols; }     // dim C^{-1}
  int d0() const { return d.rows; }      // dim C^0
  int d1() const { return sigma.rows; }  // dim C^1
};

template <class F>
ConeDatum<F> core_datum(const F& f, const Core<F>& c) {
  return ConeDatum<F>{c.partial, c.Sigma, phi_zero(f, c), phi_minus_one(f, c)};
}

template <class F>
struct Cone {
  using E = typename F::Elem;
  Mat<E> fm1, f0;
  Quotient<F> Q;       // D^0 as quotient of C^0 (+) (C^1)*
  Mat<E> b, c, e, F0;  // b : C^0 -> D^0, c : (C^1)* -> D^0, e : D^0 -> C^1
  SubQuot<F> H0;       // ker e / im c, with its induced form
};

template <class F>
Cone<F> make_cone(const F& f, const ConeDatum<F>& dat) {
  using E = typename F::Elem;
  const int n0 = dat.d0(), n1 = dat.d1(), nm = dat.dm1();
  Cone<F> co;

  co.fm1 = Mat<E>(n0 + n1, nm);
  for (int r = 0; r < n0; ++r)
    for (int s = 0; s < nm; ++s) co.fm1.at(r, s) = dat.d.at(r, s);
  for (int r = 0; r < n1; ++r)
    for (int s = 0; s < nm; ++s) co.fm1.at(n0 + r, s) = f.neg(dat.phim1.at(r, s));

  co.f0 = Mat<E>(n0 + n1, n0 + n1);
  for (int r = 0; r < n0; ++r)
    for (int s = 0; s < n0; ++s) co.f0.at(r, s) = dat.phi0.at(r, s);
  for (int r = 0; r < n1; ++r)
    for (int s = 0; s < n0; ++s) {
      co.f0.at(n0 + r, s) = dat.sigma.at(r, s);
      co.f0.at(s, n0 + r) = dat.sigma.at(r, s);
    }
  if (!is_zero_mat(f, mul(f, co.f0, co.fm1))) throw std::logic_error("make_cone: f_0 f_{-1} != 0");

  co.Q = Quotient<F>::make(f, column_space(f, co.fm1));
  co.b = submat(co.Q.proj, 0, 0, co.Q.q, n0);
  co.c = submat(co.Q.proj, 0, n0, co.Q.q, n1);
  auto U = transpose(submat(co.Q.lifts, 0, 0, co.Q.q, n0));
  co.e = mul(f, dat.sigma, U);
  co.F0 = mul(f, co.Q.lifts, mul(f, co.f0, transpose(co.Q.lifts)));

  co.H0 = quadratic_subquotient(f, co.F0, column_space(f, co.c));
  return co;
}

// the canonical form compared with H^0 of the cone of its own datum
template <class F>
Mat<typename F::Elem> cone_class_of_T(const F& f, const Core<F>& c, const Cone<F>& co) {
  using E = typename F::Elem;
  Mat<E> Phi(co.H0.dim, c.tdim);
  for (int j = 0; j < c.tdim; ++j) {
    std::vector<E> tb(static_cast<std::size_t>(c.tdim), f.zero());
    tb[static_cast<std::size_t>(j)] = f.one();
    auto a = embed_K_in_E(f, c, lift_from_T(f, c, tb));
    auto cls0 = apply(f, co.b, a);
    if (!co.H0.Iperp.contains_vec(f, cls0)) throw std::logic_error("cone_class_of_T: image not in ker e");
    auto h = co.H0.cls(f, cls0);
    for (int r = 0; r < co.H0.dim; ++r) Phi.at(r, j) = h[static_cast<std::size_t>(r)];
  }
  return Phi;
}

}  // namespace maslov
