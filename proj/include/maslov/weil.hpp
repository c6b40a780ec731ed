#pragma once
// Heisenberg modules and intertwiners over a prime field.  The module of a
// Lagrangian l consists of functions with phi(x + a) = phi(x) psi(B(x,a)/2)
// for a in l; a basis is indexed by the fixed transversal of standard vectors
// at the non-pivot columns.  The operators
//   (rho(v,t) phi)(x) = psi(t) psi(B(v,x)/2) phi(x - v)
// give the Heisenberg action, and
//   (F phi)(y) = p^{-d/2} sum_x phi(x) psi(<eps_{i,j}(x,y), x-y>/2)
// over x with x - y in l_i + l_j intertwines the actions on the two modules.
// Around a cycle the composite is scalar, and the scalar is the conjugated
// quadratic Gauss constant of the canonical form.

#include <complex>
#include <stdexcept>
#include <vector>

#include "maslov/cmat.hpp"
#include "maslov/core.hpp"
#include "maslov/dual.hpp"
#include "maslov/fp.hpp"
#include "maslov/psi.hpp"
#include "maslov/witt.hpp"

namespace maslov {

inline constexpr int kModelCap = 125;  // largest allowed module dimension p^m

struct LagrangianModel {
  Subspace<FpField> L;
  Mat<std::uint16_t> rep;  // transversal inclusion V/l -> V
  int m = 0, dim = 0;
  std::vector<std::vector<std::uint16_t>> pts;  // transversal points, odometer order
};

inline LagrangianModel make_model(const FpField& f, const Subspace<FpField>& L) {
  LagrangianModel md;
  md.L = L;
  md.rep = mod_rep(f, L);
  md.m = L.dim();
  long long d = 1;
  for (int i = 0; i < md.m; ++i) {
    d *= f.p;
    if (d > kModelCap) throw std::invalid_argument("make_model: module dimension above cap");
  }
  md.dim = static_cast<int>(d);
  std::vector<std::uint16_t> c(static_cast<std::size_t>(md.m), 0);
  for (int idx = 0; idx < md.dim; ++idx) {
    md.pts.push_back(apply(f, md.rep, c));
    for (int i = md.m - 1; i >= 0; --i) {  // last coordinate fastest
      c[static_cast<std::size_t>(i)] = f.add(c[static_cast<std::size_t>(i)], 1);
      if (c[static_cast<std::size_t>(i)] != 0) break;
    }
  }
  return md;
}

// v = pts[index] + a with a in l
inline std::pair<int, std::vector<std::uint16_t>> model_index(const FpField& f,
                                                              const LagrangianModel& md,
                                                              const std::vector<std::uint16_t>& v) {
  auto c = mod_coords(f, md.L, v);
  int idx = 0;
  for (int i = 0; i < md.m; ++i) idx = idx * static_cast<int>(f.p) + c[static_cast<std::size_t>(i)];
  std::vector<std::uint16_t> a(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    a[r] = f.sub(v[r], md.pts[static_cast<std::size_t>(idx)][r]);
  return {idx, a};
}

inline CMat rho_matrix(const FpField& f, const Psi& psi, const Mat<std::uint16_t>& J,
                       const LagrangianModel& md, const std::vector<std::uint16_t>& v,
                       std::uint16_t t) {
  CMat M(md.dim, md.dim);
  auto h = f.half();
  for (int y = 0; y < md.dim; ++y) {
    std::vector<std::uint16_t> w(v.size());
    for (std::size_t r = 0; r < v.size(); ++r)
      w[r] = f.add(v[r], md.pts[static_cast<std::size_t>(y)][r]);
    auto [j, a] = model_index(f, md, w);
    const auto& xj = md.pts[static_cast<std::size_t>(j)];
    // phi_y(x_j - v) = psi(-B(y, a)/2) since x_j - v - y = -a
    auto ph = f.add(f.mul(h, sym_B(f, J, v, xj)),
                    f.neg(f.mul(h, sym_B(f, J, md.pts[static_cast<std::size_t>(y)], a))));
    M.at(j, y) = psi(t) * psi(ph);
  }
  return M;
}

// single kernel entry of the intertwiner from the model of Li to that of Lj
inline std::complex<double> kernel_value(const FpField& f, const Psi& psi,
                                         const Mat<std::uint16_t>& J, const LagrangianModel& mi,
                                         const LagrangianModel& mj,
                                         const std::vector<std::uint16_t>& x,
                                         const std::vector<std::uint16_t>& y) {
  auto S = sum(f, mi.L, mj.L);
  int d = mi.m - intersect(f, mi.L, mj.L).dim();
  std::vector<std::uint16_t> v(x.size());
  for (std::size_t r = 0; r < x.size(); ++r) v[r] = f.sub(x[r], y[r]);
  if (!S.contains_vec(f, v)) return 0.0;
  auto e = eps_value(f, J, mi.L, mj.L, x, y, v);
  return std::pow(static_cast<double>(f.p), -0.5 * d) * psi(f.mul(f.half(), e));
}

inline CMat intertwiner(const FpField& f, const Psi& psi, const Mat<std::uint16_t>& J,
                        const LagrangianModel& mi, const LagrangianModel& mj) {
  CMat M(mj.dim, mi.dim);
  for (int y = 0; y < mj.dim; ++y)
    for (int x = 0; x < mi.dim; ++x)
      M.at(y, x) = kernel_value(f, psi, J, mi, mj, mi.pts[static_cast<std::size_t>(x)],
                                mj.pts[static_cast<std::size_t>(y)]);
  return M;
}

struct CycleOperator {
  std::vector<LagrangianModel> models;
  CMat M;  // composite endomorphism of the last model
  std::complex<double> scalar = 0.0;
  double residual = 0.0;
};

inline CycleOperator cycle_operator(const FpField& f, const Psi& psi, const Core<FpField>& c) {
  CycleOperator co;
  for (int i = 0; i < c.n; ++i) co.models.push_back(make_model(f, c.t.L[static_cast<std::size_t>(i)]));
  co.M = intertwiner(f, psi, c.J, co.models[static_cast<std::size_t>(c.n - 1)], co.models[0]);
  for (int i = 1; i < c.n; ++i)
    co.M = cmul(intertwiner(f, psi, c.J, co.models[static_cast<std::size_t>(i - 1)],
                            co.models[static_cast<std::size_t>(i)]),
                co.M);
  co.scalar = ctrace(co.M) / static_cast<double>(co.M.rows);
  co.residual = scalar_residual(co.M, co.scalar);
  return co;
}

// the scalar predicted by the canonical form
inline std::complex<double> predicted_scalar(const FpField& f, const Psi& psi,
                                             const Core<FpField>& c) {
  return std::conj(gamma_of_witt(f, psi, witt_class(f, c.G_T)));
}

// product of the cycle's kernels at a tuple of transversal coordinates
inline std::complex<double> jay_value(const FpField& f, const Psi& psi, const Core<FpField>& c,
                                      const std::vector<LagrangianModel>& models,
                                      const std::vector<std::uint16_t>& x) {
  std::complex<double> acc = 1.0;
  for (int i = 0; i < c.n; ++i) {
    int j = (i + 1) % c.n;
    std::vector<std::uint16_t> ci(x.begin() + c.boff[static_cast<std::size_t>(i)],
                                  x.begin() + c.boff[static_cast<std::size_t>(i)] + c.m);
    std::vector<std::uint16_t> cj(x.begin() + c.boff[static_cast<std::size_t>(j)],
                                  x.begin() + c.boff[static_cast<std::size_t>(j)] + c.m);
    acc *= kernel_value(f, psi, c.J, models[static_cast<std::size_t>(i)],
                        models[static_cast<std::size_t>(j)],
                        apply(f, models[static_cast<std::size_t>(i)].rep, ci),
                        apply(f, models[static_cast<std::size_t>(j)].rep, cj));
    if (acc == std::complex<double>(0.0)) return acc;
  }
  return acc;
}

// sum of psi(q(v,v)/2) over the kernel
inline std::complex<double> trace_sigma_kernel(const FpField& f, const Psi& psi,
                                               const Core<FpField>& c) {
  long long total = 1;
  for (int i = 0; i < c.k; ++i) {
    total *= f.p;
    if (total > 200000) throw std::invalid_argument("trace_sigma_kernel: kernel too large");
  }
  std::complex<double> acc = 0.0;
  std::vector<std::uint16_t> cc(static_cast<std::size_t>(c.k), 0);
  auto h = f.half();
  for (long long it = 0; it < total; ++it) {
    std::vector<std::uint16_t> v(static_cast<std::size_t>(c.edim), 0);
    for (int r = 0; r < c.k; ++r) {
      auto s = cc[static_cast<std::size_t>(r)];
      f.row_axpy(v.data(), c.K.rows.row_ptr(r), s, static_cast<std::size_t>(c.edim));
    }
    acc += psi(f.mul(h, q_form(f, c, v, v)));
    for (int r = c.k - 1; r >= 0; --r) {
      cc[static_cast<std::size_t>(r)] = f.add(cc[static_cast<std::size_t>(r)], 1);
      if (cc[static_cast<std::size_t>(r)] != 0) break;
    }
  }
  return acc;
}

}  // namespace maslov
