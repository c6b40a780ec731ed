#pragma once
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "maslov/fp.hpp"
#include "maslov/matrix.hpp"
#include "maslov/psi.hpp"
#include "maslov/rat.hpp"

namespace maslov {

template <class F>
struct DiagForm {
  Mat<typename F::Elem> P;          // rows: basis with P G P^T diagonal
  std::vector<typename F::Elem> d;  // diagonal entries, zeros included
};

// Symmetric Gram-Schmidt. Pivot rule: first remaining vector with q != 0,
// else fix up the first pair with B != 0 by adding one to the other.
template <class F>
DiagForm<F> diagonalize_form(const F& f, const Mat<typename F::Elem>& G) {
  using E = typename F::Elem;
  if (!is_symmetric(f, G)) throw std::invalid_argument("diagonalize: gram not symmetric");
  int t = G.rows;
  std::vector<std::vector<E>> rem;
  for (int i = 0; i < t; ++i) {
    std::vector<E> e(static_cast<std::size_t>(t), f.zero());
    e[static_cast<std::size_t>(i)] = f.one();
    rem.push_back(std::move(e));
  }
  DiagForm<F> out;
  out.P = Mat<E>(t, t);
  int filled = 0;
  auto bform = [&](const std::vector<E>& x, const std::vector<E>& y) { return bilinear(f, G, x, y); };
  while (!rem.empty()) {
    std::size_t pv = rem.size();
    for (std::size_t i = 0; i < rem.size(); ++i) {
      if (!f.is_zero(bform(rem[i], rem[i]))) { pv = i; break; }
    }
    if (pv == rem.size()) {
      bool fixed = false;
      for (std::size_t i = 0; i < rem.size() && !fixed; ++i) {
        for (std::size_t j = i + 1; j < rem.size() && !fixed; ++j) {
          if (!f.is_zero(bform(rem[i], rem[j]))) {
            for (std::size_t c = 0; c < rem[i].size(); ++c) rem[i][c] = f.add(rem[i][c], rem[j][c]);
            pv = i;
            fixed = true;
          }
        }
      }
      if (!fixed) {
        // what is left is the radical
        for (auto& v : rem) {
          for (int c = 0; c < t; ++c) out.P.at(filled, c) = v[static_cast<std::size_t>(c)];
          out.d.push_back(f.zero());
          ++filled;
        }
        break;
      }
    }
    auto v = rem[pv];
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(pv));
    auto dv = bform(v, v);
    for (auto& w : rem) {
      auto cf = f.div(bform(v, w), dv);
      if (f.is_zero(cf)) continue;
      for (std::size_t c = 0; c < w.size(); ++c) w[c] = f.sub(w[c], f.mul(cf, v[c]));
    }
    for (int c = 0; c < t; ++c) out.P.at(filled, c) = v[static_cast<std::size_t>(c)];
    out.d.push_back(dv);
    ++filled;
  }
  return out;
}

inline std::pair<int, int> signature(const QField& f, const Mat<mpq_class>& G) {
  auto dg = diagonalize_form(f, G);
  int pos = 0, negc = 0;
  for (const auto& d : dg.d) {
    if (sgn(d) > 0) ++pos;
    if (sgn(d) < 0) ++negc;
  }
  return {pos, negc};
}

// Diagonal of the anisotropic kernel over F_p: split off hyperbolic planes
// until at most two nonzero entries remain. Ternary forms over F_p are always
// isotropic, so the loop terminates with rank <= 2.
inline std::vector<std::uint16_t> anisotropic_diag(const FpField& f, Mat<std::uint16_t> G) {
  using u16 = std::uint16_t;
  for (;;) {
    auto dg = diagonalize_form(f, G);
    std::vector<u16> ds;
    for (u16 d : dg.d)
      if (d != 0) ds.push_back(d);
    int r = static_cast<int>(ds.size());
    if (r <= 1) return ds;
    if (r == 2) {
      // binary: isotropic iff -d0 d1 is a square, and then it is hyperbolic
      if (f.is_square(f.neg(f.mul(ds[0], ds[1])))) return {};
      return ds;
    }
    Mat<u16> Gc(r, r);
    for (int i = 0; i < r; ++i) Gc.at(i, i) = ds[static_cast<std::size_t>(i)];
    // isotropic vector inside the first ternary block
    std::vector<u16> v(static_cast<std::size_t>(r), 0);
    bool found = false;
    for (u16 a1 = 0; a1 < f.p && !found; ++a1) {
      auto s1 = f.mul(ds[0], f.mul(a1, a1));
      for (u16 a2 = 0; a2 < f.p && !found; ++a2) {
        auto s = f.add(s1, f.add(f.mul(ds[1], f.mul(a2, a2)), ds[2]));
        if (s == 0) {
          v[0] = a1;
          v[1] = a2;
          v[2] = 1;
          found = true;
        }
      }
    }
    if (!found) {
      for (u16 a1 = 0; a1 < f.p && !found; ++a1) {
        if (f.add(f.mul(ds[0], f.mul(a1, a1)), ds[1]) == 0) {
          v[0] = a1;
          v[1] = 1;
          found = true;
        }
      }
    }
    if (!found) throw std::logic_error("ternary form with no isotropic vector");
    // hyperbolic partner: B(v, w) = 1, q(w) = 0
    auto Gv = apply(f, Gc, v);
    int wi = -1;
    for (int i = 0; i < r; ++i) {
      if (Gv[static_cast<std::size_t>(i)] != 0) { wi = i; break; }
    }
    std::vector<u16> w(static_cast<std::size_t>(r), 0);
    w[static_cast<std::size_t>(wi)] = f.inv(Gv[static_cast<std::size_t>(wi)]);
    auto qw = bilinear(f, Gc, w, w);
    auto cf = f.mul(f.half(), qw);
    for (int i = 0; i < r; ++i)
      w[static_cast<std::size_t>(i)] = f.sub(w[static_cast<std::size_t>(i)], f.mul(cf, v[static_cast<std::size_t>(i)]));
    // complement of the hyperbolic plane
    Mat<u16> M(2, r);
    auto Gw = apply(f, Gc, w);
    for (int i = 0; i < r; ++i) {
      M.at(0, i) = Gv[static_cast<std::size_t>(i)];
      M.at(1, i) = Gw[static_cast<std::size_t>(i)];
    }
    auto C = kernel_mat(f, M);
    G = mul(f, C, mul(f, Gc, transpose(C)));
  }
}

// Witt class over F_p as a canonical anisotropic representative:
// rank 0: <>; rank 1: <1> or <u>; rank 2: <1,1> if p = 3 mod 4 else <1,u>,
// with u the least nonsquare.
struct WittClass {
  int rank = 0;
  std::vector<std::uint16_t> diag;
};

inline bool witt_equal(const WittClass& a, const WittClass& b) {
  return a.rank == b.rank && a.diag == b.diag;
}

inline WittClass witt_class(const FpField& f, const Mat<std::uint16_t>& G) {
  auto ds = anisotropic_diag(f, G);
  WittClass w;
  w.rank = static_cast<int>(ds.size());
  if (w.rank == 1) w.diag = {f.is_square(ds[0]) ? std::uint16_t(1) : f.nonsquare};
  if (w.rank == 2) {
    if (f.is_square(f.neg(f.mul(ds[0], ds[1])))) throw std::logic_error("split binary escaped the kernel loop");
    w.diag = (f.p % 4 == 3) ? std::vector<std::uint16_t>{1, 1} : std::vector<std::uint16_t>{1, f.nonsquare};
  }
  return w;
}

inline WittClass witt_add(const FpField& f, const WittClass& a, const WittClass& b) {
  int n = a.rank + b.rank;
  Mat<std::uint16_t> G(n, n);
  for (int i = 0; i < a.rank; ++i) G.at(i, i) = a.diag[static_cast<std::size_t>(i)];
  for (int i = 0; i < b.rank; ++i) G.at(a.rank + i, a.rank + i) = b.diag[static_cast<std::size_t>(i)];
  return witt_class(f, G);
}

inline WittClass witt_neg(const FpField& f, const WittClass& a) {
  Mat<std::uint16_t> G(a.rank, a.rank);
  for (int i = 0; i < a.rank; ++i) G.at(i, i) = f.neg(a.diag[static_cast<std::size_t>(i)]);
  return witt_class(f, G);
}

// ---- Gauss sums and the eighth-root invariant ------------------------------

inline std::complex<double> gauss_sum(const FpField& f, const Psi& psi, std::uint16_t d) {
  std::complex<double> s = 0.0;
  for (std::uint16_t c = 0; c < f.p; ++c) s += psi(f.mul(d, f.mul(c, c)));
  return s;
}

// gamma(q) = p^{-(dim + dim ker)/2} sum_x psi(q(x,x)/2), computed one
// diagonal entry at a time; zero entries contribute a factor 1
inline std::complex<double> gamma_form(const FpField& f, const Psi& psi, const Mat<std::uint16_t>& G) {
  auto dg = diagonalize_form(f, G);
  std::complex<double> out = 1.0;
  double rp = std::sqrt(static_cast<double>(f.p));
  for (auto d : dg.d) {
    if (d == 0) continue;
    out *= gauss_sum(f, psi, f.mul(f.half(), d)) / rp;
  }
  return out;
}

// same quantity summed directly over F_p^t; test oracle, keep t small
inline std::complex<double> gamma_brute(const FpField& f, const Psi& psi, const Mat<std::uint16_t>& G) {
  int t = G.rows;
  double total = 1;
  for (int i = 0; i < t; ++i) total *= f.p;
  std::vector<std::uint16_t> x(static_cast<std::size_t>(t), 0);
  std::complex<double> s = 0.0;
  for (long long it = 0; it < static_cast<long long>(total); ++it) {
    s += psi(f.mul(f.half(), bilinear(f, G, x, x)));
    for (int i = t - 1; i >= 0; --i) {
      x[static_cast<std::size_t>(i)] = f.add(x[static_cast<std::size_t>(i)], 1);
      if (x[static_cast<std::size_t>(i)] != 0) break;
    }
  }
  int k = t - rank(f, G);
  return s / std::pow(static_cast<double>(f.p), 0.5 * (t + k));
}

inline std::complex<double> gamma_of_witt(const FpField& f, const Psi& psi, const WittClass& w) {
  Mat<std::uint16_t> G(w.rank, w.rank);
  for (int i = 0; i < w.rank; ++i) G.at(i, i) = w.diag[static_cast<std::size_t>(i)];
  return gamma_form(f, psi, G);
}

}  // namespace maslov
