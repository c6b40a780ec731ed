#pragma once
#include <random>
#include <stdexcept>
#include <vector>

#include "maslov/matrix.hpp"
#include "maslov/subspace.hpp"

namespace maslov {

// V = F^{2m} with the standard symplectic form B(x, y) = x^T J y,
// J = [[0, I], [-I, 0]]. Lagrangians are m-dimensional isotropic subspaces.
template <class F>
Mat<typename F::Elem> symplectic_J(const F& f, int m) {
  Mat<typename F::Elem> J(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    J.at(i, m + i) = f.one();
    J.at(m + i, i) = f.neg(f.one());
  }
  return J;
}

template <class F>
typename F::Elem sym_B(const F& f, const Mat<typename F::Elem>& J,
                       const std::vector<typename F::Elem>& x,
                       const std::vector<typename F::Elem>& y) {
  return bilinear(f, J, x, y);
}

template <class F>
bool is_isotropic(const F& f, const Mat<typename F::Elem>& J, const Subspace<F>& L) {
  auto G = mul(f, L.rows, mul(f, J, transpose(L.rows)));
  return is_zero_mat(f, G);
}

template <class F>
bool is_lagrangian(const F& f, const Mat<typename F::Elem>& J, const Subspace<F>& L) {
  return 2 * L.dim() == L.ambient() && is_isotropic(f, J, L);
}

// symplectic transvection x -> x + c B(x, u) u, as the matrix I + c u (J u)^T
template <class F>
Mat<typename F::Elem> transvection(const F& f, const Mat<typename F::Elem>& J,
                                   const std::vector<typename F::Elem>& u,
                                   const typename F::Elem& c) {
  int N = J.rows;
  auto Ju = apply(f, J, u);
  auto M = identity(f, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      M.at(i, j) = f.add(M.at(i, j), f.mul(c, f.mul(u[static_cast<std::size_t>(i)], Ju[static_cast<std::size_t>(j)])));
  return M;
}

// element of F drawn from a small symmetric integer window (exact over Q too)
template <class F>
typename F::Elem random_scalar(const F& f, std::mt19937_64& rng) {
  return f.from_int(static_cast<long long>(rng() % 19) - 9);
}

template <class F>
std::vector<typename F::Elem> random_vector(const F& f, int N, std::mt19937_64& rng) {
  std::vector<typename F::Elem> v(static_cast<std::size_t>(N));
  bool nonzero = false;
  for (int tries = 0; tries < 64 && !nonzero; ++tries) {
    for (auto& x : v) {
      x = f.from_int(static_cast<long long>(rng() % 19) - 9);
      if (!f.is_zero(x)) nonzero = true;
    }
  }
  if (!nonzero) v[0] = f.one();
  return v;
}

// product of 4m random transvections; transvections generate Sp(2m)
template <class F>
Mat<typename F::Elem> random_symplectic(const F& f, int m, std::mt19937_64& rng) {
  auto J = symplectic_J(f, m);
  auto g = identity(f, 2 * m);
  for (int it = 0; it < 4 * m; ++it) {
    auto u = random_vector(f, 2 * m, rng);
    auto c = random_scalar(f, rng);
    g = mul(f, transvection(f, J, u, c), g);
  }
  return g;
}

template <class F>
Subspace<F> apply_to_subspace(const F& f, const Mat<typename F::Elem>& g, const Subspace<F>& S) {
  // column vectors map by g, so basis rows map by g^T on the right
  return Subspace<F>::from_rows(f, mul(f, S.rows, transpose(g)));
}

// the standard Lagrangian spanned by e_1 .. e_m
template <class F>
Subspace<F> standard_lagrangian(const F& f, int m) {
  Mat<typename F::Elem> M(m, 2 * m);
  for (int i = 0; i < m; ++i) M.at(i, i) = f.one();
  return Subspace<F>::from_rows(f, M);
}

template <class F>
Subspace<F> random_lagrangian(const F& f, int m, std::mt19937_64& rng) {
  return apply_to_subspace(f, random_symplectic(f, m, rng), standard_lagrangian(f, m));
}

template <class F>
struct LagTuple {
  int m = 0, n = 0;
  std::vector<Subspace<F>> L;  // n Lagrangians in F^{2m}
};

template <class F>
LagTuple<F> random_tuple(const F& f, int m, int n, std::mt19937_64& rng) {
  LagTuple<F> t;
  t.m = m;
  t.n = n;
  for (int i = 0; i < n; ++i) t.L.push_back(random_lagrangian(f, m, rng));
  return t;
}

// tuple whose members all contain a fixed core of dimension c, then a common
// random symplectic change of coordinates; the full intersection contains the
// moved core
template <class F>
LagTuple<F> common_core_tuple(const F& f, int m, int n, int c, std::mt19937_64& rng) {
  if (c < 0 || c > m) throw std::invalid_argument("core dimension out of range");
  LagTuple<F> t;
  t.m = m;
  t.n = n;
  int mm = m - c;
  auto g = random_symplectic(f, m, rng);
  for (int i = 0; i < n; ++i) {
    Subspace<F> small = mm > 0 ? random_lagrangian(f, mm, rng) : Subspace<F>::zero(f, 0);
    Mat<typename F::Elem> M(m, 2 * m);
    for (int r = 0; r < c; ++r) M.at(r, r) = f.one();
    // embed the (e_{c+1..m}, f_{c+1..m}) block
    for (int r = 0; r < small.dim(); ++r) {
      for (int j = 0; j < mm; ++j) {
        M.at(c + r, c + j) = small.rows.at(r, j);
        M.at(c + r, m + c + j) = small.rows.at(r, mm + j);
      }
    }
    t.L.push_back(apply_to_subspace(f, g, Subspace<F>::from_rows(f, M)));
  }
  return t;
}

// random tuple with degenerate shapes mixed in: shared cores, adjacent
// repeats, occasional equal neighbours, so intersections of every dimension
// show up in test runs
template <class F>
LagTuple<F> mixed_tuple(const F& f, int m, int n, std::mt19937_64& rng) {
  unsigned mode = static_cast<unsigned>(rng() % 10);
  if (mode < 6) return random_tuple(f, m, n, rng);
  if (mode < 8) {
    int c = 1 + static_cast<int>(rng() % static_cast<unsigned>(m));
    return common_core_tuple(f, m, n, c, rng);
  }
  auto t = random_tuple(f, m, n, rng);
  int i = static_cast<int>(rng() % static_cast<unsigned>(n));
  t.L[static_cast<std::size_t>((i + 1) % n)] = t.L[static_cast<std::size_t>(i)];
  return t;
}

template <class F>
LagTuple<F> rotate_tuple(const LagTuple<F>& t, int s) {
  LagTuple<F> r;
  r.m = t.m;
  r.n = t.n;
  for (int i = 0; i < t.n; ++i) r.L.push_back(t.L[static_cast<std::size_t>((i + s) % t.n)]);
  return r;
}

template <class F>
LagTuple<F> reverse_tuple(const LagTuple<F>& t) {
  LagTuple<F> r;
  r.m = t.m;
  r.n = t.n;
  for (int i = t.n - 1; i >= 0; --i) r.L.push_back(t.L[static_cast<std::size_t>(i)]);
  return r;
}

}  // namespace maslov
