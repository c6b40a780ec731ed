#pragma once
// Cochain complexes of a triangulated disc with subspace coefficients.
// Vertices and ordered edges carry subspaces of a fixed ambient space, with
// vertex stalks included in the stalks of their edges; triangles carry the
// full ambient space and a sign.  The differentials are
//   (d0 s)_(a,b) = s_b - s_a         in edge coordinates,
//   (d1 u)_(a,b,c) = u_bc - u_ac + u_ab   in ambient coordinates,
// and the cup value of two 1-cochains is sum_t sign_t B(u(t01), w(t12)).
//
// Two triangulations of the same cycle are provided: a radial one with a
// centre vertex, and a fan from vertex 0.  In both, a kernel element yields
// a 1-cocycle whose class realises T inside H^1 and whose cup form is -q.

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "maslov/core.hpp"

namespace maslov {

template <class F>
struct SheafComplex {
  using E = typename F::Elem;
  int amb = 0;  // ambient dimension of the constant top stalk
  std::vector<Subspace<F>> vstalk, estalk;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> tris;
  std::vector<int> tsign;
  std::vector<int> voff, eoff;
  int c0 = 0, c1 = 0, c2 = 0;
  Mat<E> d0, d1;

  int edge_index(int a, int b) const {
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].first == a && edges[e].second == b) return static_cast<int>(e);
    return -1;
  }
};

template <class F>
SheafComplex<F> make_complex(const F& f, int amb, std::vector<Subspace<F>> vstalk,
                             std::vector<std::pair<int, int>> edges,
                             std::vector<Subspace<F>> estalk,
                             std::vector<std::array<int, 3>> tris, std::vector<int> tsign) {
  using E = typename F::Elem;
  SheafComplex<F> S;
  S.amb = amb;
  S.vstalk = std::move(vstalk);
  S.edges = std::move(edges);
  S.estalk = std::move(estalk);
  S.tris = std::move(tris);
  S.tsign = std::move(tsign);

  for (const auto& v : S.vstalk) {
    S.voff.push_back(S.c0);
    S.c0 += v.dim();
  }
  for (const auto& e : S.estalk) {
    S.eoff.push_back(S.c1);
    S.c1 += e.dim();
  }
  S.c2 = static_cast<int>(S.tris.size()) * amb;

  S.d0 = Mat<E>(S.c1, S.c0);
  for (std::size_t e = 0; e < S.edges.size(); ++e) {
    const auto& Se = S.estalk[e];
    for (int side = 0; side < 2; ++side) {
      int v = side == 0 ? S.edges[e].first : S.edges[e].second;
      const auto& Sv = S.vstalk[static_cast<std::size_t>(v)];
      for (int r = 0; r < Sv.dim(); ++r) {
        std::vector<E> u(Sv.rows.row_ptr(r), Sv.rows.row_ptr(r) + amb);
        if (!Se.contains_vec(f, u)) throw std::logic_error("make_complex: vertex stalk not in edge stalk");
        auto cc = Se.coords(f, u);
        for (int q = 0; q < Se.dim(); ++q) {
          auto val = side == 0 ? f.neg(cc[static_cast<std::size_t>(q)]) : cc[static_cast<std::size_t>(q)];
          S.d0.at(S.eoff[e] + q, S.voff[static_cast<std::size_t>(v)] + r) =
              f.add(S.d0.at(S.eoff[e] + q, S.voff[static_cast<std::size_t>(v)] + r), val);
        }
      }
    }
  }

  S.d1 = Mat<E>(S.c2, S.c1);
  for (std::size_t t = 0; t < S.tris.size(); ++t) {
    int a = S.tris[t][0], b = S.tris[t][1], c = S.tris[t][2];
    struct Part { int e; bool plus; };
    Part parts[3] = {{S.edge_index(b, c), true}, {S.edge_index(a, c), false}, {S.edge_index(a, b), true}};
    for (const auto& pr : parts) {
      if (pr.e < 0) throw std::logic_error("make_complex: triangle over a missing edge");
      const auto& Se = S.estalk[static_cast<std::size_t>(pr.e)];
      auto inc = transpose(Se.rows);  // amb x dim
      for (int r = 0; r < amb; ++r)
        for (int q = 0; q < Se.dim(); ++q) {
          auto val = pr.plus ? inc.at(r, q) : f.neg(inc.at(r, q));
          S.d1.at(static_cast<int>(t) * amb + r, S.eoff[static_cast<std::size_t>(pr.e)] + q) =
              f.add(S.d1.at(static_cast<int>(t) * amb + r, S.eoff[static_cast<std::size_t>(pr.e)] + q), val);
        }
    }
  }

  if (!is_zero_mat(f, mul(f, S.d1, S.d0))) throw std::logic_error("make_complex: d1 d0 != 0");
  return S;
}

template <class F>
std::array<int, 3> h_dims(const F& f, const SheafComplex<F>& S) {
  int r0 = rank(f, S.d0), r1 = rank(f, S.d1);
  return {S.c0 - r0, S.c1 - r1 - r0, S.c2 - r1};
}

template <class F>
struct H1Space {
  Subspace<F> Z;  // ker d1
  Quotient<F> Q;  // modulo im d0, in Z coordinates
};

template <class F>
H1Space<F> h1_space(const F& f, const SheafComplex<F>& S) {
  using E = typename F::Elem;
  H1Space<F> h;
  h.Z = kernel_space(f, S.d1);
  auto B = column_space(f, S.d0);
  Mat<E> bz(B.dim(), h.Z.dim());
  for (int r = 0; r < B.dim(); ++r) {
    std::vector<E> u(B.rows.row_ptr(r), B.rows.row_ptr(r) + S.c1);
    if (!h.Z.contains_vec(f, u)) throw std::logic_error("h1_space: boundary not a cocycle");
    auto cc = h.Z.coords(f, u);
    for (int q = 0; q < h.Z.dim(); ++q) bz.at(r, q) = cc[static_cast<std::size_t>(q)];
  }
  h.Q = Quotient<F>::make(f, Subspace<F>::from_rows(f, bz));
  return h;
}

// edge value of a 1-cochain in ambient coordinates
template <class F>
std::vector<typename F::Elem> edge_value(const F& f, const SheafComplex<F>& S,
                                         const std::vector<typename F::Elem>& a, int e) {
  const auto& Se = S.estalk[static_cast<std::size_t>(e)];
  std::vector<typename F::Elem> cc(a.begin() + S.eoff[static_cast<std::size_t>(e)],
                                   a.begin() + S.eoff[static_cast<std::size_t>(e)] + Se.dim());
  return apply(f, transpose(Se.rows), cc);
}

template <class F>
typename F::Elem cup_value(const F& f, const Mat<typename F::Elem>& J, const SheafComplex<F>& S,
                           const std::vector<typename F::Elem>& a,
                           const std::vector<typename F::Elem>& b, bool flip = false) {
  auto acc = f.zero();
  for (std::size_t t = 0; t < S.tris.size(); ++t) {
    int e01 = S.edge_index(S.tris[t][0], S.tris[t][1]);
    int e12 = S.edge_index(S.tris[t][1], S.tris[t][2]);
    auto term = sym_B(f, J, edge_value(f, S, a, e01), edge_value(f, S, b, e12));
    int sg = flip ? -S.tsign[t] : S.tsign[t];
    acc = sg > 0 ? f.add(acc, term) : f.sub(acc, term);
  }
  return acc;
}

template <class F>
SheafComplex<F> radial_complex(const F& f, const Core<F>& c) {
  std::vector<Subspace<F>> vs;
  for (int i = 0; i < c.n; ++i)
    vs.push_back(c.cap[static_cast<std::size_t>((i + c.n - 1) % c.n)]);  // l_{i-1} cap l_i
  vs.push_back(Subspace<F>::full(f, 2 * c.m));
  std::vector<std::pair<int, int>> ed;
  std::vector<Subspace<F>> es;
  for (int i = 0; i + 1 < c.n; ++i) {
    ed.push_back({i, i + 1});
    es.push_back(c.t.L[static_cast<std::size_t>(i)]);
  }
  ed.push_back({0, c.n - 1});
  es.push_back(c.t.L[static_cast<std::size_t>(c.n - 1)]);
  for (int i = 0; i < c.n; ++i) {
    ed.push_back({i, c.n});
    es.push_back(Subspace<F>::full(f, 2 * c.m));
  }
  std::vector<std::array<int, 3>> tr;
  std::vector<int> sg;
  for (int i = 0; i + 1 < c.n; ++i) {
    tr.push_back({i, i + 1, c.n});
    sg.push_back(1);
  }
  tr.push_back({0, c.n - 1, c.n});
  sg.push_back(-1);
  return make_complex(f, 2 * c.m, vs, ed, es, tr, sg);
}

template <class F>
SheafComplex<F> fan_complex(const F& f, const Core<F>& c) {
  std::vector<Subspace<F>> vs;
  for (int i = 0; i < c.n; ++i)
    vs.push_back(c.cap[static_cast<std::size_t>((i + c.n - 1) % c.n)]);
  std::vector<std::pair<int, int>> ed;
  std::vector<Subspace<F>> es;
  for (int i = 0; i + 1 < c.n; ++i) {
    ed.push_back({i, i + 1});
    es.push_back(c.t.L[static_cast<std::size_t>(i)]);
  }
  ed.push_back({0, c.n - 1});
  es.push_back(c.t.L[static_cast<std::size_t>(c.n - 1)]);
  for (int i = 2; i + 1 < c.n; ++i) {
    ed.push_back({0, i});
    es.push_back(Subspace<F>::full(f, 2 * c.m));
  }
  std::vector<std::array<int, 3>> tr;
  std::vector<int> sg;
  for (int i = 1; i + 1 < c.n; ++i) {
    tr.push_back({0, i, i + 1});
    sg.push_back(1);
  }
  return make_complex(f, 2 * c.m, vs, ed, es, tr, sg);
}

// 1-cocycle of a kernel element: boundary edges carry the blocks, the wrap
// edge carries -v_{n-1}, interior edges carry partial sums
template <class F>
std::vector<typename F::Elem> kernel_cocycle(const F& f, const Core<F>& c,
                                             const SheafComplex<F>& S,
                                             const std::vector<typename F::Elem>& vE) {
  using E = typename F::Elem;
  auto blocks = block_vectors(f, c, vE);  // ambient coordinates per block
  std::vector<E> a(static_cast<std::size_t>(S.c1), f.zero());
  auto put = [&](int e, const std::vector<E>& val) {
    const auto& Se = S.estalk[static_cast<std::size_t>(e)];
    if (!Se.contains_vec(f, val)) throw std::logic_error("kernel_cocycle: value outside the stalk");
    auto cc = Se.coords(f, val);
    for (int q = 0; q < Se.dim(); ++q) a[static_cast<std::size_t>(S.eoff[static_cast<std::size_t>(e)] + q)] =
        cc[static_cast<std::size_t>(q)];
  };
  for (int i = 0; i + 1 < c.n; ++i) put(S.edge_index(i, i + 1), blocks[static_cast<std::size_t>(i)]);
  std::vector<E> wneg(static_cast<std::size_t>(2 * c.m));
  for (int r = 0; r < 2 * c.m; ++r)
    wneg[static_cast<std::size_t>(r)] = f.neg(blocks[static_cast<std::size_t>(c.n - 1)][static_cast<std::size_t>(r)]);
  put(S.edge_index(0, c.n - 1), wneg);
  std::vector<E> acc(static_cast<std::size_t>(2 * c.m), f.zero());
  for (int i = 0; i < c.n; ++i) {
    // acc = v_0 + ... + v_{i-1}
    int e = S.edge_index(i, c.n);
    if (e >= 0) {
      std::vector<E> nacc(static_cast<std::size_t>(2 * c.m));
      for (int r = 0; r < 2 * c.m; ++r) nacc[static_cast<std::size_t>(r)] = f.neg(acc[static_cast<std::size_t>(r)]);
      put(e, nacc);
    }
    e = (i >= 2) ? S.edge_index(0, i) : -1;
    if (e >= 0 && S.edges[static_cast<std::size_t>(e)].second != c.n - 1) put(e, acc);
    for (int r = 0; r < 2 * c.m; ++r)
      acc[static_cast<std::size_t>(r)] =
          f.add(acc[static_cast<std::size_t>(r)], blocks[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)]);
  }
  return a;
}

}  // namespace maslov
