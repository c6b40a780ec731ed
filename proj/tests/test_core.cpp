#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "maslov/core.hpp"
#include "maslov/fp.hpp"
#include "maslov/rat.hpp"

using namespace maslov;

namespace {

template <class F>
LagTuple<F> tuple_from_int_rows(const F& f, int m, std::vector<std::vector<std::vector<int>>> rows) {
  LagTuple<F> t;
  t.m = m;
  t.n = static_cast<int>(rows.size());
  for (auto& mat : rows) {
    Mat<typename F::Elem> M(static_cast<int>(mat.size()), 2 * m);
    for (std::size_t r = 0; r < mat.size(); ++r)
      for (int c = 0; c < 2 * m; ++c) M.at(static_cast<int>(r), c) = f.from_int(mat[r][static_cast<std::size_t>(c)]);
    t.L.push_back(Subspace<F>::from_rows(f, M));
  }
  return t;
}

template <class F>
LagTuple<F> three_lines(const F& f) {
  return tuple_from_int_rows(f, 1, {{{1, 0}}, {{1, 1}}, {{0, 1}}});
}

template <class F>
std::vector<typename F::Elem> random_K_element(const F& f, const Core<F>& c, std::mt19937_64& rng) {
  std::vector<typename F::Elem> kc(static_cast<std::size_t>(c.k));
  for (auto& x : kc) x = f.from_int(static_cast<long long>(rng() % 19) - 9);
  return embed_K_in_E(f, c, kc);
}

template <class F>
void core_invariants(const F& f, const LagTuple<F>& t, std::mt19937_64& rng) {
  auto c = compute_core(f, t);

  // K really is the kernel of the sum map
  CHECK(is_zero_mat(f, mul(f, c.Sigma, transpose(c.K.rows))));
  CHECK(c.k == c.n * c.m - 2 * c.m + c.cap_all.dim());

  // gram is symmetric even though the E-level pairing is not
  CHECK(is_symmetric(f, c.G_K));

  // the two formulas for q agree on K
  for (int it = 0; it < 8; ++it) {
    auto x = random_K_element(f, c, rng);
    auto y = random_K_element(f, c, rng);
    CHECK(f.eq(q_form(f, c, x, y), q_antiderivative(f, c, x, y)));
    CHECK(f.eq(q_form(f, c, x, y), q_form(f, c, y, x)));  // symmetric on K
  }

  // the boundary map lands in K and its image is exactly the radical
  CHECK(is_zero_mat(f, mul(f, c.Sigma, c.partial)));
  auto imd = image_partial_in_E(f, c);
  auto rad = radical_in_E(f, c);
  CHECK(imd.equals(f, rad));

  // kernel of the boundary map is the full intersection (constant tuples)
  CHECK(rank(f, c.partial) == c.D - c.cap_all.dim());

  // dimension formula
  CHECK(c.tdim == expected_tdim(c));

  // T's gram is nondegenerate
  CHECK(rank(f, c.G_T) == c.tdim);
}

template <class F>
void dihedral_invariance(const F& f, const LagTuple<F>& t, std::mt19937_64& rng) {
  auto c = compute_core(f, t);
  int s = 1 + static_cast<int>(rng() % static_cast<unsigned>(t.n - 1));

  // rotation: permute blocks, gram unchanged
  {
    auto c2 = compute_core(f, rotate_tuple(t, s));
    Mat<typename F::Elem> P(c2.k, c.k);
    for (int r = 0; r < c.k; ++r) {
      std::vector<typename F::Elem> x(static_cast<std::size_t>(c.edim));
      for (int i = 0; i < c.n; ++i) {
        int src = c.boff[static_cast<std::size_t>((i + s) % c.n)];
        for (int b = 0; b < c.m; ++b)
          x[static_cast<std::size_t>(i * c.m + b)] = c.K.rows.at(r, src + b);
      }
      for (const auto& yv : apply(f, c2.Sigma, x)) CHECK(f.is_zero(yv));
      auto kc = c2.K.coords(f, x);
      for (int i = 0; i < c2.k; ++i) P.at(i, r) = kc[static_cast<std::size_t>(i)];
    }
    auto pulled = mul(f, transpose(P), mul(f, c2.G_K, P));
    CHECK(mat_eq(f, pulled, c.G_K));
  }

  // reversal: permute blocks backwards, gram negated
  {
    auto c2 = compute_core(f, reverse_tuple(t));
    Mat<typename F::Elem> P(c2.k, c.k);
    for (int r = 0; r < c.k; ++r) {
      std::vector<typename F::Elem> x(static_cast<std::size_t>(c.edim));
      for (int i = 0; i < c.n; ++i) {
        int src = c.boff[static_cast<std::size_t>(c.n - 1 - i)];
        for (int b = 0; b < c.m; ++b)
          x[static_cast<std::size_t>(i * c.m + b)] = c.K.rows.at(r, src + b);
      }
      auto kc = c2.K.coords(f, x);
      for (int i = 0; i < c2.k; ++i) P.at(i, r) = kc[static_cast<std::size_t>(i)];
    }
    auto pulled = mul(f, transpose(P), mul(f, c2.G_K, P));
    CHECK(mat_eq(f, pulled, neg(f, c.G_K)));
  }
}

template <class F>
void duality_squares(const F& f, const LagTuple<F>& t) {
  auto c = compute_core(f, t);
  auto p0 = phi_zero(f, c);
  auto pm1 = phi_minus_one(f, c);
  CHECK(is_symmetric(f, p0));
  // left square: Σ^T φ_{-1} = φ_0 ∂, and its transpose
  CHECK(mat_eq(f, mul(f, transpose(c.Sigma), pm1), mul(f, p0, c.partial)));
  CHECK(mat_eq(f, mul(f, transpose(c.partial), p0), mul(f, transpose(pm1), c.Sigma)));
  // the middle map restricts to q on K
  auto GK2 = mul(f, c.K.rows, mul(f, p0, transpose(c.K.rows)));
  CHECK(mat_eq(f, GK2, c.G_K));
}

}  // namespace

TEST_CASE("three lines fixture") {
  QField f;
  auto t = three_lines(f);
  auto c = compute_core(f, t);
  CHECK(c.k == 1);
  CHECK(c.tdim == 1);
  CHECK(c.D == 0);
  CHECK(f.eq(c.G_T.at(0, 0), f.one()));
  auto cr = compute_core(f, reverse_tuple(t));
  CHECK(f.eq(cr.G_T.at(0, 0), f.neg(f.one())));

  FpField f5(5);
  auto c5 = compute_core(f5, three_lines(f5));
  CHECK(c5.tdim == 1);
  CHECK(c5.G_T.at(0, 0) == 1);
}

TEST_CASE("four lines over F_5") {
  FpField f(5);
  auto t = tuple_from_int_rows(f, 1, {{{1, 0}}, {{1, 1}}, {{0, 1}}, {{1, -1}}});
  auto c = compute_core(f, t);
  CHECK(c.k == 2);
  CHECK(c.tdim == 2);
  CHECK(rank(f, c.G_T) == 2);
}

TEST_CASE("core invariants, radical identity, dimension formula") {
  std::mt19937_64 rng(21);
  for (unsigned p : {3u, 5u, 7u, 11u}) {
    FpField f(p);
    for (int it = 0; it < 25; ++it) {
      int m = 1 + static_cast<int>(rng() % 3);
      int n = 3 + static_cast<int>(rng() % 4);
      core_invariants(f, mixed_tuple(f, m, n, rng), rng);
    }
  }
  QField fq;
  for (int it = 0; it < 12; ++it) {
    int m = 1 + static_cast<int>(rng() % 2);
    int n = 3 + static_cast<int>(rng() % 3);
    core_invariants(fq, mixed_tuple(fq, m, n, rng), rng);
  }
}

TEST_CASE("n = 2 degenerate case: q vanishes") {
  FpField f(7);
  std::mt19937_64 rng(22);
  for (int it = 0; it < 10; ++it) {
    auto t = random_tuple(f, 2, 2, rng);
    auto c = compute_core(f, t);
    CHECK(is_zero_mat(f, c.G_K));
    CHECK(c.tdim == 0);
    CHECK(c.tdim == expected_tdim(c));
  }
}

TEST_CASE("rotation preserves the form, reversal negates it") {
  std::mt19937_64 rng(23);
  FpField f7(7);
  for (int it = 0; it < 15; ++it) {
    int m = 1 + static_cast<int>(rng() % 2);
    int n = 3 + static_cast<int>(rng() % 4);
    dihedral_invariance(f7, mixed_tuple(f7, m, n, rng), rng);
  }
  QField fq;
  for (int it = 0; it < 6; ++it) {
    dihedral_invariance(fq, mixed_tuple(fq, 1, 3 + static_cast<int>(rng() % 3), rng), rng);
  }
}

TEST_CASE("explicit duality maps form chain squares") {
  std::mt19937_64 rng(24);
  FpField f5(5);
  for (int it = 0; it < 20; ++it) {
    int m = 1 + static_cast<int>(rng() % 3);
    int n = 3 + static_cast<int>(rng() % 4);
    duality_squares(f5, mixed_tuple(f5, m, n, rng));
  }
  QField fq;
  for (int it = 0; it < 8; ++it) {
    duality_squares(fq, mixed_tuple(fq, 1 + static_cast<int>(rng() % 2), 3 + static_cast<int>(rng() % 3), rng));
  }
  // wrap-around intersections exercised explicitly
  FpField f3(3);
  for (int it = 0; it < 10; ++it) {
    auto t = random_tuple(f3, 2, 4, rng);
    t.L[3] = t.L[0];  // force l_{n-1} ∩ l_0 nonzero
    duality_squares(f3, t);
  }
}
