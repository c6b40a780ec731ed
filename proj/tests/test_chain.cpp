#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "maslov/chain.hpp"
#include "maslov/fp.hpp"
#include "maslov/rat.hpp"
#include "maslov/witt.hpp"

using namespace maslov;

namespace {

template <class F>
Mat<typename F::Elem> blockdiag2(const F& f, const Mat<typename F::Elem>& A,
                                 const Mat<typename F::Elem>& B) {
  Mat<typename F::Elem> M(A.rows + B.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j) M.at(A.rows + i, A.cols + j) = B.at(i, j);
  return M;
}

template <class F>
void check_split(const F& f, const Core<F>& c, int k0) {
  auto s = chain_split(f, c, k0);
  auto capX = intersect(f, c.t.L[0], c.t.L[static_cast<std::size_t>(k0)]);

  CHECK(s.left.n + s.right.n == c.n + 2);
  CHECK(s.image.dim() == s.left.k + s.right.k - capX.dim());
  CHECK(s.R.dim() == capX.dim());

  // both halves embed isometrically and orthogonally to each other
  CHECK(mat_eq(f, mul(f, s.s1, mul(f, c.G_K, transpose(s.s1))), s.left.G_K));
  CHECK(mat_eq(f, mul(f, s.s2, mul(f, c.G_K, transpose(s.s2))), s.right.G_K));
  CHECK(is_zero_mat(f, mul(f, s.s1, mul(f, c.G_K, transpose(s.s2)))));

  // the embedded span is exactly the orthogonal complement of R
  CHECK(s.image.equals(f, kernel_space(f, mul(f, s.R.rows, c.G_K))));

  // I is isotropic and the subquotient has the right size
  CHECK(is_zero_mat(f, mul(f, s.I.rows, mul(f, c.G_T, transpose(s.I.rows)))));
  CHECK(s.sub.dim == s.left.tdim + s.right.tdim);
  CHECK(s.sub.dim == c.tdim - 2 * s.I.dim());

  // radicals of the halves land in I, so the induced maps are well defined
  for (const auto* part : {&s.left, &s.right}) {
    const auto& emb = (part == &s.left) ? s.emb1 : s.emb2;
    for (int r = 0; r < part->radical.dim(); ++r) {
      std::vector<typename F::Elem> v(part->radical.rows.row_ptr(r),
                                      part->radical.rows.row_ptr(r) + part->k);
      auto e = apply(f, emb, embed_K_in_E(f, *part, v));
      auto tc = class_T(f, c, c.K.coords(f, e));
      CHECK(s.I.contains_vec(f, tc));
    }
  }

  // mu is a bijective isometry T_1 (+) T_2 -> I^perp / I
  auto M = hcat(s.mu1, s.mu2);
  CHECK(M.rows == s.sub.dim);
  CHECK(M.cols == s.sub.dim);
  CHECK(rank(f, M) == s.sub.dim);
  CHECK(mat_eq(f, mul(f, transpose(M), mul(f, s.sub.G, M)),
               blockdiag2(f, s.left.G_T, s.right.G_T)));

  // hyperbolic neighbourhood of I inside T
  auto h = hyperbolic_witness(f, c.G_T, s.sub);
  CHECK(h.W.dim() == 2 * s.I.dim());
  CHECK(rank(f, h.G_W) == h.W.dim());
  CHECK(sum(f, s.I, h.W).equals(f, h.W));
  CHECK(h.Wperp.dim() == s.sub.dim);
  CHECK(rank(f, h.nu) == s.sub.dim);
  CHECK(mat_eq(f, mul(f, transpose(h.nu), mul(f, s.sub.G, h.nu)), h.G_Wperp));

  if (capX.dim() == 0) {
    // no relations: the halves add up to T itself
    CHECK(s.I.dim() == 0);
    CHECK(s.sub.dim == c.tdim);
    CHECK(mat_eq(f, s.sub.G, c.G_T));
  }
}

}  // namespace

TEST_CASE("four lines fixture splits with empty chord") {
  FpField f(5);
  LagTuple<FpField> t;
  t.m = 1;
  t.n = 4;
  auto mk = [&](int a, int b) {
    Mat<std::uint16_t> r(1, 2);
    r.at(0, 0) = f.from_int(a);
    r.at(0, 1) = f.from_int(b);
    return Subspace<FpField>::from_rows(f, r);
  };
  t.L = {mk(1, 0), mk(1, 1), mk(0, 1), mk(1, -1)};
  auto c = compute_core(f, t);
  REQUIRE(c.tdim == 2);
  check_split(f, c, 2);
  auto s = chain_split(f, c, 2);
  CHECK(s.I.dim() == 0);
  CHECK(s.left.tdim + s.right.tdim == 2);
}

TEST_CASE("repeated line forces a nonzero chord") {
  FpField f(7);
  LagTuple<FpField> t;
  t.m = 1;
  t.n = 4;
  auto mk = [&](int a, int b) {
    Mat<std::uint16_t> r(1, 2);
    r.at(0, 0) = f.from_int(a);
    r.at(0, 1) = f.from_int(b);
    return Subspace<FpField>::from_rows(f, r);
  };
  t.L = {mk(1, 0), mk(0, 1), mk(1, 0), mk(1, 1)};
  auto c = compute_core(f, t);
  auto s = chain_split(f, c, 2);
  CHECK(s.R.dim() == 1);
  check_split(f, c, 2);
}

TEST_CASE("random tuples over prime fields") {
  std::mt19937_64 rng(41);
  for (unsigned p : {3u, 5u, 7u, 11u}) {
    FpField f(p);
    for (int it = 0; it < 20; ++it) {
      int m = 1 + static_cast<int>(rng() % 3);
      int n = 4 + static_cast<int>(rng() % 3);
      auto t = mixed_tuple(f, m, n, rng);
      auto c = compute_core(f, t);
      int k0 = 2 + static_cast<int>(rng() % (n - 3));
      check_split(f, c, k0);
      auto s = chain_split(f, c, k0);
      auto w = witt_add(f, witt_class(f, s.left.G_T), witt_class(f, s.right.G_T));
      CHECK(witt_equal(witt_class(f, c.G_T), w));
      auto h = hyperbolic_witness(f, c.G_T, s.sub);
      CHECK(witt_class(f, h.G_W).rank == 0);
    }
  }
}

TEST_CASE("random tuples over the rationals") {
  std::mt19937_64 rng(42);
  QField f;
  for (int it = 0; it < 8; ++it) {
    int m = 1 + static_cast<int>(rng() % 2);
    int n = 4 + static_cast<int>(rng() % 2);
    auto t = mixed_tuple(f, m, n, rng);
    auto c = compute_core(f, t);
    int k0 = 2 + static_cast<int>(rng() % (n - 3));
    check_split(f, c, k0);
  }
}

TEST_CASE("every admissible chord of one cycle") {
  std::mt19937_64 rng(43);
  FpField f(3);
  auto t = mixed_tuple(f, 2, 6, rng);
  auto c = compute_core(f, t);
  for (int k0 = 2; k0 <= 4; ++k0) check_split(f, c, k0);
}

TEST_CASE("chord index is validated") {
  std::mt19937_64 rng(44);
  FpField f(5);
  auto c = compute_core(f, random_tuple(f, 1, 4, rng));
  CHECK_THROWS_AS(chain_split(f, c, 1), std::invalid_argument);
  CHECK_THROWS_AS(chain_split(f, c, 3), std::invalid_argument);
}
