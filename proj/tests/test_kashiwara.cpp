#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "maslov/fp.hpp"
#include "maslov/kashiwara.hpp"
#include "maslov/rat.hpp"
#include "maslov/witt.hpp"

using namespace maslov;

namespace {

template <class F>
void check_kash(const F& f, const Core<F>& c) {
  auto k = kashiwara_compare(f, c);
  CHECK(is_symmetric(f, k.G));
  for (int i = 0; i < 3; ++i)
    for (int r = 0; r < c.m; ++r)
      for (int s = 0; s < c.m; ++s) CHECK(f.is_zero(k.G.at(i * c.m + r, i * c.m + s)));
  CHECK(is_zero_mat(f, mul(f, k.I.rows, mul(f, k.G, transpose(k.I.rows)))));
  CHECK(k.Iperp_G.equals(f, k.Iperp_in));
  CHECK(k.sub.dim == c.k);
  CHECK(rank(f, k.mubar) == c.k);
  CHECK(mat_eq(f, mul(f, transpose(k.mubar), mul(f, c.G_K, k.mubar)), k.sub.G));
}

template <class F>
Subspace<F> line(const F& f, int a, int b) {
  Mat<typename F::Elem> r(1, 2);
  r.at(0, 0) = f.from_int(a);
  r.at(0, 1) = f.from_int(b);
  return Subspace<F>::from_rows(f, r);
}

}  // namespace

TEST_CASE("three rational lines, explicit form") {
  QField f;
  LagTuple<QField> t;
  t.m = 1;
  t.n = 3;
  t.L = {line(f, 1, 0), line(f, 1, 1), line(f, 0, 1)};
  auto c = compute_core(f, t);
  auto k = kashiwara_compare(f, c);

  Mat<mpq_class> want(3, 3);
  mpq_class h(1, 2);
  want.at(0, 1) = h;
  want.at(1, 0) = h;
  want.at(1, 2) = h;
  want.at(2, 1) = h;
  want.at(0, 2) = -h;
  want.at(2, 0) = -h;
  CHECK(mat_eq(f, k.G, want));
  CHECK(det(f, k.G) == mpq_class(-1, 4));
  CHECK(signature(f, k.G) == std::make_pair(2, 1));

  auto dg = diagonalize_form(f, k.G);
  REQUIRE(dg.d.size() == 3);
  CHECK(dg.d[0] == 1);
  CHECK(is_rational_square((f.neg(f.mul(dg.d[1], dg.d[2])))));

  check_kash(f, c);
  auto sg = signature(f, k.G), st = signature(f, c.G_T);
  CHECK(sg.first - sg.second == st.first - st.second);
}

TEST_CASE("coinciding lines collapse everything") {
  FpField f(5);
  LagTuple<FpField> t;
  t.m = 1;
  t.n = 3;
  t.L = {line(f, 1, 2), line(f, 1, 2), line(f, 1, 2)};
  auto c = compute_core(f, t);
  auto k = kashiwara_compare(f, c);
  CHECK(is_zero_mat(f, k.G));
  CHECK(k.sub.dim == 2);
  CHECK(c.tdim == 0);
  check_kash(f, c);
  CHECK(witt_class(f, k.G).rank == 0);
}

TEST_CASE("random triples over prime fields") {
  std::mt19937_64 rng(51);
  for (unsigned p : {3u, 5u, 7u}) {
    FpField f(p);
    for (int it = 0; it < 25; ++it) {
      int m = 1 + static_cast<int>(rng() % 3);
      auto c = compute_core(f, mixed_tuple(f, m, 3, rng));
      check_kash(f, c);
      auto k = kashiwara_compare(f, c);
      CHECK(witt_equal(witt_class(f, k.G), witt_class(f, c.G_T)));
    }
  }
}

TEST_CASE("random triples over the rationals") {
  std::mt19937_64 rng(52);
  QField f;
  for (int it = 0; it < 8; ++it) {
    int m = 1 + static_cast<int>(rng() % 2);
    auto c = compute_core(f, mixed_tuple(f, m, 3, rng));
    check_kash(f, c);
    auto k = kashiwara_compare(f, c);
    auto sg = signature(f, k.G), st = signature(f, c.G_T);
    CHECK(sg.first - sg.second == st.first - st.second);
  }
}

TEST_CASE("only triples are accepted") {
  std::mt19937_64 rng(53);
  FpField f(3);
  auto c = compute_core(f, random_tuple(f, 1, 4, rng));
  CHECK_THROWS_AS(kashiwara_compare(f, c), std::invalid_argument);
}
