#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "maslov/fp.hpp"
#include "maslov/rat.hpp"
#include "maslov/symplectic.hpp"

using namespace maslov;

namespace {

template <class F>
void transvections_are_symplectic(const F& f, std::mt19937_64& rng) {
  for (int m = 1; m <= 3; ++m) {
    auto J = symplectic_J(f, m);
    for (int it = 0; it < 20; ++it) {
      auto g = random_symplectic(f, m, rng);
      // g^T J g = J
      auto JT = mul(f, transpose(g), mul(f, J, g));
      CHECK(mat_eq(f, JT, J));
    }
  }
}

template <class F>
void random_lagrangians_are_lagrangian(const F& f, std::mt19937_64& rng) {
  for (int m = 1; m <= 3; ++m) {
    auto J = symplectic_J(f, m);
    for (int it = 0; it < 20; ++it) {
      auto L = random_lagrangian(f, m, rng);
      CHECK(L.dim() == m);
      CHECK(is_lagrangian(f, J, L));
    }
  }
}

}  // namespace

TEST_CASE("J is antisymmetric and squares to -1") {
  FpField f(7);
  auto J = symplectic_J(f, 2);
  CHECK(mat_eq(f, transpose(J), neg(f, J)));
  CHECK(mat_eq(f, mul(f, J, J), neg(f, identity(f, 4))));
}

TEST_CASE("transvections generate symplectic maps") {
  std::mt19937_64 rng(7);
  transvections_are_symplectic(FpField(3), rng);
  transvections_are_symplectic(FpField(11), rng);
  transvections_are_symplectic(QField(), rng);
}

TEST_CASE("random Lagrangians are Lagrangian") {
  std::mt19937_64 rng(8);
  random_lagrangians_are_lagrangian(FpField(3), rng);
  random_lagrangians_are_lagrangian(FpField(5), rng);
  random_lagrangians_are_lagrangian(QField(), rng);
}

TEST_CASE("random Lagrangians spread over the orbit") {
  // over F_3, m=1 there are exactly p+1 = 4 Lagrangian lines; all show up
  FpField f(3);
  std::mt19937_64 rng(9);
  std::set<std::string> seen;
  for (int it = 0; it < 200; ++it) {
    auto L = random_lagrangian(f, 1, rng);
    std::string key;
    for (const auto& x : L.rows.a) key += static_cast<char>('0' + x);
    seen.insert(key);
  }
  CHECK(seen.size() == 4);
}

TEST_CASE("common core tuples share the core") {
  std::mt19937_64 rng(10);
  FpField f(5);
  auto J = symplectic_J(f, 3);
  for (int it = 0; it < 10; ++it) {
    int c = 1 + static_cast<int>(rng() % 2);
    auto t = common_core_tuple(f, 3, 4, c, rng);
    auto meet = t.L[0];
    for (int i = 1; i < t.n; ++i) meet = intersect(f, meet, t.L[static_cast<std::size_t>(i)]);
    CHECK(meet.dim() >= c);
    for (const auto& L : t.L) CHECK(is_lagrangian(f, J, L));
  }
}

TEST_CASE("rotation and reversal reindex the tuple") {
  QField f;
  std::mt19937_64 rng(11);
  auto t = random_tuple(f, 1, 4, rng);
  auto r = rotate_tuple(t, 1);
  CHECK(r.L[0].equals(f, t.L[1]));
  CHECK(r.L[3].equals(f, t.L[0]));
  auto v = reverse_tuple(t);
  CHECK(v.L[0].equals(f, t.L[3]));
  CHECK(v.L[3].equals(f, t.L[0]));
}
