#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "maslov/kernels.hpp"

using maslov::kern::u16;

namespace {

const std::uint16_t kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107,
                                 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167,
                                 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229,
                                 233, 239, 241, 251};

std::vector<u16> random_row(std::mt19937_64& rng, std::size_t len, u16 p) {
  std::vector<u16> v(len);
  for (auto& x : v) x = static_cast<u16>(rng() % p);
  return v;
}

}  // namespace

TEST_CASE("barrett multiplier bounds") {
  for (u16 p : kPrimes) {
    u16 bm = maslov::kern::barrett_multiplier(p);
    CHECK(bm == 65536u / p);
  }
}

TEST_CASE("every runnable variant matches the scalar reference") {
  std::size_t count = 0;
  const auto* vs = maslov::kern::variants(&count);
  REQUIRE(count >= 2);  // scalar plus at least one vector variant compiled in
  const auto& ref = vs[0];
  CHECK(std::string(ref.name) == "scalar");

  std::mt19937_64 rng(12345);
  int runnable = 0;
  for (std::size_t vi = 0; vi < count; ++vi) {
    const auto& v = vs[vi];
    if (!v.available()) continue;
    ++runnable;
    for (u16 p : kPrimes) {
      u16 bm = maslov::kern::barrett_multiplier(p);
      for (std::size_t len : {std::size_t(0), std::size_t(1), std::size_t(7), std::size_t(16),
                              std::size_t(17), std::size_t(33), std::size_t(64), std::size_t(67)}) {
        auto src = random_row(rng, len, p);
        auto d0 = random_row(rng, len, p);
        auto d1 = d0;
        for (u16 c : {u16(0), u16(1), u16(p - 1), static_cast<u16>(rng() % p)}) {
          auto a = d0, b = d1;
          ref.axpy(a.data(), src.data(), c, len, p, bm);
          v.axpy(b.data(), src.data(), c, len, p, bm);
          CHECK(a == b);
          auto s0 = src, s1 = src;
          ref.scale(s0.data(), c, len, p, bm);
          v.scale(s1.data(), c, len, p, bm);
          CHECK(s0 == s1);
        }
      }
    }
  }
  CHECK(runnable >= 1);
  MESSAGE("runnable variants: ", runnable, ", active: ", std::string(maslov::kern::active().name));
}

TEST_CASE("axpy computes (dst + c*src) mod p at extremes") {
  for (u16 p : {u16(3), u16(251)}) {
    u16 bm = maslov::kern::barrett_multiplier(p);
    std::vector<u16> src(32), dst(32);
    for (std::size_t i = 0; i < 32; ++i) {
      src[i] = static_cast<u16>(p - 1);
      dst[i] = static_cast<u16>(p - 1);
    }
    auto expect = dst;
    for (auto& x : expect) x = static_cast<u16>((x + static_cast<std::uint32_t>(p - 1) * (p - 1)) % p);
    maslov::kern::active().axpy(dst.data(), src.data(), static_cast<u16>(p - 1), 32, p, bm);
    CHECK(dst == expect);
  }
}
