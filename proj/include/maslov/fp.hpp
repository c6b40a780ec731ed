#pragma once
#include <bitset>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "maslov/kernels.hpp"

namespace maslov {

// F_p arithmetic, p an odd prime <= 251. Elements are canonical residues in
// u16 so row operations can run through the vector kernels.
struct FpField {
  using Elem = std::uint16_t;

  std::uint16_t p = 0;
  std::uint16_t bm = 0;  // Barrett multiplier for the kernels
  std::vector<Elem> inv_tab;
  std::bitset<256> square_tab;
  Elem nonsquare = 0;  // least nonsquare residue

  explicit FpField(unsigned prime) {
    if (prime < 3 || prime > 251 || prime % 2 == 0) throw std::invalid_argument("p must be an odd prime <= 251");
    for (unsigned d = 3; d * d <= prime; d += 2) {
      if (prime % d == 0) throw std::invalid_argument("p must be an odd prime <= 251");
    }
    p = static_cast<std::uint16_t>(prime);
    bm = kern::barrett_multiplier(p);
    inv_tab.assign(p, 0);
    for (std::uint32_t a = 1; a < p; ++a) {
      // Fermat: a^(p-2)
      std::uint32_t r = 1, b = a, e = p - 2u;
      while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
      }
      inv_tab[a] = static_cast<Elem>(r);
    }
    for (std::uint32_t a = 1; a < p; ++a) square_tab.set(a * a % p);
    for (Elem a = 2; a < p; ++a) {
      if (!square_tab.test(a)) { nonsquare = a; break; }
    }
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = std::uint32_t(a) + b;
    return static_cast<Elem>(s >= p ? s - p : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? Elem(a - b) : Elem(a + p - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : Elem(p - a); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint32_t(a) * b % p); }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of 0");
    return inv_tab[a];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem half() const { return inv(2); }

  Elem from_int(long long v) const {
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<Elem>(r);
  }

  bool is_square(Elem a) const { return a == 0 || square_tab.test(a); }

  void row_axpy(Elem* dst, const Elem* src, const Elem& c, std::size_t len) const {
    if (c == 0) return;
    kern::active().axpy(dst, src, c, len, p, bm);
  }
  void row_scale(Elem* row, const Elem& c, std::size_t len) const {
    kern::active().scale(row, c, len, p, bm);
  }
};

}  // namespace maslov
