#pragma once
#include <cstddef>
#include <cstdint>

// Row kernels for mod-p arithmetic in 16-bit lanes, p an odd prime <= 251.
// Canonical residues only: a product of two residues is at most 250*250 = 62500,
// so it fits a u16 lane before reduction. Reduction is Barrett with
// bm = floor(2^16 / p), remainder < 3p, finished by conditional subtracts.
namespace maslov::kern {

using u16 = std::uint16_t;

struct Variant {
  const char* name;
  bool (*available)();
  // dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy)(u16* dst, const u16* src, u16 c, std::size_t len, u16 p, u16 bm);
  // row[i] = (c * row[i]) mod p
  void (*scale)(u16* row, u16 c, std::size_t len, u16 p, u16 bm);
};

u16 barrett_multiplier(u16 p);

// every compiled-in variant, runnable or not on this machine
const Variant* variants(std::size_t* count);

// runtime-selected variant; MASLOV_KERNEL=<name> forces one
const Variant& active();

}  // namespace maslov::kern
