#include "maslov/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#if defined(__ARM_NEON)
#include <arm_neon.h>
#endif

namespace maslov::kern {

u16 barrett_multiplier(u16 p) { return static_cast<u16>(65536u / p); }

namespace {

void axpy_scalar(u16* dst, const u16* src, u16 c, std::size_t len, u16 p, u16) {
  for (std::size_t i = 0; i < len; ++i) {
    dst[i] = static_cast<u16>((dst[i] + static_cast<std::uint32_t>(c) * src[i]) % p);
  }
}

void scale_scalar(u16* row, u16 c, std::size_t len, u16 p, u16) {
  for (std::size_t i = 0; i < len; ++i) {
    row[i] = static_cast<u16>((static_cast<std::uint32_t>(c) * row[i]) % p);
  }
}

bool always() { return true; }

#if defined(__ARM_NEON)
// x < 2p: subtract wraps below p, min picks the reduced lane
inline uint16x8_t reduce_lt2p(uint16x8_t x, uint16x8_t vp) {
  return vminq_u16(x, vsubq_u16(x, vp));
}

inline uint16x8_t mulhi_u16(uint16x8_t a, uint16x8_t b) {
  uint32x4_t lo = vmull_u16(vget_low_u16(a), vget_low_u16(b));
  uint32x4_t hi = vmull_u16(vget_high_u16(a), vget_high_u16(b));
  return vcombine_u16(vshrn_n_u32(lo, 16), vshrn_n_u32(hi, 16));
}

inline uint16x8_t mod_reduce(uint16x8_t t, uint16x8_t vp, uint16x8_t vm) {
  uint16x8_t q = mulhi_u16(t, vm);
  uint16x8_t r = vsubq_u16(t, vmulq_u16(q, vp));  // r < 3p
  return reduce_lt2p(reduce_lt2p(r, vp), vp);
}

void axpy_neon(u16* dst, const u16* src, u16 c, std::size_t len, u16 p, u16 bm) {
  uint16x8_t vc = vdupq_n_u16(c), vp = vdupq_n_u16(p), vm = vdupq_n_u16(bm);
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    uint16x8_t s = vld1q_u16(src + i);
    uint16x8_t d = vld1q_u16(dst + i);
    uint16x8_t r = mod_reduce(vmulq_u16(s, vc), vp, vm);
    vst1q_u16(dst + i, reduce_lt2p(vaddq_u16(r, d), vp));
  }
  axpy_scalar(dst + i, src + i, c, len - i, p, bm);
}

void scale_neon(u16* row, u16 c, std::size_t len, u16 p, u16 bm) {
  uint16x8_t vc = vdupq_n_u16(c), vp = vdupq_n_u16(p), vm = vdupq_n_u16(bm);
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    uint16x8_t r = mod_reduce(vmulq_u16(vld1q_u16(row + i), vc), vp, vm);
    vst1q_u16(row + i, r);
  }
  scale_scalar(row + i, c, len - i, p, bm);
}
#endif

}  // namespace

// defined in kernels_avx2.cpp (stubbed out on non-x86 builds)
bool avx2_available();
void axpy_avx2(u16*, const u16*, u16, std::size_t, u16, u16);
void scale_avx2(u16*, u16, std::size_t, u16, u16);

namespace {

const Variant kVariants[] = {
    {"scalar", always, axpy_scalar, scale_scalar},
    {"avx2", avx2_available, axpy_avx2, scale_avx2},
#if defined(__ARM_NEON)
    {"neon", always, axpy_neon, scale_neon},
#endif
};

const Variant* select() {
  if (const char* name = std::getenv("MASLOV_KERNEL")) {
    for (const Variant& v : kVariants) {
      if (std::strcmp(v.name, name) == 0) {
        if (!v.available()) throw std::runtime_error(std::string("kernel variant not runnable here: ") + name);
        return &v;
      }
    }
    throw std::runtime_error(std::string("unknown kernel variant: ") + name);
  }
  const Variant* best = &kVariants[0];
  for (const Variant& v : kVariants) {
    if (v.available()) best = &v;  // later entries are faster
  }
  return best;
}

}  // namespace

const Variant* variants(std::size_t* count) {
  *count = sizeof(kVariants) / sizeof(kVariants[0]);
  return kVariants;
}

const Variant& active() {
  static const Variant* chosen = select();
  return *chosen;
}

}  // namespace maslov::kern
