#include "maslov/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
#define MASLOV_X86 1
#include <immintrin.h>
#else
#define MASLOV_X86 0
#endif

#include <cassert>

namespace maslov::kern {

#if MASLOV_X86

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

namespace {

// x < 2p: x - p wraps above 2^16 - p when x < p, so the min is x mod p
inline __m256i reduce_lt2p(__m256i x, __m256i vp) {
  return _mm256_min_epu16(x, _mm256_sub_epi16(x, vp));
}

// t <= 62500: Barrett quotient is off by at most 2, remainder < 3p
inline __m256i mod_reduce(__m256i t, __m256i vp, __m256i vm) {
  __m256i q = _mm256_mulhi_epu16(t, vm);
  __m256i r = _mm256_sub_epi16(t, _mm256_mullo_epi16(q, vp));
  return reduce_lt2p(reduce_lt2p(r, vp), vp);
}

void tail_axpy(u16* dst, const u16* src, u16 c, std::size_t len, u16 p) {
  for (std::size_t i = 0; i < len; ++i) {
    dst[i] = static_cast<u16>((dst[i] + static_cast<std::uint32_t>(c) * src[i]) % p);
  }
}

}  // namespace

__attribute__((target("avx2"))) void axpy_avx2(u16* dst, const u16* src, u16 c,
                                               std::size_t len, u16 p, u16 bm) {
  __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
  __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
  __m256i vm = _mm256_set1_epi16(static_cast<short>(bm));
  std::size_t i = 0;
  for (; i + 16 <= len; i += 16) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i r = mod_reduce(_mm256_mullo_epi16(s, vc), vp, vm);
    __m256i out = reduce_lt2p(_mm256_add_epi16(r, d), vp);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), out);
  }
  tail_axpy(dst + i, src + i, c, len - i, p);
}

__attribute__((target("avx2"))) void scale_avx2(u16* row, u16 c, std::size_t len,
                                                u16 p, u16 bm) {
  __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
  __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
  __m256i vm = _mm256_set1_epi16(static_cast<short>(bm));
  std::size_t i = 0;
  for (; i + 16 <= len; i += 16) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    __m256i r = mod_reduce(_mm256_mullo_epi16(s, vc), vp, vm);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), r);
  }
  for (; i < len; ++i) {
    row[i] = static_cast<u16>((static_cast<std::uint32_t>(c) * row[i]) % p);
  }
}

#else

bool avx2_available() { return false; }

void axpy_avx2(u16*, const u16*, u16, std::size_t, u16, u16) { assert(false && "avx2 kernel on non-x86 build"); }
void scale_avx2(u16*, u16, std::size_t, u16, u16) { assert(false && "avx2 kernel on non-x86 build"); }

#endif

}  // namespace maslov::kern
