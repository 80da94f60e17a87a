#include <arm_neon.h>

#include "hcube/simd.hpp"

namespace hcube::simd::neon {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < n; ++i) dst[i] ^= src[i];
}

void subset_row(std::uint64_t monomial, const std::uint64_t* vertices, std::uint8_t* out,
                std::size_t n) {
  const uint64x2_t m = vdupq_n_u64(monomial);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const uint64x2_t eq = vceqq_u64(vandq_u64(vld1q_u64(vertices + j), m), m);
    out[j] = static_cast<std::uint8_t>(vgetq_lane_u64(eq, 0) & 1U);
    out[j + 1] = static_cast<std::uint8_t>(vgetq_lane_u64(eq, 1) & 1U);
  }
  for (; j < n; ++j) out[j] = static_cast<std::uint8_t>((vertices[j] & monomial) == monomial);
}

}  // namespace hcube::simd::neon
