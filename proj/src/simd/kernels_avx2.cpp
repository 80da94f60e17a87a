// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "hcube/simd.hpp"

namespace hcube::simd::avx2 {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const auto* s = reinterpret_cast<const __m256i*>(src + i);
    const __m256i a0 = _mm256_loadu_si256(d);
    const __m256i a1 = _mm256_loadu_si256(d + 1);
    _mm256_storeu_si256(d, _mm256_xor_si256(a0, _mm256_loadu_si256(s)));
    _mm256_storeu_si256(d + 1, _mm256_xor_si256(a1, _mm256_loadu_si256(s + 1)));
  }
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const auto* s = reinterpret_cast<const __m256i*>(src + i);
    _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

void subset_row(std::uint64_t monomial, const std::uint64_t* vertices, std::uint8_t* out,
                std::size_t n) {
  const __m256i m = _mm256_set1_epi64x(static_cast<long long>(monomial));
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    const __m256i v0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(vertices + j));
    const __m256i v1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(vertices + j + 4));
    const __m256i e0 = _mm256_cmpeq_epi64(_mm256_and_si256(v0, m), m);
    const __m256i e1 = _mm256_cmpeq_epi64(_mm256_and_si256(v1, m), m);
    const unsigned bits = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(e0))) |
                          (static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(e1))) << 4);
    // Spread 8 mask bits into 8 bytes of 0/1.
    const std::uint64_t spread = _pdep_u64(bits, 0x0101010101010101ULL);
    __builtin_memcpy(out + j, &spread, sizeof spread);
  }
  for (; j < n; ++j) out[j] = static_cast<std::uint8_t>((vertices[j] & monomial) == monomial);
}

}  // namespace hcube::simd::avx2
