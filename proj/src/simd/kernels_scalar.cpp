#include "hcube/simd.hpp"

namespace hcube::simd::scalar {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void subset_row(std::uint64_t monomial, const std::uint64_t* vertices, std::uint8_t* out,
                std::size_t n) {
  for (std::size_t j = 0; j < n; ++j)
    out[j] = static_cast<std::uint8_t>((vertices[j] & monomial) == monomial);
}

}  // namespace hcube::simd::scalar
