#pragma once

// Bit-level kernels with a scalar reference and vector variants picked at
// runtime. Every variant must produce output identical to the scalar one.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace hcube::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

/// True when this build contains the variant and the CPU can run it.
bool isa_available(Isa isa);

/// Best available variant, unless overridden by set_isa.
Isa active_isa();

/// Forces a variant; throws std::invalid_argument if it is unavailable.
void set_isa(Isa isa);

/// dst ^= src, word by word. Spans must have equal length.
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);

/// out[j] = ((vertices[j] & monomial) == monomial).
void subset_row(std::uint64_t monomial, std::span<const std::uint64_t> vertices,
                std::span<std::uint8_t> out);

namespace scalar {
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
void subset_row(std::uint64_t monomial, const std::uint64_t* vertices,
                std::uint8_t* out, std::size_t n);
}  // namespace scalar

namespace avx2 {
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
void subset_row(std::uint64_t monomial, const std::uint64_t* vertices,
                std::uint8_t* out, std::size_t n);
}  // namespace avx2

namespace neon {
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
void subset_row(std::uint64_t monomial, const std::uint64_t* vertices,
                std::uint8_t* out, std::size_t n);
}  // namespace neon

}  // namespace hcube::simd
