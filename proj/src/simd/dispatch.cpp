#include <atomic>
#include <stdexcept>
#include <string>

#include "hcube/simd.hpp"

namespace hcube::simd {
namespace {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(HCUBE_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("bmi2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(HCUBE_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detect() {
  if (cpu_has(Isa::avx2)) return Isa::avx2;
  if (cpu_has(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) { return cpu_has(isa); }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!cpu_has(isa))
    throw std::invalid_argument("kernel variant '" + std::string(isa_name(isa)) +
                                "' is not available");
  current().store(isa, std::memory_order_relaxed);
}

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  if (dst.size() != src.size()) throw std::invalid_argument("xor_words: length mismatch");
  switch (active_isa()) {
#if defined(HCUBE_HAVE_AVX2)
    case Isa::avx2:
      return avx2::xor_words(dst.data(), src.data(), dst.size());
#endif
#if defined(HCUBE_HAVE_NEON)
    case Isa::neon:
      return neon::xor_words(dst.data(), src.data(), dst.size());
#endif
    default:
      return scalar::xor_words(dst.data(), src.data(), dst.size());
  }
}

void subset_row(std::uint64_t monomial, std::span<const std::uint64_t> vertices,
                std::span<std::uint8_t> out) {
  if (out.size() != vertices.size()) throw std::invalid_argument("subset_row: length mismatch");
  switch (active_isa()) {
#if defined(HCUBE_HAVE_AVX2)
    case Isa::avx2:
      return avx2::subset_row(monomial, vertices.data(), out.data(), out.size());
#endif
#if defined(HCUBE_HAVE_NEON)
    case Isa::neon:
      return neon::subset_row(monomial, vertices.data(), out.data(), out.size());
#endif
    default:
      return scalar::subset_row(monomial, vertices.data(), out.data(), out.size());
  }
}

}  // namespace hcube::simd
