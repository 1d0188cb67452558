#pragma once

// Vector kernels over the prime field F_p.
//
// Every kernel has a portable scalar reference and, where the target supports
// it, an AVX2 variant. The variant is picked once at first use from the CPU
// feature flags; tests can ask for a specific table to check the two agree.
//
// All residues are stored as uint32_t in [0, p) and p must be below
// kMaxKernelPrime so that p - 1 + (p - 1)^2 stays below 2^31.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace sdcodes::simd {

using Residue = std::uint32_t;

inline constexpr Residue kMaxKernelPrime = 1u << 15;

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  // dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy)(std::span<Residue> dst, std::span<const Residue> src, Residue c, Residue p);
  // dst[i] = (c * dst[i]) mod p
  void (*scale)(std::span<Residue> dst, Residue c, Residue p);
  // sum_i a[i] * b[i] mod p
  Residue (*dot)(std::span<const Residue> a, std::span<const Residue> b, Residue p);
};

const KernelTable& scalar_kernels();

// Returns nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_kernels();

// The table used by the rest of the library.
const KernelTable& active();

std::string_view isa_name(Isa isa);

inline void axpy(std::span<Residue> dst, std::span<const Residue> src, Residue c, Residue p) {
  active().axpy(dst, src, c, p);
}

inline void scale(std::span<Residue> dst, Residue c, Residue p) { active().scale(dst, c, p); }

inline Residue dot(std::span<const Residue> a, std::span<const Residue> b, Residue p) {
  return active().dot(a, b, p);
}

}  // namespace sdcodes::simd
