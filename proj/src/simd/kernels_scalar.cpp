#include <cassert>
#include <cstdint>

#include "kernels_internal.hpp"

namespace sdcodes::simd::detail {
namespace {

void axpy_scalar(std::span<Residue> dst, std::span<const Residue> src, Residue c, Residue p) {
  assert(dst.size() == src.size());
  if (c == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = (dst[i] + c * src[i]) % p;
  }
}

void scale_scalar(std::span<Residue> dst, Residue c, Residue p) {
  for (auto& v : dst) v = (c * v) % p;
}

Residue dot_scalar(std::span<const Residue> a, std::span<const Residue> b, Residue p) {
  assert(a.size() == b.size());
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += static_cast<std::uint64_t>(a[i]) * b[i];
  }
  return static_cast<Residue>(acc % p);
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::scalar, &axpy_scalar, &scale_scalar, &dot_scalar};
  return table;
}

}  // namespace sdcodes::simd::detail
