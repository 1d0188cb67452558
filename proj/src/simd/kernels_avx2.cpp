#include <immintrin.h>

#include <cassert>
#include <cstdint>

#include "kernels_internal.hpp"

namespace sdcodes::simd::detail {
namespace {

// Barrett reduction of eight lanes, each x < 2^30. With mu = floor(2^32 / p)
// the estimated quotient is off by at most one, so a single conditional
// subtraction finishes the job.
struct Reducer {
  __m256i p;
  __m256i p_minus_1;
  __m256i mu;

  explicit Reducer(Residue modulus)
      : p(_mm256_set1_epi32(static_cast<int>(modulus))),
        p_minus_1(_mm256_set1_epi32(static_cast<int>(modulus - 1))),
        mu(_mm256_set1_epi32(static_cast<int>((std::uint64_t{1} << 32) / modulus))) {}

  __m256i operator()(__m256i x) const {
    const __m256i even = _mm256_mul_epu32(x, mu);
    const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), mu);
    const __m256i q = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, p));
    const __m256i over = _mm256_cmpgt_epi32(r, p_minus_1);
    return _mm256_sub_epi32(r, _mm256_and_si256(over, p));
  }
};

inline __m256i load(const Residue* ptr) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ptr));
}

inline void store(Residue* ptr, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(ptr), v);
}

void axpy_avx2(std::span<Residue> dst, std::span<const Residue> src, Residue c, Residue p) {
  assert(dst.size() == src.size());
  if (c == 0) return;
  const Reducer reduce(p);
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_add_epi32(load(&dst[i]), _mm256_mullo_epi32(cv, load(&src[i])));
    store(&dst[i], reduce(x));
  }
  for (; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

void scale_avx2(std::span<Residue> dst, Residue c, Residue p) {
  const Reducer reduce(p);
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    store(&dst[i], reduce(_mm256_mullo_epi32(cv, load(&dst[i]))));
  }
  for (; i < n; ++i) dst[i] = (c * dst[i]) % p;
}

Residue dot_avx2(std::span<const Residue> a, std::span<const Residue> b, Residue p) {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i va = load(&a[i]);
    const __m256i vb = load(&b[i]);
    acc = _mm256_add_epi64(acc, _mm256_mul_epu32(va, vb));
    acc = _mm256_add_epi64(
        acc, _mm256_mul_epu32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] % p + lanes[1] % p + lanes[2] % p + lanes[3] % p;
  for (; i < n; ++i) total += static_cast<std::uint64_t>(a[i]) * b[i];
  return static_cast<Residue>(total % p);
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{Isa::avx2, &axpy_avx2, &scale_avx2, &dot_avx2};
  return table;
}

}  // namespace sdcodes::simd::detail
