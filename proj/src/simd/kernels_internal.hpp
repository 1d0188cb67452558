#pragma once

#include "sdcodes/simd.hpp"

namespace sdcodes::simd::detail {

const KernelTable& scalar_table();

#if defined(SDCODES_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace sdcodes::simd::detail
