#pragma once

#include "locarec/kernels.hpp"

namespace locarec::kernels::detail {

#if defined(LOCAREC_HAVE_AVX2_KERNEL)
// Defined in pearson_avx2.cpp, built with -mavx2. Call only after a CPU check.
PearsonSums pearson_sums_avx2(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) noexcept;
#endif

}  // namespace locarec::kernels::detail
