#include "locarec/kernels.hpp"

namespace locarec::kernels {

PearsonSums pearson_sums_scalar(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) noexcept {
  PearsonSums s;
  const std::size_t len = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < len; ++i) {
    const std::int64_t x = a[i];
    const std::int64_t y = b[i];
    if (x == 0 || y == 0) continue;
    ++s.n;
    s.sum_a += x;
    s.sum_b += y;
    s.sum_aa += x * x;
    s.sum_bb += y * y;
    s.sum_ab += x * y;
  }
  return s;
}

}  // namespace locarec::kernels
