#include <atomic>

#include "internal.hpp"

namespace locarec::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(LOCAREC_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

Isa best_isa() noexcept { return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar; }

std::atomic<Isa>& selected() noexcept {
  static std::atomic<Isa> isa{best_isa()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) noexcept {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  return std::nullopt;
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return cpu_has_avx2();
  }
  return false;
}

PearsonSums pearson_sums(Isa isa, std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) noexcept {
  const std::size_t len = a.size() < b.size() ? a.size() : b.size();
#if defined(LOCAREC_HAVE_AVX2_KERNEL)
  if (isa == Isa::Avx2 && cpu_has_avx2()) return detail::pearson_sums_avx2(a.data(), b.data(), len);
#else
  (void)isa;
#endif
  return pearson_sums_scalar(a.first(len), b.first(len));
}

PearsonSums pearson_sums(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) noexcept {
  return pearson_sums(selected().load(std::memory_order_relaxed), a, b);
}

Isa active_isa() noexcept { return selected().load(std::memory_order_relaxed); }

bool select_isa(Isa isa) noexcept {
  if (!isa_available(isa)) return false;
  selected().store(isa, std::memory_order_relaxed);
  return true;
}

}  // namespace locarec::kernels
