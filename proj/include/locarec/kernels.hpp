#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace locarec::kernels {

/// Integer moments of two dense rating rows restricted to positions where
/// both are nonzero. All sums are exact, so every kernel returns the same
/// struct bit for bit.
struct PearsonSums {
  std::int64_t n = 0;
  std::int64_t sum_a = 0;
  std::int64_t sum_b = 0;
  std::int64_t sum_aa = 0;
  std::int64_t sum_bb = 0;
  std::int64_t sum_ab = 0;

  friend bool operator==(const PearsonSums&, const PearsonSums&) = default;
};

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name) noexcept;

/// Reference implementation.
PearsonSums pearson_sums_scalar(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) noexcept;

/// True if this build has the kernel and the CPU can run it.
bool isa_available(Isa isa) noexcept;

/// Runs the kernel for `isa`; falls back to scalar when unavailable.
PearsonSums pearson_sums(Isa isa, std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) noexcept;

/// Runs the currently selected kernel.
PearsonSums pearson_sums(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) noexcept;

/// Best available ISA unless overridden by select_isa().
Isa active_isa() noexcept;
/// Returns false (and changes nothing) if `isa` is unavailable.
bool select_isa(Isa isa) noexcept;

}  // namespace locarec::kernels
