#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "locarec/kernels.hpp"

namespace locarec::kernels {
namespace {

std::vector<std::uint8_t> random_row(std::mt19937_64& rng, std::size_t len, double density, int max_value) {
  std::bernoulli_distribution rated(density);
  std::uniform_int_distribution<int> value(1, max_value);
  std::vector<std::uint8_t> row(len, 0);
  for (auto& r : row)
    if (rated(rng)) r = static_cast<std::uint8_t>(value(rng));
  return row;
}

PearsonSums naive(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
  PearsonSums s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i] || !b[i]) continue;
    s.n += 1;
    s.sum_a += a[i];
    s.sum_b += b[i];
    s.sum_aa += a[i] * a[i];
    s.sum_bb += b[i] * b[i];
    s.sum_ab += a[i] * b[i];
  }
  return s;
}

TEST(PearsonSums, ScalarOnTinyRows) {
  const std::vector<std::uint8_t> a{4, 0, 5, 3};
  const std::vector<std::uint8_t> b{2, 1, 3, 1};
  EXPECT_EQ(pearson_sums_scalar(a, b), (PearsonSums{3, 12, 6, 50, 14, 26}));
  EXPECT_EQ(pearson_sums_scalar({}, {}), PearsonSums{});
}

TEST(PearsonSums, ScalarMatchesNaive) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = rng() % 300;
    const auto a = random_row(rng, len, 0.4, 5);
    const auto b = random_row(rng, len, 0.4, 5);
    EXPECT_EQ(pearson_sums_scalar(a, b), naive(a, b));
  }
}

class KernelEquivalence : public ::testing::TestWithParam<Isa> {};

TEST_P(KernelEquivalence, MatchesScalarExactly) {
  const Isa isa = GetParam();
  if (!isa_available(isa)) GTEST_SKIP() << to_string(isa) << " not available on this CPU";
  std::mt19937_64 rng(2024);
  // Lengths cover empty, sub-vector, exact multiples of 32 and ragged tails.
  for (std::size_t len : {0, 1, 5, 31, 32, 33, 63, 64, 65, 100, 255, 256, 257, 1000, 4099}) {
    for (double density : {0.0, 0.1, 0.5, 1.0}) {
      for (int max_value : {5, 255}) {
        const auto a = random_row(rng, len, density, max_value);
        const auto b = random_row(rng, len, density, max_value);
        ASSERT_EQ(pearson_sums(isa, a, b), pearson_sums_scalar(a, b))
            << "len=" << len << " density=" << density << " max=" << max_value;
      }
    }
  }
}

// Enough 32-byte blocks to force the 32-bit accumulators to be widened.
TEST_P(KernelEquivalence, LongSaturatedRowsDoNotOverflow) {
  const Isa isa = GetParam();
  if (!isa_available(isa)) GTEST_SKIP();
  const std::size_t len = 32 * 10000 + 7;
  const std::vector<std::uint8_t> a(len, 255), b(len, 255);
  const auto s = pearson_sums(isa, a, b);
  EXPECT_EQ(s.n, static_cast<std::int64_t>(len));
  EXPECT_EQ(s.sum_ab, static_cast<std::int64_t>(len) * 255 * 255);
  EXPECT_EQ(s, pearson_sums_scalar(a, b));
}

TEST_P(KernelEquivalence, UnequalLengthsUseShorter) {
  const Isa isa = GetParam();
  const std::vector<std::uint8_t> a(70, 3), b(40, 2);
  EXPECT_EQ(pearson_sums(isa, a, b).n, 40);
}

INSTANTIATE_TEST_SUITE_P(AllIsas, KernelEquivalence, ::testing::Values(Isa::Scalar, Isa::Avx2),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Dispatch, SelectAndRestore) {
  const Isa before = active_isa();
  EXPECT_TRUE(isa_available(Isa::Scalar));
  EXPECT_TRUE(select_isa(Isa::Scalar));
  EXPECT_EQ(active_isa(), Isa::Scalar);
  if (isa_available(Isa::Avx2)) {
    EXPECT_TRUE(select_isa(Isa::Avx2));
    EXPECT_EQ(active_isa(), Isa::Avx2);
  } else {
    EXPECT_FALSE(select_isa(Isa::Avx2));
  }
  select_isa(before);
}

TEST(Dispatch, ParseNames) {
  EXPECT_EQ(parse_isa("scalar"), Isa::Scalar);
  EXPECT_EQ(parse_isa("avx2"), Isa::Avx2);
  EXPECT_FALSE(parse_isa("sse9"));
}

}  // namespace
}  // namespace locarec::kernels
