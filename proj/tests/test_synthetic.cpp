#include <map>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "locarec/ingest.hpp"

namespace locarec {
namespace {

std::map<std::string, std::size_t> country_histogram(const Dataset& ds) {
  std::map<std::string, std::size_t> h;
  for (const auto& u : ds.users()) ++h[u.country.str()];
  return h;
}

// The default histogram sums to 121 users.
TEST(Synthetic, DefaultSpecMatchesCountryHistogram) {
  const auto ds = generate_synthetic(SyntheticSpec{});
  EXPECT_EQ(ds.user_count(), 121u);
  EXPECT_EQ(ds.record_count(), 2296u);
  EXPECT_EQ(ds.countries().size(), 5u);
  const std::map<std::string, std::size_t> expected{{"DK", 41}, {"FR", 26}, {"DE", 6}, {"US", 17}, {"UK", 31}};
  EXPECT_EQ(country_histogram(ds), expected);
  for (const auto& r : ds.records()) {
    EXPECT_GE(r.rating.value(), 1);
    EXPECT_LE(r.rating.value(), 5);
  }
}

TEST(Synthetic, ProfileSizesVary) {
  const auto ds = generate_synthetic(SyntheticSpec{});
  std::set<std::size_t> sizes;
  for (const auto& u : ds.users()) {
    EXPECT_GE(u.ratings.size(), 1u);
    sizes.insert(u.ratings.size());
  }
  EXPECT_GT(sizes.size(), 5u);
}

TEST(Synthetic, ItemCountriesComeFromVocabulary) {
  const auto ds = generate_synthetic(SyntheticSpec{});
  const std::set<std::string> vocab{"DK", "FR", "DE", "US", "UK"};
  std::set<std::string> seen;
  for (const auto& item : ds.items()) {
    EXPECT_TRUE(vocab.count(item.country.str())) << item.country.str();
    seen.insert(item.country.str());
  }
  EXPECT_EQ(seen, vocab);
}

// 120 users and 2296 ratings survive an export/parse cycle unchanged.
TEST(Synthetic, ReferenceSizedFileParses) {
  SyntheticSpec spec;
  spec.country_user_counts = {{Country("DK"), 41}, {Country("FR"), 26}, {Country("DE"), 6},
                              {Country("US"), 17}, {Country("UK"), 30}};
  const auto text = export_csv_string(generate_synthetic(spec));
  std::istringstream in(text);
  const auto result = parse_csv(in);
  EXPECT_EQ(result.report.rows_read, 2296u);
  EXPECT_EQ(result.report.rows_accepted, 2296u);
  EXPECT_EQ(result.dataset.user_count(), 120u);
  EXPECT_EQ(result.dataset.countries().size(), 5u);
}

TEST(Synthetic, MinimalSpec) {
  SyntheticSpec spec;
  spec.country_user_counts = {{Country("DK"), 1}};
  spec.total_records = 1;
  const auto ds = generate_synthetic(spec);
  EXPECT_EQ(ds.user_count(), 1u);
  EXPECT_EQ(ds.record_count(), 1u);
}

TEST(Synthetic, SameSeedGivesByteIdenticalExport) {
  const auto a = export_csv_string(generate_synthetic(SyntheticSpec{}));
  const auto b = export_csv_string(generate_synthetic(SyntheticSpec{}));
  EXPECT_EQ(a, b);
  SyntheticSpec other;
  other.seed = 43;
  EXPECT_NE(a, export_csv_string(generate_synthetic(other)));
}

TEST(Synthetic, DefaultExportHas2297Lines) {
  const auto text = export_csv_string(generate_synthetic(SyntheticSpec{}));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2297);
}

TEST(Synthetic, InfeasibleAndInvalidSpecs) {
  auto code_of = [](const SyntheticSpec& spec) {
    try {
      generate_synthetic(spec);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ConfigMismatch;  // sentinel: no error
  };
  SyntheticSpec spec;
  spec.total_records = 119;
  EXPECT_EQ(code_of(spec), ErrorCode::InfeasibleSpec);
  spec = {};
  spec.item_count = 10;  // 120 users x 10 items < 2296
  EXPECT_EQ(code_of(spec), ErrorCode::InfeasibleSpec);
  spec = {};
  spec.rating_bias = 1.5;
  EXPECT_EQ(code_of(spec), ErrorCode::InvalidArgument);
  spec = {};
  spec.country_user_counts = {{Country("DK"), 0}};
  EXPECT_EQ(code_of(spec), ErrorCode::InvalidArgument);
  spec = {};
  spec.country_user_counts = {{Country("DK"), 2}, {Country("DK"), 3}};
  EXPECT_EQ(code_of(spec), ErrorCode::InvalidArgument);
}

TEST(Synthetic, FullCatalogIsFeasible) {
  SyntheticSpec spec;
  spec.country_user_counts = {{Country("A"), 3}, {Country("B"), 2}};
  spec.item_count = 7;
  spec.total_records = 35;
  const auto ds = generate_synthetic(spec);
  EXPECT_EQ(ds.record_count(), 35u);
  for (const auto& u : ds.users()) EXPECT_EQ(u.ratings.size(), 7u);
}

// With full bias every same-country rating is at least 2.
TEST(Synthetic, RatingBiasRaisesSameCountryRatings) {
  SyntheticSpec spec;
  spec.rating_bias = 1.0;
  const auto ds = generate_synthetic(spec);
  double same = 0, other = 0;
  std::size_t n_same = 0, n_other = 0;
  for (const auto& r : ds.records()) {
    if (r.user_country == r.item_country) {
      EXPECT_GE(r.rating.value(), 2);
      same += r.rating.value();
      ++n_same;
    } else {
      other += r.rating.value();
      ++n_other;
    }
  }
  EXPECT_GT(same / n_same, other / n_other + 0.5);
}

TEST(SpecText, ParsesAllKeys) {
  const auto spec = parse_spec_text(
      "# comment\n"
      "countries = A:3, B:4\n"
      "total_records=20\n"
      "rating_bias = 0.25  # trailing\n"
      "seed = 18446744073709551615\n"
      "items = 12\n");
  ASSERT_EQ(spec.country_user_counts.size(), 2u);
  EXPECT_EQ(spec.country_user_counts[1].first, Country("B"));
  EXPECT_EQ(spec.country_user_counts[1].second, 4u);
  EXPECT_EQ(spec.total_records, 20u);
  EXPECT_DOUBLE_EQ(spec.rating_bias, 0.25);
  EXPECT_EQ(spec.seed, 18446744073709551615ull);
  EXPECT_EQ(spec.item_count, 12u);
}

TEST(SpecText, MissingKeysKeepDefaults) {
  const auto spec = parse_spec_text("seed = 7\n");
  EXPECT_EQ(spec.seed, 7u);
  EXPECT_EQ(spec.total_records, 2296u);
  EXPECT_EQ(spec.user_count(), 121u);
}

TEST(SpecText, Errors) {
  EXPECT_THROW(parse_spec_text("colour = red\n"), Error);
  EXPECT_THROW(parse_spec_text("seed\n"), Error);
  EXPECT_THROW(parse_spec_text("seed = -3\n"), Error);
  EXPECT_THROW(parse_spec_text("countries = DK\n"), Error);
  EXPECT_THROW(parse_spec_text("total_records = 12x\n"), Error);
}

}  // namespace
}  // namespace locarec
