#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "locarec/dataset.hpp"

namespace locarec::testing {

inline RatingRecord rec(const std::string& user, const std::string& item, int rating, const std::string& user_country,
                        const std::string& item_country, const std::string& description = "") {
  return {UserId(user), ItemId(item), Rating(rating), Country(user_country), description, Country(item_country)};
}

/// Profiles given as item -> rating maps; all users and items in "XX".
inline Dataset two_user_dataset(const std::map<std::string, int>& a, const std::map<std::string, int>& b) {
  std::vector<RatingRecord> records;
  for (const auto& [item, r] : a) records.push_back(rec("a", item, r, "XX", "XX"));
  for (const auto& [item, r] : b) records.push_back(rec("b", item, r, "XX", "XX"));
  return Dataset::build(records);
}

/// Straight evaluation of the textbook formula: means over the co-rated set,
/// then sum of deviation products over the product of root sums of squared
/// deviations. Independent of the engine's integer-moment form.
struct OracleResult {
  long double value = 0;
  std::size_t co_rated = 0;
  bool degenerate = true;
};

inline OracleResult oracle_pearson(const std::map<std::string, long double>& a,
                                   const std::map<std::string, long double>& b) {
  std::vector<std::pair<long double, long double>> pairs;
  for (const auto& [item, ra] : a)
    if (auto it = b.find(item); it != b.end()) pairs.emplace_back(ra, it->second);
  OracleResult out;
  out.co_rated = pairs.size();
  if (pairs.size() < 2) return out;
  long double mean_a = 0, mean_b = 0;
  for (const auto& [x, y] : pairs) {
    mean_a += x;
    mean_b += y;
  }
  mean_a /= pairs.size();
  mean_b /= pairs.size();
  long double num = 0, den_a = 0, den_b = 0;
  for (const auto& [x, y] : pairs) {
    num += (x - mean_a) * (y - mean_b);
    den_a += (x - mean_a) * (x - mean_a);
    den_b += (y - mean_b) * (y - mean_b);
  }
  if (den_a == 0 || den_b == 0) return out;
  out.degenerate = false;
  out.value = num / (std::sqrt(den_a) * std::sqrt(den_b));
  return out;
}

inline std::map<std::string, long double> as_real(const std::map<std::string, int>& m) {
  std::map<std::string, long double> out;
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

/// Random pair of profiles with exactly `shared` co-rated items plus some
/// private items on each side.
inline std::pair<std::map<std::string, int>, std::map<std::string, int>> random_profile_pair(std::mt19937_64& rng,
                                                                                              int shared) {
  std::uniform_int_distribution<int> rating(1, 5);
  std::uniform_int_distribution<int> extra(0, 10);
  std::map<std::string, int> a, b;
  for (int k = 0; k < shared; ++k) {
    const std::string item = "s" + std::to_string(k);
    a[item] = rating(rng);
    b[item] = rating(rng);
  }
  const int ea = extra(rng), eb = extra(rng);
  for (int k = 0; k < ea; ++k) a["pa" + std::to_string(k)] = rating(rng);
  for (int k = 0; k < eb; ++k) b["pb" + std::to_string(k)] = rating(rng);
  return {a, b};
}

/// Small random dataset: `users` users over `countries` countries, `items`
/// items, each user rating a random subset.
inline std::vector<RatingRecord> random_records(std::uint64_t seed, int users, int items, int countries,
                                                double density = 0.3, bool tricky_text = false) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rating(1, 5);
  std::uniform_int_distribution<int> country(0, countries - 1);
  std::bernoulli_distribution rated(density);
  std::vector<std::string> item_country(items);
  for (auto& c : item_country) c = "C" + std::to_string(country(rng));
  std::vector<RatingRecord> out;
  for (int u = 0; u < users; ++u) {
    const std::string user = "user" + std::to_string(u);
    const std::string uc = "C" + std::to_string(country(rng));
    bool any = false;
    for (int i = 0; i < items; ++i) {
      if (!rated(rng) && (any || i + 1 < items)) continue;
      any = true;
      std::string desc = "item " + std::to_string(i);
      if (tricky_text && i % 3 == 0) desc = "says \"hi\", then\nleaves";
      if (tricky_text && i % 3 == 1) desc = "";
      out.push_back(rec(user, "item" + std::to_string(i), rating(rng), uc, item_country[i], desc));
    }
  }
  return out;
}

}  // namespace locarec::testing
