#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numeric>
#include <random>
#include <set>

#include <fmt/format.h>

#include "locarec/ingest.hpp"

namespace locarec {

namespace {

// std::mt19937_64's output sequence is fixed by the standard; the std
// distributions are not, so the mappings below are spelled out.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n), by rejection on the raw 64-bit output.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (true) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(ErrorCode::InvalidArgument, fmt::format("bad value '{}' for {}", text, key));
  return value;
}

}  // namespace

std::size_t SyntheticSpec::user_count() const noexcept {
  std::size_t n = 0;
  for (const auto& [country, count] : country_user_counts) n += count;
  return n;
}

void SyntheticSpec::validate() const {
  if (country_user_counts.empty()) throw Error(ErrorCode::InvalidArgument, "synthetic spec has no countries");
  std::set<Country> seen;
  for (const auto& [country, count] : country_user_counts) {
    if (count == 0) throw Error(ErrorCode::InvalidArgument, "country '" + country.str() + "' has zero users");
    if (!seen.insert(country).second)
      throw Error(ErrorCode::InvalidArgument, "country '" + country.str() + "' listed twice");
  }
  if (!(rating_bias >= 0.0 && rating_bias <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "rating_bias must lie in [0, 1]");
  if (item_count == 0) throw Error(ErrorCode::InvalidArgument, "item count must be positive");
  const std::size_t users = user_count();
  if (total_records < users)
    throw Error(ErrorCode::InfeasibleSpec,
                fmt::format("total_records {} is below the user count {}", total_records, users));
  if (total_records > users * item_count)
    throw Error(ErrorCode::InfeasibleSpec, fmt::format("total_records {} exceeds users x items = {}",
                                                       total_records, users * item_count));
}

Dataset generate_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  PortableRng rng(spec.seed);

  std::vector<Country> vocabulary;
  for (const auto& entry : spec.country_user_counts) vocabulary.push_back(entry.first);

  const int item_width = static_cast<int>(std::to_string(spec.item_count).size());
  std::vector<ItemInfo> items;
  items.reserve(spec.item_count);
  for (std::size_t i = 0; i < spec.item_count; ++i) {
    const auto& country = vocabulary[rng.bounded(vocabulary.size())];
    items.push_back({ItemId(fmt::format("m{:0{}}", i + 1, item_width)), country,
                     fmt::format("Synthetic movie {}", i + 1)});
  }

  const std::size_t users = spec.user_count();
  const int user_width = static_cast<int>(std::to_string(users).size());
  std::vector<std::pair<UserId, Country>> people;
  people.reserve(users);
  for (const auto& [country, count] : spec.country_user_counts)
    for (std::size_t k = 0; k < count; ++k)
      people.emplace_back(UserId(fmt::format("u{:0{}}", people.size() + 1, user_width)), country);

  // Everyone rates at least one item; the remainder is spread by per-user
  // activity weights so profile sizes vary.
  std::vector<double> activity(users);
  for (auto& w : activity) w = 0.25 + 1.75 * rng.unit();
  std::vector<std::size_t> per_user(users, 1);
  for (std::size_t extra = spec.total_records - users; extra > 0; --extra) {
    double total = 0.0;
    for (std::size_t u = 0; u < users; ++u)
      if (per_user[u] < spec.item_count) total += activity[u];
    double pick = rng.unit() * total;
    std::size_t chosen = users;
    for (std::size_t u = 0; u < users; ++u) {
      if (per_user[u] >= spec.item_count) continue;
      chosen = u;
      if (pick < activity[u]) break;
      pick -= activity[u];
    }
    ++per_user[chosen];
  }

  std::vector<RatingRecord> records;
  records.reserve(spec.total_records);
  std::vector<std::size_t> pool(spec.item_count);
  for (std::size_t u = 0; u < users; ++u) {
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t k = 0; k < per_user[u]; ++k) {
      const std::size_t j = k + rng.bounded(spec.item_count - k);
      std::swap(pool[k], pool[j]);
      const auto& item = items[pool[k]];
      int rating = 1 + static_cast<int>(rng.bounded(5));
      const bool bump = rng.unit() < spec.rating_bias;
      if (bump && item.country == people[u].second) rating = std::min(rating + 1, Rating::kMax);
      records.push_back({people[u].first, item.id, Rating(rating), people[u].second, item.description, item.country});
    }
  }
  return Dataset::build(records);
}

std::vector<std::pair<Country, std::size_t>> parse_country_counts(std::string_view text) {
  std::vector<std::pair<Country, std::size_t>> out;
  while (!trim(text).empty()) {
    const auto comma = text.find(',');
    const auto entry = trim(text.substr(0, comma));
    const auto colon = entry.find(':');
    if (colon == std::string_view::npos || trim(entry.substr(0, colon)).empty())
      throw Error(ErrorCode::InvalidArgument, fmt::format("bad country entry '{}', expected CODE:COUNT", entry));
    out.emplace_back(Country(std::string(trim(entry.substr(0, colon)))),
                     parse_number<std::size_t>("countries", entry.substr(colon + 1)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty country list");
  return out;
}

SyntheticSpec parse_spec_text(std::string_view text) {
  SyntheticSpec spec;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::InvalidArgument, fmt::format("spec line {}: expected key = value", line_no));
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "countries") {
      spec.country_user_counts = parse_country_counts(value);
    } else if (key == "total_records") {
      spec.total_records = parse_number<std::size_t>(key, value);
    } else if (key == "rating_bias") {
      spec.rating_bias = parse_number<double>(key, value);
    } else if (key == "seed") {
      spec.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "items") {
      spec.item_count = parse_number<std::size_t>(key, value);
    } else {
      throw Error(ErrorCode::InvalidArgument, fmt::format("spec line {}: unknown key '{}'", line_no, key));
    }
  }
  return spec;
}

SyntheticSpec load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open '" + path.string() + "'");
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_spec_text(text);
}

}  // namespace locarec
