#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "locarec/dataset.hpp"

namespace locarec {

/// Header line every dataset file starts with.
inline constexpr std::string_view kCsvHeader = "user_id,item_id,rating,user_country,item_description,item_country";

enum class RejectReason {
  WrongFieldCount,
  EmptyField,
  RatingNotInteger,
  RatingOutOfRange,
  UnterminatedQuote,
};

std::string_view to_string(RejectReason reason) noexcept;

struct RejectedRow {
  std::size_t line_number;  // 1-based physical line where the row starts
  RejectReason reason;

  friend bool operator==(const RejectedRow&, const RejectedRow&) = default;
};

/// rows_accepted + rejected_rows.size() + duplicates_replaced == rows_read.
struct IngestReport {
  std::size_t rows_read = 0;
  std::size_t rows_accepted = 0;
  std::size_t duplicates_replaced = 0;
  std::vector<RejectedRow> rejected_rows;
};

struct ParseResult {
  Dataset dataset;
  IngestReport report;
};

/// Parses the six-column dataset CSV. Malformed rows are collected in the
/// report; the parse fails only on a missing header (MissingHeader), when no
/// row survives (EmptyDataset), or on a country conflict.
ParseResult parse_csv(std::istream& in);
/// Throws IoFailure if the file cannot be opened.
ParseResult parse_csv(const std::filesystem::path& path);

/// Canonical export: header plus one row per record, ordered by (user, item).
void export_csv(const Dataset& dataset, std::ostream& out);
void export_csv(const Dataset& dataset, const std::filesystem::path& path);
std::string export_csv_string(const Dataset& dataset);

/// Splits one logical CSV record starting at `pos`; advances `pos` past the
/// record terminator and adds the physical lines consumed to `lines`.
/// Returns false if a quoted field is not terminated.
bool split_csv_record(std::string_view text, std::size_t& pos, std::vector<std::string>& fields,
                      std::size_t& lines);

// ---------------------------------------------------------------------------
// Synthetic data

/// Shape of a generated dataset. Defaults reproduce the reference dataset's
/// user distribution (120 users over five countries, 2296 ratings).
struct SyntheticSpec {
  std::vector<std::pair<Country, std::size_t>> country_user_counts{
      {Country("DK"), 41}, {Country("FR"), 26}, {Country("DE"), 6}, {Country("US"), 17}, {Country("UK"), 31}};
  std::size_t total_records = 2296;
  /// Probability that a same-country item gets its rating raised by one.
  double rating_bias = 0.7;
  std::uint64_t seed = 42;
  std::size_t item_count = 100;

  std::size_t user_count() const noexcept;
  /// Throws InfeasibleSpec or InvalidArgument.
  void validate() const;
};

/// Deterministic in spec (mt19937_64 stream plus the bounded/unit mappings in
/// synthetic.cpp, no std distributions).
Dataset generate_synthetic(const SyntheticSpec& spec);

/// Key-value spec file: `key = value` lines, `#` comments. Keys: countries
/// (`DK:41,FR:26,...`), total_records, rating_bias, seed, items. Missing keys
/// keep their defaults.
SyntheticSpec parse_spec_text(std::string_view text);
SyntheticSpec load_spec_file(const std::filesystem::path& path);
/// Parses `DK:41,FR:26`.
std::vector<std::pair<Country, std::size_t>> parse_country_counts(std::string_view text);

}  // namespace locarec
