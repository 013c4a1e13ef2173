#include "locarec/ingest.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

namespace locarec {

std::string_view to_string(RejectReason reason) noexcept {
  switch (reason) {
    case RejectReason::WrongFieldCount: return "WrongFieldCount";
    case RejectReason::EmptyField: return "EmptyField";
    case RejectReason::RatingNotInteger: return "RatingNotInteger";
    case RejectReason::RatingOutOfRange: return "RatingOutOfRange";
    case RejectReason::UnterminatedQuote: return "UnterminatedQuote";
  }
  return "Unknown";
}

namespace {

constexpr std::size_t kFieldCount = 6;

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool is_header(const std::vector<std::string>& fields) {
  static const std::vector<std::string_view> expected = [] {
    std::vector<std::string_view> cols;
    std::string_view h = kCsvHeader;
    while (true) {
      auto comma = h.find(',');
      cols.push_back(h.substr(0, comma));
      if (comma == std::string_view::npos) break;
      h.remove_prefix(comma + 1);
    }
    return cols;
  }();
  if (fields.size() != expected.size()) return false;
  for (std::size_t k = 0; k < fields.size(); ++k)
    if (trim(fields[k]) != expected[k]) return false;
  return true;
}

struct RowOutcome {
  std::optional<RatingRecord> record;
  RejectReason reason{};
};

RowOutcome validate_row(const std::vector<std::string>& f) {
  if (f.size() != kFieldCount) return {std::nullopt, RejectReason::WrongFieldCount};
  const auto user = trim(f[0]);
  const auto item = trim(f[1]);
  const auto rating = trim(f[2]);
  const auto user_country = trim(f[3]);
  const auto item_country = trim(f[5]);
  if (user.empty() || item.empty() || rating.empty() || user_country.empty() || item_country.empty())
    return {std::nullopt, RejectReason::EmptyField};

  for (char c : rating)
    if (c < '0' || c > '9') return {std::nullopt, RejectReason::RatingNotInteger};
  int value = 0;
  auto [ptr, ec] = std::from_chars(rating.data(), rating.data() + rating.size(), value);
  if (ec != std::errc{} || ptr != rating.data() + rating.size() || value < Rating::kMin || value > Rating::kMax)
    return {std::nullopt, RejectReason::RatingOutOfRange};

  return {RatingRecord{UserId(std::string(user)), ItemId(std::string(item)), Rating(value),
                       Country(std::string(user_country)), f[4], Country(std::string(item_country))},
          {}};
}

void write_field(std::ostream& out, std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    out << field;
    return;
  }
  out << '"';
  for (char c : field) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

bool split_csv_record(std::string_view text, std::size_t& pos, std::vector<std::string>& fields,
                      std::size_t& lines) {
  fields.clear();
  std::string field;
  bool ok = true;
  while (true) {
    field.clear();
    if (pos < text.size() && text[pos] == '"') {
      ++pos;
      bool closed = false;
      while (pos < text.size()) {
        const char c = text[pos++];
        if (c == '"') {
          if (pos < text.size() && text[pos] == '"') {
            field.push_back('"');
            ++pos;
          } else {
            closed = true;
            break;
          }
        } else {
          if (c == '\n') ++lines;
          field.push_back(c);
        }
      }
      if (!closed) ok = false;
    }
    // Unquoted text, or stray characters after a closing quote.
    while (pos < text.size() && text[pos] != ',' && text[pos] != '\n') field.push_back(text[pos++]);
    if (!field.empty() && field.back() == '\r' && (pos >= text.size() || text[pos] == '\n')) field.pop_back();
    fields.push_back(field);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size()) ++pos;  // '\n'
    ++lines;
    return ok;
  }
}

ParseResult parse_csv(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::size_t pos = 0;
  if (text.starts_with("\xEF\xBB\xBF")) pos = 3;

  std::vector<std::string> fields;
  std::size_t lines = 0;
  // Leading blank lines are tolerated before the header.
  bool have_header = false;
  while (pos < text.size()) {
    split_csv_record(text, pos, fields, lines);
    if (fields.size() == 1 && trim(fields[0]).empty()) continue;
    have_header = is_header(fields);
    break;
  }
  if (!have_header) throw Error(ErrorCode::MissingHeader, std::string("missing header: expected '") + std::string(kCsvHeader) + "'");

  IngestReport report;
  std::vector<RatingRecord> accepted;
  while (pos < text.size()) {
    const std::size_t line_number = lines + 1;
    const bool terminated = split_csv_record(text, pos, fields, lines);
    if (terminated && fields.size() == 1 && trim(fields[0]).empty()) continue;
    ++report.rows_read;
    if (!terminated) {
      report.rejected_rows.push_back({line_number, RejectReason::UnterminatedQuote});
      continue;
    }
    auto outcome = validate_row(fields);
    if (outcome.record) {
      accepted.push_back(std::move(*outcome.record));
    } else {
      report.rejected_rows.push_back({line_number, outcome.reason});
    }
  }
  if (accepted.empty()) throw Error(ErrorCode::EmptyDataset, "no valid rows in input");

  auto ds = Dataset::build(accepted);
  report.rows_accepted = ds.record_count();
  report.duplicates_replaced = ds.duplicates_replaced();
  return {std::move(ds), std::move(report)};
}

ParseResult parse_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open '" + path.string() + "'");
  return parse_csv(in);
}

void export_csv(const Dataset& dataset, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : dataset.records()) {
    write_field(out, r.user.str());
    out << ',';
    write_field(out, r.item.str());
    out << ',' << r.rating.value() << ',';
    write_field(out, r.user_country.str());
    out << ',';
    write_field(out, r.item_description);
    out << ',';
    write_field(out, r.item_country.str());
    out << '\n';
  }
}

void export_csv(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write '" + path.string() + "'");
  export_csv(dataset, out);
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write failed for '" + path.string() + "'");
}

std::string export_csv_string(const Dataset& dataset) {
  std::ostringstream out;
  export_csv(dataset, out);
  return std::move(out).str();
}

}  // namespace locarec
