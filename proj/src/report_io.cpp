#include "locarec/report_io.hpp"

#include <ostream>

#include <fmt/format.h>

namespace locarec {

namespace {

using nlohmann::json;

json optional_count(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

void write_stanza(std::ostream& out, const json& stanza) {
  if (!stanza.is_null()) out << "# run: " << stanza.dump() << '\n';
}

void write_csv_field(std::ostream& out, std::string_view field) {
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

std::string format_double(double v) { return fmt::format("{}", v); }

json to_json(const IngestReport& report) {
  json rejected = json::array();
  for (const auto& r : report.rejected_rows) rejected.push_back({{"line", r.line_number}, {"reason", to_string(r.reason)}});
  return {{"rows_read", report.rows_read},
          {"rows_accepted", report.rows_accepted},
          {"duplicates_replaced", report.duplicates_replaced},
          {"rejected_rows", rejected}};
}

json to_json(const PeeringConfig& c) {
  return {{"alpha", c.alpha}, {"threshold", c.threshold}, {"max_peers", optional_count(c.max_peers)}};
}

json to_json(const RecommendConfig& c) { return {{"top_n", c.top_n}, {"min_peer_rating", c.min_peer_rating}}; }

json to_json(const SyntheticSpec& spec) {
  json countries = json::array();
  for (const auto& [country, count] : spec.country_user_counts)
    countries.push_back({{"country", country.str()}, {"users", count}});
  return {{"countries", countries}, {"total_records", spec.total_records}, {"rating_bias", spec.rating_bias},
          {"seed", spec.seed},      {"items", spec.item_count}};
}

json to_json(const PeerList& peers) {
  json rows = json::array();
  for (const auto& p : peers.peers) {
    rows.push_back({{"peer", p.peer.str()},
                    {"raw_similarity", p.raw_similarity},
                    {"boosted_similarity", p.boosted_similarity},
                    {"co_rated_count", p.co_rated_count},
                    {"same_location", p.same_location}});
  }
  return {{"active_user", peers.active_user.str()}, {"config", to_json(peers.config)}, {"peers", rows}};
}

json to_json(const Recommendation& rec) {
  json items = json::array();
  for (const auto& item : rec.items)
    items.push_back({{"item_id", item.item.str()}, {"score", item.score}, {"item_country", item.item_country.str()}});
  return {{"active_user", rec.active_user.str()}, {"config", to_json(rec.config)}, {"items", items}};
}

json to_json(const EvalReport& r) {
  json rows = json::array();
  for (const auto& u : r.per_user) {
    rows.push_back({{"user", u.user.str()},
                    {"peer_count", u.peer_count},
                    {"same_location_peers", u.same_location_peers},
                    {"recommended_count", u.recommended_count},
                    {"same_location_items", u.same_location_items}});
  }
  return {{"alpha", r.alpha},
          {"threshold", r.threshold},
          {"max_peers", optional_count(r.max_peers)},
          {"top_n", r.top_n},
          {"min_peer_rating", r.min_peer_rating},
          {"peers_locality_rate", r.peers_locality_rate},
          {"item_locality_rate", r.item_locality_rate},
          {"users_evaluated", r.users_evaluated},
          {"users_skipped_empty_peers", r.users_skipped_empty_peers},
          {"per_user", rows}};
}

void write_summary_csv(std::ostream& out, std::span<const EvalReport> reports, const json& stanza) {
  write_stanza(out, stanza);
  out << kSummaryCsvHeader << '\n';
  for (const auto& r : reports) {
    out << format_double(r.alpha) << ',' << format_double(r.threshold) << ',' << format_double(r.peers_locality_rate)
        << ',' << format_double(r.item_locality_rate) << ',' << r.users_evaluated << ','
        << r.users_skipped_empty_peers << '\n';
  }
}

void write_plot_csv(std::ostream& out, std::span<const EvalReport> reports, const json& stanza) {
  write_stanza(out, stanza);
  out << kPlotCsvHeader << '\n';
  if (reports.empty()) return;
  const EvalReport& base = reports.front();
  for (const auto& r : reports) {
    const auto delta = report_delta(base, r);
    out << format_double(r.alpha) << ',' << format_double(r.peers_locality_rate * 100.0) << ','
        << format_double(r.item_locality_rate * 100.0) << ',' << format_double(delta.peers_delta_pp) << ','
        << format_double(delta.items_delta_pp) << '\n';
  }
}

void write_recommendation_csv(std::ostream& out, const Recommendation& rec, const json& stanza) {
  write_stanza(out, stanza);
  out << kRecommendationCsvHeader << '\n';
  std::size_t rank = 0;
  for (const auto& item : rec.items) {
    out << ++rank << ',';
    write_csv_field(out, item.item.str());
    out << ',' << format_double(item.score) << ',';
    write_csv_field(out, item.item_country.str());
    out << '\n';
  }
}

}  // namespace locarec
