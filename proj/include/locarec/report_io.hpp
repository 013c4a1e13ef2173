#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "locarec/eval.hpp"
#include "locarec/ingest.hpp"
#include "locarec/recommend.hpp"

namespace locarec {

/// SHA-256 of the canonical CSV export, as "sha256:<hex>".
std::string dataset_fingerprint(const Dataset& dataset);
std::string sha256_hex(std::string_view bytes);

nlohmann::json to_json(const IngestReport& report);
nlohmann::json to_json(const PeeringConfig& config);
nlohmann::json to_json(const RecommendConfig& config);
nlohmann::json to_json(const SyntheticSpec& spec);
nlohmann::json to_json(const PeerList& peers);
nlohmann::json to_json(const Recommendation& rec);
nlohmann::json to_json(const EvalReport& report);

inline constexpr std::string_view kSummaryCsvHeader =
    "alpha,threshold,peers_locality_rate,item_locality_rate,users_evaluated,users_skipped";
inline constexpr std::string_view kPlotCsvHeader =
    "alpha,peers_locality_pct,item_locality_pct,peers_delta_pp,items_delta_pp";
inline constexpr std::string_view kRecommendationCsvHeader = "rank,item_id,score,item_country";

// CSV writers emit `# run: <compact json>` before the header when `stanza`
// is not null.

void write_summary_csv(std::ostream& out, std::span<const EvalReport> reports, const nlohmann::json& stanza = {});

/// Rates in percent and deltas against the first report of the list.
void write_plot_csv(std::ostream& out, std::span<const EvalReport> reports, const nlohmann::json& stanza = {});

void write_recommendation_csv(std::ostream& out, const Recommendation& rec, const nlohmann::json& stanza = {});

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace locarec
