#include <sstream>

#include <gtest/gtest.h>

#include "locarec/report_io.hpp"
#include "test_support.hpp"

namespace locarec {
namespace {

TEST(Fingerprint, KnownDigest) {
  // SHA-256("abc")
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Fingerprint, TracksCanonicalExport) {
  const auto a = Dataset::build(testing::random_records(1, 10, 10, 2));
  auto records = a.records();
  std::reverse(records.begin(), records.end());
  const auto b = Dataset::build(records);
  EXPECT_EQ(dataset_fingerprint(a), dataset_fingerprint(b));
  EXPECT_EQ(dataset_fingerprint(a), "sha256:" + sha256_hex(export_csv_string(a)));
  records[0].rating = Rating(records[0].rating.value() % 5 + 1);
  EXPECT_NE(dataset_fingerprint(a), dataset_fingerprint(Dataset::build(records)));
}

EvalReport sample_report(double alpha, double peers, double items) {
  EvalReport r;
  r.alpha = alpha;
  r.max_peers = std::nullopt;
  r.peers_locality_rate = peers;
  r.item_locality_rate = items;
  r.users_evaluated = 100;
  r.users_skipped_empty_peers = 20;
  r.per_user.push_back({UserId("u1"), 4, 1, 10, 2});
  return r;
}

TEST(SummaryCsv, HeaderAndRows) {
  const std::vector<EvalReport> reports{sample_report(0.0, 0.141, 0.0146), sample_report(0.1, 0.1533, 0.017)};
  std::ostringstream out;
  write_summary_csv(out, reports);
  EXPECT_EQ(out.str(),
            "alpha,threshold,peers_locality_rate,item_locality_rate,users_evaluated,users_skipped\n"
            "0,0.5,0.141,0.0146,100,20\n"
            "0.1,0.5,0.1533,0.017,100,20\n");
}

TEST(SummaryCsv, StanzaIsACommentLine) {
  const std::vector<EvalReport> reports{sample_report(0.0, 0.5, 0.5)};
  std::ostringstream out;
  write_summary_csv(out, reports, nlohmann::json{{"seed", 42}});
  EXPECT_TRUE(out.str().starts_with("# run: {\"seed\":42}\nalpha,threshold"));
}

TEST(PlotCsv, DeltasAgainstFirstReport) {
  const std::vector<EvalReport> reports{sample_report(0.0, 0.25, 0.5), sample_report(0.3, 0.5, 0.75)};
  std::ostringstream out;
  write_plot_csv(out, reports);
  EXPECT_EQ(out.str(),
            "alpha,peers_locality_pct,item_locality_pct,peers_delta_pp,items_delta_pp\n"
            "0,25,50,0,0\n"
            "0.3,50,75,25,25\n");
}

TEST(Json, EvalReportFields) {
  const auto j = to_json(sample_report(0.2, 0.3, 0.4));
  EXPECT_EQ(j.at("alpha"), 0.2);
  EXPECT_TRUE(j.at("max_peers").is_null());
  EXPECT_EQ(j.at("users_skipped_empty_peers"), 20);
  EXPECT_EQ(j.at("per_user").at(0).at("same_location_items"), 2);
}

TEST(Json, IngestReport) {
  IngestReport r{5, 3, 1, {{7, RejectReason::RatingOutOfRange}}};
  const auto j = to_json(r);
  EXPECT_EQ(j.at("rejected_rows").at(0).at("reason"), "RatingOutOfRange");
  EXPECT_EQ(j.at("rejected_rows").at(0).at("line"), 7);
}

TEST(RecommendationCsv, Rows) {
  Recommendation rec{UserId("u"), {{ItemId("m1"), 4.5, Country("DK")}, {ItemId("m,2"), 4.0, Country("FR")}}, {}};
  std::ostringstream out;
  write_recommendation_csv(out, rec);
  EXPECT_EQ(out.str(), "rank,item_id,score,item_country\n1,m1,4.5,DK\n2,\"m,2\",4,FR\n");
}

}  // namespace
}  // namespace locarec
