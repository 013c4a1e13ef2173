#pragma once

#include <vector>

#include "locarec/dataset.hpp"
#include "locarec/peering.hpp"

namespace locarec {

struct RecommendConfig {
  std::size_t top_n = 10;
  /// A peer rating counts as "top rated" at or above this value.
  int min_peer_rating = 4;

  void validate() const;
};

struct RecommendedItem {
  ItemId item;
  double score = 0.0;
  Country item_country;

  friend bool operator==(const RecommendedItem&, const RecommendedItem&) = default;
};

struct Recommendation {
  UserId active_user;
  std::vector<RecommendedItem> items;  // descending score, then ascending item id
  RecommendConfig config;
};

/// Candidates are items some peer rated >= min_peer_rating that the active
/// user has not rated. Each is scored by the similarity-weighted mean of the
/// qualifying peer ratings:
///   score(i) = sum_p w_p * r_{p,i} / sum_p w_p,   w_p = boosted similarity.
/// Peers with non-positive weight contribute nothing.
Recommendation recommend(const Dataset& dataset, const PeerList& peers, const RecommendConfig& config);

}  // namespace locarec
