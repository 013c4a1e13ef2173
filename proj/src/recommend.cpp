#include "locarec/recommend.hpp"

#include <algorithm>

namespace locarec {

void RecommendConfig::validate() const {
  if (top_n == 0) throw Error(ErrorCode::InvalidArgument, "top_n must be positive");
  if (min_peer_rating < Rating::kMin || min_peer_rating > Rating::kMax)
    throw Error(ErrorCode::InvalidArgument, "min_peer_rating must lie in [1, 5]");
}

Recommendation recommend(const Dataset& dataset, const PeerList& peers, const RecommendConfig& config) {
  config.validate();
  const UserIndex me = dataset.require_user(peers.active_user);
  Recommendation out{peers.active_user, {}, config};

  std::vector<double> weighted(dataset.item_count(), 0.0);
  std::vector<double> weight(dataset.item_count(), 0.0);
  for (const auto& peer : peers.peers) {
    const double w = peer.boosted_similarity;
    if (!(w > 0.0)) continue;
    const UserIndex p = dataset.require_user(peer.peer);
    for (const auto& entry : dataset.user(p).ratings) {
      if (entry.rating < config.min_peer_rating || dataset.rating(me, entry.item) != 0) continue;
      weighted[entry.item] += w * entry.rating;
      weight[entry.item] += w;
    }
  }

  for (ItemIndex i = 0; i < dataset.item_count(); ++i) {
    if (weight[i] == 0.0) continue;
    // A weighted mean of values in [min_peer_rating, 5]; the clamp only
    // removes rounding overshoot.
    const double score = std::clamp(weighted[i] / weight[i], static_cast<double>(config.min_peer_rating),
                                    static_cast<double>(Rating::kMax));
    out.items.push_back({dataset.item(i).id, score, dataset.item(i).country});
  }
  // Item indexes are already in id order, so a stable sort on score alone
  // breaks ties by ascending id.
  std::stable_sort(out.items.begin(), out.items.end(),
                   [](const RecommendedItem& a, const RecommendedItem& b) { return a.score > b.score; });
  if (out.items.size() > config.top_n) out.items.resize(config.top_n);
  return out;
}

}  // namespace locarec
