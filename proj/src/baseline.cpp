#include "locarec/baseline.hpp"

#include <algorithm>

#include "locarec/similarity.hpp"

namespace locarec::baseline {

namespace {

kernels::PearsonSums merge_sums(const UserProfile& a, const UserProfile& b) {
  kernels::PearsonSums s;
  auto ia = a.ratings.begin();
  auto ib = b.ratings.begin();
  while (ia != a.ratings.end() && ib != b.ratings.end()) {
    if (ia->item < ib->item) {
      ++ia;
    } else if (ib->item < ia->item) {
      ++ib;
    } else {
      const std::int64_t x = ia->rating;
      const std::int64_t y = ib->rating;
      ++s.n;
      s.sum_a += x;
      s.sum_b += y;
      s.sum_aa += x * x;
      s.sum_bb += y * y;
      s.sum_ab += x * y;
      ++ia;
      ++ib;
    }
  }
  return s;
}

}  // namespace

PeerList find_peers(const Dataset& dataset, const UserId& active, double threshold,
                    std::optional<std::size_t> max_peers) {
  const PeeringConfig config{0.0, threshold, max_peers};
  config.validate();
  const UserIndex me = dataset.require_user(active);

  PeerList list{active, {}, config};
  for (UserIndex other = 0; other < dataset.user_count(); ++other) {
    if (other == me) continue;
    const auto sim = similarity_from_sums(merge_sums(dataset.user(me), dataset.user(other)));
    if (sim.value < threshold) continue;
    list.peers.push_back({dataset.user(other).id, sim.value, sim.value, sim.co_rated_count,
                          dataset.user(other).country == dataset.user(me).country});
  }
  std::sort(list.peers.begin(), list.peers.end(), [](const ScoredPeer& a, const ScoredPeer& b) {
    if (a.raw_similarity != b.raw_similarity) return a.raw_similarity > b.raw_similarity;
    return a.peer < b.peer;
  });
  if (max_peers && list.peers.size() > *max_peers) list.peers.resize(*max_peers);
  return list;
}

Recommendation recommend(const Dataset& dataset, const UserId& active, double threshold,
                         std::optional<std::size_t> max_peers, const RecommendConfig& config) {
  return locarec::recommend(dataset, find_peers(dataset, active, threshold, max_peers), config);
}

}  // namespace locarec::baseline
